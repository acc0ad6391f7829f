//! Signed boundary operators `∂_k : C_k → C_{k-1}`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::complex::SimplicialComplex;
use crate::{Error, Result};

/// Sparse column-major `|S_{k-1}| × |S_k|` matrix with entries in `{+1, -1}`.
///
/// The column of a simplex `(v_0 < … < v_k)` carries `(-1)^i` in the row of the face
/// that omits `v_i`. Rows and columns follow the sorted simplex lists of the complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
  dim:     usize,
  rows:    usize,
  columns: Vec<Vec<(u32, i8)>>,
}

impl BoundaryMatrix {
  pub fn from_complex(complex: &SimplicialComplex, k: usize) -> Result<Self> {
    if k == 0 {
      return Err(Error::input("boundary operators start at k = 1"));
    }
    if k >= complex.n_dims() && complex.is_truncated() {
      return Err(Error::State(format!("dimension {k} was not enumerated (complex truncated at {})", complex.n_dims() - 1)));
    }
    let rows = complex.count(k - 1);
    let Some(cols) = complex.simplices(k) else {
      return Ok(Self { dim: k, rows, columns: Vec::new() });
    };
    let faces = complex.simplices(k - 1).expect("downward closure");
    let quotient = complex.quotient_face();
    let mut columns = Vec::with_capacity(cols.len());
    let mut face = Vec::with_capacity(k);
    for s in cols.iter() {
      let mut col = Vec::with_capacity(k + 1);
      for i in 0..=k {
        face.clear();
        face.extend_from_slice(&s[..i]);
        face.extend_from_slice(&s[i + 1..]);
        match faces.index_of(&face) {
          Some(row) => col.push((row as u32, if i % 2 == 0 { 1 } else { -1 })),
          None if quotient.is_some_and(|q| face.iter().all(|v| q.binary_search(v).is_ok())) => {},
          None => return Err(Error::State(format!("face {face:?} of {s:?} is missing"))),
        }
      }
      col.sort_unstable_by_key(|&(r, _)| r);
      columns.push(col);
    }
    Ok(Self { dim: k, rows, columns })
  }

  pub fn dim(&self) -> usize { self.dim }

  pub fn n_rows(&self) -> usize { self.rows }

  pub fn n_cols(&self) -> usize { self.columns.len() }

  pub fn nnz(&self) -> usize { self.columns.iter().map(Vec::len).sum() }

  /// Column `j` as `(row, sign)` pairs sorted by row.
  pub fn column(&self, j: usize) -> &[(u32, i8)] { &self.columns[j] }

  pub fn columns(&self) -> &[Vec<(u32, i8)>] { &self.columns }

  /// `(row, col, sign)` triplets in column-major order.
  pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, i8)> + '_ {
    self.columns.iter().enumerate().flat_map(|(j, c)| c.iter().map(move |&(r, s)| (r as usize, j, s)))
  }

  /// Row-major view: for each row, the `(column, sign)` pairs in it.
  pub fn transpose_rows(&self) -> Vec<Vec<(u32, i8)>> {
    let mut rows = alloc::vec![Vec::new(); self.rows];
    for (j, c) in self.columns.iter().enumerate() {
      for &(r, s) in c {
        rows[r as usize].push((j as u32, s));
      }
    }
    rows
  }

  /// Integer product `self · upper`, as sparse columns without zero entries.
  pub fn compose(&self, upper: &BoundaryMatrix) -> Result<Vec<Vec<(u32, i64)>>> {
    if upper.rows != self.n_cols() {
      return Err(Error::input(format!("cannot compose {}×{} with {}×{}", self.rows, self.n_cols(), upper.rows, upper.n_cols())));
    }
    Ok(
      upper
        .columns
        .iter()
        .map(|col| {
          let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
          for &(mid, s) in col {
            for &(r, t) in &self.columns[mid as usize] {
              *acc.entry(r).or_insert(0) += i64::from(s) * i64::from(t);
            }
          }
          acc.into_iter().filter(|&(_, v)| v != 0).collect()
        })
        .collect(),
    )
  }
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::graph::Graph;
  use crate::Budgets;

  #[test]
  fn triangle_signs() {
    let c = SimplicialComplex::clique_complex(&Graph::complete(3), &Budgets::default()).unwrap();
    let d2 = BoundaryMatrix::from_complex(&c, 2).unwrap();
    // rows: {0,1}, {0,2}, {1,2}
    assert_eq!(d2.column(0), &[(0, 1), (1, -1), (2, 1)]);
    let d1 = BoundaryMatrix::from_complex(&c, 1).unwrap();
    // edge {0,1}: omit vertex 0 -> {1} gets +1, omit vertex 1 -> {0} gets -1
    assert_eq!(d1.column(0), &[(0, -1), (1, 1)]);
  }

  #[test]
  fn boundary_of_boundary_vanishes_on_k4() {
    let c = SimplicialComplex::clique_complex(&Graph::complete(4), &Budgets::default()).unwrap();
    for k in 2..=3 {
      let lower = BoundaryMatrix::from_complex(&c, k - 1).unwrap();
      let upper = BoundaryMatrix::from_complex(&c, k).unwrap();
      assert!(lower.compose(&upper).unwrap().iter().all(Vec::is_empty));
    }
  }

  #[test]
  fn empty_and_unenumerated_dimensions() {
    let c = SimplicialComplex::clique_complex(&Graph::cycle(4), &Budgets::default()).unwrap();
    let d2 = BoundaryMatrix::from_complex(&c, 2).unwrap();
    assert_eq!((d2.n_rows(), d2.n_cols()), (4, 0));
    let capped = SimplicialComplex::clique_complex(&Graph::complete(5), &Budgets { max_dim: 1, ..Budgets::default() }).unwrap();
    assert!(matches!(BoundaryMatrix::from_complex(&capped, 2), Err(Error::State(_))));
    assert!(BoundaryMatrix::from_complex(&c, 0).is_err());
    assert_eq!(d2.triplets().count(), 0);
    assert_eq!(BoundaryMatrix::from_complex(&c, 1).unwrap().nnz(), 8);
  }
}
