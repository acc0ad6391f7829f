//! Simplicial complexes stored as per-dimension sorted lists of vertex tuples.
//!
//! A `k`-simplex is a strictly increasing tuple of `k + 1` vertex indices. The
//! global vertex order fixes the orientation used by the boundary operator.

use alloc::format;
use alloc::vec::Vec;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::cliques::{self, sort_tuples};
use crate::graph::Graph;
use crate::{rng, Budgets, Error, Result};

/// All `k`-simplices of a complex, flattened with stride `k + 1` and sorted
/// lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplexList {
  dim:  usize,
  flat: Vec<u32>,
}

impl SimplexList {
  pub fn empty(dim: usize) -> Self { Self { dim, flat: Vec::new() } }

  /// Takes tuples in any order; sorts each tuple and the list, dropping duplicates.
  pub fn from_unsorted(dim: usize, mut flat: Vec<u32>) -> Self {
    debug_assert_eq!(flat.len() % (dim + 1), 0);
    sort_tuples(&mut flat, dim + 1);
    Self { dim, flat }
  }

  fn from_sorted(dim: usize, flat: Vec<u32>) -> Self { Self { dim, flat } }

  pub fn dim(&self) -> usize { self.dim }

  pub fn len(&self) -> usize { self.flat.len() / (self.dim + 1) }

  pub fn is_empty(&self) -> bool { self.flat.is_empty() }

  pub fn get(&self, i: usize) -> &[u32] {
    let w = self.dim + 1;
    &self.flat[i * w..(i + 1) * w]
  }

  pub fn iter(&self) -> core::slice::ChunksExact<'_, u32> { self.flat.chunks_exact(self.dim + 1) }

  /// Position of `simplex` (an increasing tuple) in the list.
  pub fn index_of(&self, simplex: &[u32]) -> Option<usize> {
    if simplex.len() != self.dim + 1 {
      return None;
    }
    let (mut lo, mut hi) = (0, self.len());
    while lo < hi {
      let mid = (lo + hi) / 2;
      match self.get(mid).cmp(simplex) {
        core::cmp::Ordering::Less => lo = mid + 1,
        core::cmp::Ordering::Greater => hi = mid,
        core::cmp::Ordering::Equal => return Some(mid),
      }
    }
    None
  }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComplexKind {
  CliqueComplex,
  Abstract,
}

/// Family of vertex sets ("groups"); every subset of a group is a simplex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetSystem {
  n_vertices: usize,
  sets:       Vec<Vec<usize>>,
}

impl SetSystem {
  /// Sorts each set, drops repeated members and repeated sets.
  pub fn new(n_vertices: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
    let mut clean = Vec::with_capacity(sets.len());
    for (i, mut s) in sets.into_iter().enumerate() {
      if let Some(&bad) = s.iter().find(|&&v| v >= n_vertices) {
        return Err(Error::input(format!("set {i} has member {bad} outside 0..{n_vertices}")));
      }
      s.sort_unstable();
      s.dedup();
      clean.push(s);
    }
    clean.sort();
    clean.dedup();
    Ok(Self { n_vertices, sets: clean })
  }

  pub fn n_vertices(&self) -> usize { self.n_vertices }

  pub fn sets(&self) -> &[Vec<usize>] { &self.sets }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "ComplexRepr", try_from = "ComplexRepr")]
pub struct SimplicialComplex {
  n_vertices:    usize,
  dims:          Vec<SimplexList>,
  kind:          ComplexKind,
  truncated:     bool,
  quotient_face: Option<Vec<u32>>,
}

#[derive(Serialize, Deserialize)]
struct ComplexRepr {
  n_vertices:       usize,
  kind:             ComplexKind,
  truncated:        bool,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  quotient_face:    Option<Vec<u32>>,
  simplices_by_dim: Vec<Vec<Vec<u32>>>,
}

impl From<SimplicialComplex> for ComplexRepr {
  fn from(c: SimplicialComplex) -> Self {
    ComplexRepr {
      n_vertices:       c.n_vertices,
      kind:             c.kind,
      truncated:        c.truncated,
      simplices_by_dim: c.dims.iter().map(|d| d.iter().map(<[u32]>::to_vec).collect()).collect(),
      quotient_face:    c.quotient_face,
    }
  }
}

impl TryFrom<ComplexRepr> for SimplicialComplex {
  type Error = Error;

  fn try_from(r: ComplexRepr) -> Result<Self> {
    let mut dims = Vec::with_capacity(r.simplices_by_dim.len());
    for (k, list) in r.simplices_by_dim.into_iter().enumerate() {
      let mut flat = Vec::with_capacity(list.len() * (k + 1));
      for s in list {
        if s.len() != k + 1 {
          return Err(Error::input(format!("simplex {s:?} listed in dimension {k}")));
        }
        if let Some(&v) = s.iter().find(|&&v| v as usize >= r.n_vertices) {
          return Err(Error::input(format!("vertex {v} outside 0..{}", r.n_vertices)));
        }
        if s.windows(2).any(|w| w[0] >= w[1]) {
          return Err(Error::input(format!("simplex {s:?} is not strictly increasing")));
        }
        flat.extend_from_slice(&s);
      }
      dims.push(SimplexList::from_unsorted(k, flat));
    }
    let c = SimplicialComplex {
      n_vertices: r.n_vertices,
      dims,
      kind: r.kind,
      truncated: r.truncated,
      quotient_face: r.quotient_face,
    };
    if !c.is_downward_closed() {
      return Err(Error::input("complex is not closed under taking faces"));
    }
    Ok(c)
  }
}

impl SimplicialComplex {
  fn from_table(n_vertices: usize, table: cliques::CliqueTable, kind: ComplexKind, quotient_face: Option<Vec<u32>>) -> Self {
    let dims = table.by_dim.into_iter().enumerate().map(|(k, f)| SimplexList::from_sorted(k, f)).collect();
    let mut c = Self { n_vertices, dims, kind, truncated: table.truncated, quotient_face };
    c.trim();
    c
  }

  fn trim(&mut self) {
    while self.dims.last().is_some_and(SimplexList::is_empty) {
      self.dims.pop();
    }
  }

  /// Clique complex `Cl(graph)` up to dimension `budgets.max_dim`.
  pub fn clique_complex(graph: &Graph, budgets: &Budgets) -> Result<Self> {
    let table = cliques::enumerate_cliques(graph, budgets.max_dim, budgets.max_simplices, None)?;
    Ok(Self::from_table(graph.n_vertices(), table, ComplexKind::CliqueComplex, None))
  }

  /// Clique complex with every simplex inside the clique `face` left out.
  ///
  /// The stored simplices generate the relative chain complex of `(Cl(graph), face)`.
  /// Because the closure of a simplex is contractible, the Betti numbers of this complex
  /// are the reduced Betti numbers of `Cl(graph)`.
  pub fn clique_complex_relative(graph: &Graph, face: &[usize], budgets: &Budgets) -> Result<Self> {
    if face.is_empty() {
      return Err(Error::input("quotient face must be non-empty"));
    }
    if face.iter().any(|&v| v >= graph.n_vertices()) || !graph.is_clique(face) {
      return Err(Error::input("quotient face must be a clique of the graph"));
    }
    let mut set = BitSet::new(graph.n_vertices());
    for &v in face {
      set.insert(v);
    }
    let table = cliques::enumerate_cliques(graph, budgets.max_dim, budgets.max_simplices, Some(&set))?;
    let mut sorted: Vec<u32> = face.iter().map(|&v| v as u32).collect();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(Self::from_table(graph.n_vertices(), table, ComplexKind::CliqueComplex, Some(sorted)))
  }

  /// The `k`-skeleton of the `n`-simplex: all subsets of `{0..=n}` with at most `k + 1`
  /// elements.
  pub fn k_skeleton_of_simplex(n: usize, k: usize, budgets: &Budgets) -> Result<Self> {
    if k > n {
      return Err(Error::input(format!("skeleton dimension {k} exceeds simplex dimension {n}")));
    }
    let g = Graph::complete(n + 1);
    let table = cliques::enumerate_cliques(&g, k, budgets.max_simplices, None)?;
    let mut c = Self::from_table(n + 1, table, ComplexKind::Abstract, None);
    c.truncated = false;
    Ok(c)
  }

  /// Simplices of dimension at most `k` whose vertices all lie in a common set.
  pub fn from_set_system(system: &SetSystem, k: usize, budgets: &Budgets) -> Result<Self> {
    let top = k.min(budgets.max_dim);
    let mut dims: Vec<Vec<u32>> = Vec::new();
    let mut stored = 0usize;
    let mut truncated = false;
    for set in system.sets() {
      let g = Graph::complete(set.len());
      let t = cliques::walk_cliques(&g, top, None, |c| {
        stored += 1;
        if stored > budgets.max_simplices {
          return Err(Error::budget("max_simplices", budgets.max_simplices as u64, "set system expands to too many simplices"));
        }
        if dims.len() < c.len() {
          dims.resize_with(c.len(), Vec::new);
        }
        dims[c.len() - 1].extend(c.iter().map(|&i| set[i as usize] as u32));
        Ok(())
      })?;
      truncated |= t && top < k;
    }
    let dims = dims.into_iter().enumerate().map(|(d, f)| SimplexList::from_unsorted(d, f)).collect();
    let mut c = Self { n_vertices: system.n_vertices(), dims, kind: ComplexKind::Abstract, truncated, quotient_face: None };
    c.trim();
    Ok(c)
  }

  /// Abstract complex generated by the given faces (typically its maximal faces).
  pub fn from_maximal_faces(n_vertices: usize, faces: Vec<Vec<usize>>, budgets: &Budgets) -> Result<Self> {
    let system = SetSystem::new(n_vertices, faces)?;
    Self::from_set_system(&system, usize::MAX, budgets)
  }

  /// Disjoint union; vertices of `other` are shifted by `self.n_vertices()`.
  pub fn disjoint_union(&self, other: &Self) -> Self {
    let top = self.dims.len().max(other.dims.len());
    let shift = self.n_vertices as u32;
    let dims = (0..top)
      .map(|k| {
        let mut flat = self.dims.get(k).map(|d| d.flat.clone()).unwrap_or_default();
        if let Some(d) = other.dims.get(k) {
          flat.extend(d.flat.iter().map(|&v| v + shift));
        }
        SimplexList::from_unsorted(k, flat)
      })
      .collect();
    let kind = if self.kind == other.kind { self.kind } else { ComplexKind::Abstract };
    Self {
      n_vertices: self.n_vertices + other.n_vertices,
      dims,
      kind,
      truncated: self.truncated || other.truncated,
      quotient_face: None,
    }
  }

  pub fn n_vertices(&self) -> usize { self.n_vertices }

  pub fn kind(&self) -> ComplexKind { self.kind }

  /// Higher-dimensional simplices exist but were cut off by `max_dim`.
  pub fn is_truncated(&self) -> bool { self.truncated }

  pub fn quotient_face(&self) -> Option<&[u32]> { self.quotient_face.as_deref() }

  /// Number of stored dimensions (`top_dim + 1`), zero for the empty complex.
  pub fn n_dims(&self) -> usize { self.dims.len() }

  pub fn top_dim(&self) -> Option<usize> { self.dims.len().checked_sub(1) }

  pub fn simplices(&self, k: usize) -> Option<&SimplexList> { self.dims.get(k) }

  /// `|S_k|`, zero beyond the stored dimensions.
  pub fn count(&self, k: usize) -> usize { self.dims.get(k).map_or(0, SimplexList::len) }

  pub fn counts(&self) -> Vec<usize> { self.dims.iter().map(SimplexList::len).collect() }

  pub fn total_simplices(&self) -> usize { self.dims.iter().map(SimplexList::len).sum() }

  pub fn contains(&self, simplex: &[u32]) -> bool {
    simplex.len().checked_sub(1).and_then(|k| self.dims.get(k)).is_some_and(|d| d.index_of(simplex).is_some())
  }

  fn in_quotient(&self, simplex: &[u32]) -> bool {
    self.quotient_face.as_ref().is_some_and(|f| simplex.iter().all(|v| f.binary_search(v).is_ok()))
  }

  /// Every codimension-one face of every stored simplex is stored (or lies in the
  /// quotient face).
  pub fn is_downward_closed(&self) -> bool {
    let mut face = Vec::new();
    for k in 1..self.dims.len() {
      for s in self.dims[k].iter() {
        for i in 0..s.len() {
          face.clear();
          face.extend(s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v));
          if !self.in_quotient(&face) && self.dims[k - 1].index_of(&face).is_none() {
            return false;
          }
        }
      }
    }
    true
  }

  /// Draws one `k`-simplex, each with probability `1/|S_k|`.
  pub fn sample_uniform_simplex(&self, k: usize, seed: u64) -> Result<&[u32]> {
    let mut g = rng::generator(seed);
    self.sample_with(k, &mut g)
  }

  pub fn sample_with<R: Rng>(&self, k: usize, rng: &mut R) -> Result<&[u32]> {
    let list = self.dims.get(k).filter(|d| !d.is_empty()).ok_or(Error::EmptyDimension(k))?;
    Ok(list.get(rng.random_range(0..list.len())))
  }

  /// Indices of `count` uniform draws from `S_k`.
  pub fn sample_indices(&self, k: usize, count: usize, seed: u64) -> Result<Vec<usize>> {
    let len = self.count(k);
    if len == 0 {
      return Err(Error::EmptyDimension(k));
    }
    let mut g = rng::generator(seed);
    Ok((0..count).map(|_| g.random_range(0..len)).collect())
  }
}

#[cfg(test)]
mod tests {
  use alloc::vec;

  use super::*;

  fn b() -> Budgets { Budgets::default() }

  #[test]
  fn clique_complex_counts() {
    assert_eq!(SimplicialComplex::clique_complex(&Graph::complete(4), &b()).unwrap().counts(), vec![4, 6, 4, 1]);
    let c4 = SimplicialComplex::clique_complex(&Graph::cycle(4), &b()).unwrap();
    assert_eq!(c4.counts(), vec![4, 4]);
    assert_eq!(c4.count(2), 0);
    let iso = SimplicialComplex::clique_complex(&Graph::empty(3), &b()).unwrap();
    assert_eq!(iso.counts(), vec![3]);
  }

  #[test]
  fn skeleta() {
    assert_eq!(SimplicialComplex::k_skeleton_of_simplex(3, 1, &b()).unwrap().counts(), vec![4, 6]);
    assert_eq!(SimplicialComplex::k_skeleton_of_simplex(3, 3, &b()).unwrap().counts(), vec![4, 6, 4, 1]);
    assert_eq!(SimplicialComplex::k_skeleton_of_simplex(5, 2, &b()).unwrap().counts(), vec![6, 15, 20]);
    assert!(SimplicialComplex::k_skeleton_of_simplex(2, 3, &b()).is_err());
  }

  #[test]
  fn set_systems() {
    let one = SetSystem::new(3, vec![vec![0, 1, 2]]).unwrap();
    let c = SimplicialComplex::from_set_system(&one, 2, &b()).unwrap();
    assert_eq!(c.simplices(2).unwrap().get(0), &[0, 1, 2]);
    let two = SetSystem::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
    let c = SimplicialComplex::from_set_system(&two, 1, &b()).unwrap();
    let edges: Vec<&[u32]> = c.simplices(1).unwrap().iter().collect();
    assert_eq!(edges, vec![&[0, 1][..], &[0, 2], &[1, 2], &[1, 3], &[2, 3]]);
    let pairs = SetSystem::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
    assert_eq!(SimplicialComplex::from_set_system(&pairs, 2, &b()).unwrap().count(2), 0);
    assert!(SetSystem::new(2, vec![vec![0, 2]]).is_err());
  }

  #[test]
  fn sampling_single_simplex_and_empty_dimension() {
    let one = SetSystem::new(3, vec![vec![0, 1, 2]]).unwrap();
    let c = SimplicialComplex::from_set_system(&one, 2, &b()).unwrap();
    for seed in 0..10 {
      assert_eq!(c.sample_uniform_simplex(2, seed).unwrap(), &[0, 1, 2]);
    }
    assert_eq!(c.sample_uniform_simplex(3, 0), Err(Error::EmptyDimension(3)));
  }

  #[test]
  fn k4_vertex_frequencies() {
    let c = SimplicialComplex::clique_complex(&Graph::complete(4), &b()).unwrap();
    let draws = c.sample_indices(0, 4000, 5).unwrap();
    for v in 0..4 {
      let f = draws.iter().filter(|&&d| d == v).count() as f64 / 4000.0;
      assert!((f - 0.25).abs() <= 0.05, "vertex {v}: {f}");
    }
  }

  #[test]
  fn relative_complex_is_downward_closed_modulo_face() {
    let c = SimplicialComplex::clique_complex_relative(&Graph::complete(4), &[2, 3], &b()).unwrap();
    assert_eq!(c.counts(), vec![2, 5, 4, 1]);
    assert!(c.is_downward_closed());
  }

  #[test]
  fn json_shape_rejects_open_complexes() {
    let repr = ComplexRepr {
      n_vertices:       3,
      kind:             ComplexKind::Abstract,
      truncated:        false,
      quotient_face:    None,
      simplices_by_dim: vec![vec![vec![0], vec![1]], vec![vec![0, 2]]],
    };
    assert!(SimplicialComplex::try_from(repr).is_err());
  }
}
