//! Exact rank of sparse integer matrices over prime fields and over the rationals.
//!
//! Ranks are computed by left-to-right column reduction: each column is reduced
//! against earlier columns sharing its lowest non-zero row until that row is free.
//! Passing the pivot rows found in `∂_{k+1}` as `skip` when reducing `∂_k` avoids
//! work on columns that are known to reduce to zero.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bitset::BitSet;
use crate::boundary::BoundaryMatrix;

/// Two primes above 2^20; ranks agreeing modulo both are accepted.
pub const PRIMES: [u64; 2] = [2_147_483_647, 1_000_000_007];

pub trait Field {
  type Elem: Clone + PartialEq + Debug;

  fn from_i64(&self, v: i64) -> Self::Elem;
  fn is_zero(&self, a: &Self::Elem) -> bool;
  fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
  fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
  fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

/// `Z/pZ` for a prime `p < 2^32`.
#[derive(Clone, Copy, Debug)]
pub struct PrimeField {
  p: u64,
}

impl PrimeField {
  pub fn new(p: u64) -> Self {
    assert!(p >= 2 && p < 1 << 32, "modulus must fit in 32 bits");
    Self { p }
  }

  pub fn modulus(&self) -> u64 { self.p }

  fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
      if exp & 1 == 1 {
        acc = acc * base % self.p;
      }
      base = base * base % self.p;
      exp >>= 1;
    }
    acc
  }
}

impl Field for PrimeField {
  type Elem = u64;

  fn from_i64(&self, v: i64) -> u64 { v.rem_euclid(self.p as i64) as u64 }

  fn is_zero(&self, a: &u64) -> bool { *a == 0 }

  fn sub(&self, a: &u64, b: &u64) -> u64 { (a + self.p - b) % self.p }

  fn mul(&self, a: &u64, b: &u64) -> u64 { a * b % self.p }

  fn inv(&self, a: &u64) -> u64 {
    debug_assert!(*a != 0);
    self.pow(*a, self.p - 2)
  }
}

/// The rational numbers, with arbitrary precision.
#[derive(Clone, Copy, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
  type Elem = BigRational;

  fn from_i64(&self, v: i64) -> BigRational { BigRational::from_integer(BigInt::from(v)) }

  fn is_zero(&self, a: &BigRational) -> bool { a.is_zero() }

  fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational { a - b }

  fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational { a * b }

  fn inv(&self, a: &BigRational) -> BigRational { BigRational::one() / a }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
  pub rank:       usize,
  /// Lowest row of every non-zero reduced column, in column order.
  pub pivot_rows: Vec<u32>,
}

/// Rank of a signed sparse matrix over `field`. Columns flagged in `skip` are assumed
/// to reduce to zero and are not touched.
pub fn reduce<F: Field>(field: &F, n_rows: usize, columns: &[Vec<(u32, i8)>], skip: Option<&BitSet>) -> Reduction {
  let mut pivot_of_row: Vec<u32> = vec![u32::MAX; n_rows];
  let mut reduced: Vec<Vec<(u32, F::Elem)>> = Vec::new();
  let mut pivot_rows = Vec::new();
  let mut scratch: Vec<(u32, F::Elem)> = Vec::new();
  for (j, col) in columns.iter().enumerate() {
    if skip.is_some_and(|s| s.contains(j)) {
      continue;
    }
    let mut cur: Vec<(u32, F::Elem)> = col.iter().map(|&(r, s)| (r, field.from_i64(i64::from(s)))).collect();
    while let Some((low, coeff)) = cur.last().cloned() {
      let slot = pivot_of_row[low as usize];
      if slot == u32::MAX {
        // normalise so the pivot entry is 1
        let inv = field.inv(&coeff);
        for (_, v) in cur.iter_mut() {
          *v = field.mul(v, &inv);
        }
        pivot_of_row[low as usize] = reduced.len() as u32;
        pivot_rows.push(low);
        reduced.push(cur);
        break;
      }
      axpy(field, &mut cur, &coeff, &reduced[slot as usize], &mut scratch);
    }
  }
  Reduction { rank: reduced.len(), pivot_rows }
}

/// `cur ← cur − factor · other`, both sorted by row.
fn axpy<F: Field>(field: &F, cur: &mut Vec<(u32, F::Elem)>, factor: &F::Elem, other: &[(u32, F::Elem)], out: &mut Vec<(u32, F::Elem)>) {
  out.clear();
  let (mut i, mut j) = (0, 0);
  while i < cur.len() || j < other.len() {
    let take_cur = j >= other.len() || (i < cur.len() && cur[i].0 < other[j].0);
    let take_other = i >= cur.len() || (j < other.len() && other[j].0 < cur[i].0);
    if take_cur {
      out.push(cur[i].clone());
      i += 1;
    } else if take_other {
      let v = field.sub(&field.from_i64(0), &field.mul(factor, &other[j].1));
      out.push((other[j].0, v));
      j += 1;
    } else {
      let v = field.sub(&cur[i].1, &field.mul(factor, &other[j].1));
      if !field.is_zero(&v) {
        out.push((cur[i].0, v));
      }
      i += 1;
      j += 1;
    }
  }
  core::mem::swap(cur, out);
}

pub fn rank_mod_p(m: &BoundaryMatrix, p: u64, skip: Option<&BitSet>) -> Reduction {
  reduce(&PrimeField::new(p), m.n_rows(), m.columns(), skip)
}

pub fn rank_rational(m: &BoundaryMatrix) -> usize { reduce(&Rationals, m.n_rows(), m.columns(), None).rank }

#[cfg(test)]
mod tests {
  use super::*;

  fn dense(cols: &[&[(u32, i8)]]) -> Vec<Vec<(u32, i8)>> { cols.iter().map(|c| c.to_vec()).collect() }

  #[test]
  fn ranks_of_small_matrices() {
    let m = dense(&[&[(0, 1), (1, -1)], &[(1, 1), (2, -1)], &[(0, 1), (2, -1)]]);
    assert_eq!(reduce(&PrimeField::new(PRIMES[0]), 3, &m, None).rank, 2);
    assert_eq!(reduce(&Rationals, 3, &m, None).rank, 2);
  }

  #[test]
  fn characteristic_two_accident() {
    // [[1,1],[1,-1]] is singular mod 2 only
    let m = dense(&[&[(0, 1), (1, 1)], &[(0, 1), (1, -1)]]);
    assert_eq!(reduce(&PrimeField::new(2), 2, &m, None).rank, 1);
    assert_eq!(reduce(&PrimeField::new(PRIMES[1]), 2, &m, None).rank, 2);
    assert_eq!(reduce(&Rationals, 2, &m, None).rank, 2);
  }

  #[test]
  fn inverse_mod_p() {
    let f = PrimeField::new(PRIMES[1]);
    for a in [1u64, 2, 3, 12345, PRIMES[1] - 1] {
      assert_eq!(f.mul(&a, &f.inv(&a)), 1);
    }
    assert_eq!(f.from_i64(-1), PRIMES[1] - 1);
  }
}
