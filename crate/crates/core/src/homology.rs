//! Betti numbers from exact boundary ranks, and Euler characteristics.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::boundary::BoundaryMatrix;
use crate::complex::SimplicialComplex;
use crate::field::{self, PRIMES};
use crate::{Error, Result};

/// Ranks of `∂_1 … ∂_top`, agreed on by two primes (or recomputed over ℚ).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankProfile {
  /// `ranks[k] = rank ∂_k`; `ranks[0] = 0`.
  pub ranks:             Vec<usize>,
  pub primes:            [u64; 2],
  /// Dimensions whose two prime ranks disagreed and were recomputed over ℚ.
  pub rational_fallback: Vec<usize>,
}

/// Ranks of every boundary operator of the stored complex, top dimension first so
/// pivot rows of `∂_{k+1}` clear columns of `∂_k`.
pub fn boundary_ranks(complex: &SimplicialComplex) -> Result<RankProfile> {
  let top = complex.n_dims();
  let mats: Vec<BoundaryMatrix> = (1..top).map(|k| BoundaryMatrix::from_complex(complex, k)).collect::<Result<_>>()?;
  let mut per_prime = [vec![0usize; top.max(1)], vec![0usize; top.max(1)]];
  for (pi, &p) in PRIMES.iter().enumerate() {
    let mut clear: Option<BitSet> = None;
    for k in (1..top).rev() {
      let m = &mats[k - 1];
      let red = field::rank_mod_p(m, p, clear.as_ref());
      per_prime[pi][k] = red.rank;
      let mut next = BitSet::new(m.n_rows());
      for r in red.pivot_rows {
        next.insert(r as usize);
      }
      clear = Some(next);
    }
  }
  let mut ranks = per_prime[0].clone();
  let mut rational_fallback = Vec::new();
  for k in 1..top {
    if per_prime[0][k] != per_prime[1][k] {
      ranks[k] = field::rank_rational(&mats[k - 1]);
      rational_fallback.push(k);
    }
  }
  Ok(RankProfile { ranks, primes: PRIMES, rational_fallback })
}

/// Rank of a single boundary operator, checked against the second prime.
pub fn boundary_rank(complex: &SimplicialComplex, k: usize) -> Result<usize> {
  if k == 0 || (k >= complex.n_dims() && !complex.is_truncated()) {
    return Ok(0);
  }
  let m = BoundaryMatrix::from_complex(complex, k)?;
  let a = field::rank_mod_p(&m, PRIMES[0], None).rank;
  let b = field::rank_mod_p(&m, PRIMES[1], None).rank;
  Ok(if a == b { a } else { field::rank_rational(&m) })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HomologyResult {
  /// `β_0, …` for every dimension whose Betti number is determined.
  pub betti:             Vec<u64>,
  /// `c_k = β_k / |S_k|`, `None` where `S_k` is empty.
  pub normalized:        Vec<Option<f64>>,
  pub simplex_counts:    Vec<usize>,
  /// `Σ (-1)^k |S_k|`; absent when the complex was truncated.
  pub euler_from_counts: Option<i64>,
  /// `Σ (-1)^k β_k`; absent when the complex was truncated.
  pub euler_from_betti:  Option<i64>,
  pub boundary_ranks:    Vec<usize>,
  pub primes:            [u64; 2],
  pub rational_fallback: Vec<usize>,
  /// Enumeration stopped at the top stored dimension, whose Betti number is undefined.
  pub truncated:         bool,
  /// Homology is relative to a quotient face, i.e. reduced homology of the full complex.
  pub relative:          bool,
}

impl HomologyResult {
  /// Reduced Betti numbers: `β̃_0 = β_0 − 1` for non-empty complexes. Relative results
  /// are already reduced.
  pub fn reduced(&self) -> Vec<i64> {
    let mut out: Vec<i64> = self.betti.iter().map(|&b| b as i64).collect();
    if !self.relative && self.simplex_counts.first().is_some_and(|&n| n > 0) {
      out[0] -= 1;
    }
    out
  }
}

/// `β_k = |S_k| − rank ∂_k − rank ∂_{k+1}` for every determined `k`.
pub fn betti_numbers(complex: &SimplicialComplex) -> Result<HomologyResult> {
  let profile = boundary_ranks(complex)?;
  let counts = complex.counts();
  let top = complex.n_dims();
  let defined = if complex.is_truncated() { top.saturating_sub(1) } else { top };
  let rank = |k: usize| profile.ranks.get(k).copied().unwrap_or(0);
  let mut betti = Vec::with_capacity(defined);
  for k in 0..defined {
    let b = counts[k] as i64 - rank(k) as i64 - rank(k + 1) as i64;
    if b < 0 {
      return Err(Error::Integrity(format!("negative Betti number in dimension {k}")));
    }
    betti.push(b as u64);
  }
  let normalized = betti.iter().zip(&counts).map(|(&b, &n)| (n > 0).then(|| b as f64 / n as f64)).collect();
  let (euler_from_counts, euler_from_betti) = if complex.is_truncated() {
    (None, None)
  } else {
    (Some(alternating_sum(counts.iter().map(|&c| c as i64))), Some(alternating_sum(betti.iter().map(|&b| b as i64))))
  };
  Ok(HomologyResult {
    betti,
    normalized,
    simplex_counts: counts,
    euler_from_counts,
    euler_from_betti,
    boundary_ranks: profile.ranks,
    primes: profile.primes,
    rational_fallback: profile.rational_fallback,
    truncated: complex.is_truncated(),
    relative: complex.quotient_face().is_some(),
  })
}

/// `β_k` alone, from the two ranks it needs.
pub fn betti_at(complex: &SimplicialComplex, k: usize) -> Result<u64> {
  if complex.is_truncated() && k + 1 >= complex.n_dims() {
    return Err(Error::State(format!("β_{k} needs dimension {} which was not enumerated", k + 1)));
  }
  let b = complex.count(k) as i64 - boundary_rank(complex, k)? as i64 - boundary_rank(complex, k + 1)? as i64;
  u64::try_from(b).map_err(|_| Error::Integrity(format!("negative Betti number in dimension {k}")))
}

fn alternating_sum(values: impl Iterator<Item = i64>) -> i64 {
  values.enumerate().map(|(k, v)| if k % 2 == 0 { v } else { -v }).sum()
}

/// `χ = Σ (-1)^k |S_k|` over a fully enumerated complex.
pub fn euler_characteristic(complex: &SimplicialComplex) -> Result<i64> {
  if complex.is_truncated() {
    return Err(Error::State(format!(
      "complex truncated at dimension {}; Euler characteristic needs every dimension",
      complex.n_dims().saturating_sub(1)
    )));
  }
  Ok(alternating_sum(complex.counts().into_iter().map(|c| c as i64)))
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::graph::Graph;
  use crate::Budgets;

  fn clique(g: &Graph) -> SimplicialComplex { SimplicialComplex::clique_complex(g, &Budgets::default()).unwrap() }

  #[test]
  fn basic_betti_vectors() {
    assert_eq!(betti_numbers(&clique(&Graph::complete(5))).unwrap().betti, vec![1, 0, 0, 0, 0]);
    assert_eq!(betti_numbers(&clique(&Graph::cycle(4))).unwrap().betti, vec![1, 1]);
    assert_eq!(betti_numbers(&clique(&Graph::empty(3))).unwrap().betti, vec![3]);
  }

  #[test]
  fn euler_values() {
    assert_eq!(euler_characteristic(&clique(&Graph::complete(6))).unwrap(), 1);
    let capped = SimplicialComplex::clique_complex(&Graph::complete(5), &Budgets { max_dim: 2, ..Budgets::default() }).unwrap();
    assert!(matches!(euler_characteristic(&capped), Err(Error::State(_))));
    let r = betti_numbers(&capped).unwrap();
    assert_eq!(r.betti, vec![1, 0]);
    assert!(r.truncated && r.euler_from_counts.is_none());
  }

  #[test]
  fn relative_to_a_face_gives_reduced_homology() {
    let g = Graph::cycle(5);
    let full = betti_numbers(&clique(&g)).unwrap();
    let rel = SimplicialComplex::clique_complex_relative(&g, &[1, 2], &Budgets::default()).unwrap();
    let r = betti_numbers(&rel).unwrap();
    assert_eq!(full.reduced(), vec![0, 1]);
    assert_eq!(r.reduced(), vec![0, 1]);
  }

  #[test]
  fn single_betti_matches_full_vector() {
    let c = clique(&Graph::cycle(6).complement());
    let all = betti_numbers(&c).unwrap();
    for k in 0..all.betti.len() {
      assert_eq!(betti_at(&c, k).unwrap(), all.betti[k]);
    }
  }
}
