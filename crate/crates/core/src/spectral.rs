//! Hodge Laplacians, their spectra, and the Dirac operator.
//!
//! `Δ_k = ∂_kᵀ ∂_k + ∂_{k+1} ∂_{k+1}ᵀ` is assembled densely from the sparse boundary
//! operators; spectra come from nalgebra's symmetric eigensolver. An eigenvalue is
//! classified as zero when `|λ| ≤ max(|S_k|, n) · ε_machine · λ_max`.

use alloc::format;
use alloc::vec::Vec;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::boundary::BoundaryMatrix;
use crate::complex::SimplicialComplex;
use crate::homology;
use crate::{Error, Result};

fn laplacian_from(down: Option<&BoundaryMatrix>, up: Option<&BoundaryMatrix>, size: usize) -> DMatrix<f64> {
  let mut lap = DMatrix::<f64>::zeros(size, size);
  if let Some(d) = down {
    // ∂_kᵀ ∂_k: columns sharing a row of ∂_k interact
    for row in d.transpose_rows() {
      for &(a, s) in &row {
        for &(b, t) in &row {
          lap[(a as usize, b as usize)] += f64::from(s) * f64::from(t);
        }
      }
    }
  }
  if let Some(u) = up {
    for col in u.columns() {
      for &(a, s) in col {
        for &(b, t) in col {
          lap[(a as usize, b as usize)] += f64::from(s) * f64::from(t);
        }
      }
    }
  }
  lap
}

/// Dense `|S_k| × |S_k|` Hodge Laplacian.
pub fn hodge_laplacian(complex: &SimplicialComplex, k: usize) -> Result<DMatrix<f64>> {
  let size = complex.count(k);
  if size == 0 {
    return Err(Error::EmptyDimension(k));
  }
  if complex.is_truncated() && k + 1 >= complex.n_dims() {
    return Err(Error::State(format!("Δ_{k} needs dimension {} which was not enumerated", k + 1)));
  }
  let down = if k > 0 { Some(BoundaryMatrix::from_complex(complex, k)?) } else { None };
  let up = BoundaryMatrix::from_complex(complex, k + 1)?;
  Ok(laplacian_from(down.as_ref(), Some(&up), size))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralSummary {
  pub dim_k:              usize,
  /// Ascending eigenvalues of `Δ_k`; values within `tolerance` of zero are stored as 0.
  pub eigenvalues:        Vec<f64>,
  pub lambda_min_nonzero: Option<f64>,
  pub lambda_max:         f64,
  /// `λ_max / λ_min_nonzero`; absent when the spectrum is all zero.
  pub kappa:              Option<f64>,
  pub nullity:            usize,
  pub tolerance:          f64,
  /// Largest absolute row sum of `Δ_k`.
  pub gershgorin_bound:   f64,
  /// `β_k` from exact boundary ranks, which the nullity was checked against.
  pub betti_rank:         u64,
}

fn check_cap(size: usize, cap: usize, what: &str) -> Result<()> {
  if size > cap {
    return Err(Error::budget(
      "eigensolver_cap",
      cap as u64,
      format!("{what} has size {size}; use the exact rank path (homology betti) instead"),
    ));
  }
  Ok(())
}

/// Eigenvalues of a symmetric matrix, ascending.
pub fn symmetric_eigenvalues(m: DMatrix<f64>) -> Vec<f64> {
  let mut ev: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
  ev.sort_by(f64::total_cmp);
  ev
}

pub fn zero_tolerance(size: usize, n_vertices: usize, lambda_max: f64) -> f64 {
  size.max(n_vertices) as f64 * f64::EPSILON * lambda_max
}

/// Full spectrum of `Δ_k`, with the nullity cross-checked against `β_k` from ranks.
pub fn spectrum(complex: &SimplicialComplex, k: usize, eigensolver_cap: usize) -> Result<SpectralSummary> {
  check_cap(complex.count(k), eigensolver_cap, &format!("Δ_{k}"))?;
  let lap = hodge_laplacian(complex, k)?;
  let gershgorin_bound = (0..lap.nrows()).map(|i| lap.row(i).iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max);
  let mut eigenvalues = symmetric_eigenvalues(lap);
  let lambda_max = eigenvalues.last().copied().unwrap_or(0.0).max(0.0);
  let tolerance = zero_tolerance(eigenvalues.len(), complex.n_vertices(), lambda_max);
  for v in &mut eigenvalues {
    if v.abs() <= tolerance {
      *v = 0.0;
    }
  }
  if let Some(&neg) = eigenvalues.iter().find(|&&v| v < 0.0) {
    return Err(Error::Integrity(format!("Δ_{k} has negative eigenvalue {neg} beyond tolerance {tolerance}")));
  }
  let nullity = eigenvalues.iter().filter(|&&v| v == 0.0).count();
  let lambda_min_nonzero = eigenvalues.iter().copied().find(|&v| v > 0.0);
  let betti_rank = homology::betti_at(complex, k)?;
  if nullity as u64 != betti_rank {
    return Err(Error::Integrity(format!("nullity of Δ_{k} is {nullity} but rank-based β_{k} is {betti_rank}")));
  }
  Ok(SpectralSummary {
    dim_k: k,
    kappa: lambda_min_nonzero.map(|m| lambda_max / m),
    eigenvalues,
    lambda_min_nonzero,
    lambda_max,
    nullity,
    tolerance,
    gershgorin_bound,
    betti_rank,
  })
}

/// Per-dimension summaries plus the condition number of `Δ = ⊕_k Δ_k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GlobalSpectrum {
  pub per_dim:            Vec<SpectralSummary>,
  pub lambda_min_nonzero: Option<f64>,
  pub lambda_max:         f64,
  pub kappa:              Option<f64>,
}

pub fn global_spectrum(complex: &SimplicialComplex, eigensolver_cap: usize) -> Result<GlobalSpectrum> {
  if complex.is_truncated() {
    return Err(Error::State("global spectrum needs every dimension".into()));
  }
  let per_dim: Vec<SpectralSummary> = (0..complex.n_dims()).map(|k| spectrum(complex, k, eigensolver_cap)).collect::<Result<_>>()?;
  let lambda_max = per_dim.iter().map(|s| s.lambda_max).fold(0.0, f64::max);
  let lambda_min_nonzero = per_dim.iter().filter_map(|s| s.lambda_min_nonzero).reduce(f64::min);
  Ok(GlobalSpectrum { kappa: lambda_min_nonzero.map(|m| lambda_max / m), per_dim, lambda_min_nonzero, lambda_max })
}

/// Offsets of each dimension's block in the direct sum `⊕_k C_k`.
pub fn block_offsets(complex: &SimplicialComplex) -> Vec<usize> {
  let mut offsets = Vec::with_capacity(complex.n_dims() + 1);
  let mut acc = 0;
  offsets.push(0);
  for c in complex.counts() {
    acc += c;
    offsets.push(acc);
  }
  offsets
}

/// Symmetric block-tridiagonal Dirac operator `B` with `∂_k` in block `(k-1, k)` and
/// `∂_kᵀ` in block `(k, k-1)`. `B² = ⊕_k Δ_k`.
pub fn dirac_operator(complex: &SimplicialComplex, eigensolver_cap: usize) -> Result<DMatrix<f64>> {
  if complex.is_truncated() {
    return Err(Error::State("Dirac operator needs every dimension".into()));
  }
  let total = complex.total_simplices();
  check_cap(total, eigensolver_cap, "Dirac operator")?;
  let offsets = block_offsets(complex);
  let mut b = DMatrix::<f64>::zeros(total, total);
  for k in 1..complex.n_dims() {
    let d = BoundaryMatrix::from_complex(complex, k)?;
    for (r, c, s) in d.triplets() {
      let (i, j) = (offsets[k - 1] + r, offsets[k] + c);
      b[(i, j)] = f64::from(s);
      b[(j, i)] = f64::from(s);
    }
  }
  Ok(b)
}
