//! Clique complexes, exact simplicial homology and the statistics of the
//! Lloyd–Garnerone–Zanardi (LGZ) Betti-number estimator.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the command
//! line and parallel drivers live in the companion `bettikit` crate.
//!
//! Module map:
//! - [`graph`], [`cliques`], [`complex`]: graphs, point clouds and simplicial complexes.
//! - [`boundary`], [`field`], [`homology`], [`spectral`]: boundary operators, exact ranks,
//!   Betti numbers, Hodge Laplacians and the Dirac operator.
//! - [`cnf`], [`gadgets`]: DIMACS formulas, the #SAT → Euler characteristic reduction and the
//!   Alexander-dual/suspension reduction for co-chordal graphs.
//! - [`lgz`]: eigenvalue sampling, normalized Betti estimation and cost formulas.
//! - [`experiments`]: random-complex sweeps, regime labels and speedup tables.
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bitset;
pub mod boundary;
pub mod census;
pub mod cliques;
pub mod cnf;
pub mod combinatorics;
pub mod complex;
pub mod error;
pub mod experiments;
pub mod field;
pub mod gadgets;
pub mod graph;
pub mod homology;
pub mod lgz;
pub mod rng;
pub mod spectral;

pub use error::{Error, Result};

/// Budgets guarding against the exponential size of clique complexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Budgets {
  /// Highest simplex dimension that is enumerated.
  pub max_dim:          usize,
  /// Maximum number of simplices stored in a complex.
  pub max_simplices:    usize,
  /// Maximum number of cliques visited by streaming counters (nothing is stored).
  pub max_enumerated:   u64,
  /// Largest matrix handed to the dense symmetric eigensolver.
  pub eigensolver_cap:  usize,
}

impl Default for Budgets {
  fn default() -> Self {
    Self { max_dim: 16, max_simplices: 2_000_000, max_enumerated: 1_000_000_000, eigensolver_cap: 4096 }
  }
}
