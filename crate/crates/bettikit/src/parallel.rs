//! Rayon drivers whose output is identical to the sequential core routines.

use bettikit_core::experiments::{assemble, run_trial, SweepOutput, SweepSpec};
use bettikit_core::lgz::{batch_sizes, estimate_with, LgzEstimate, LgzRunConfig, LgzSampler};
use bettikit_core::{Budgets, Result};
use rayon::prelude::*;

/// Runs every (cell, trial) pair in parallel; rows are sorted before aggregation.
pub fn run_sweep(spec: &SweepSpec, budgets: &Budgets) -> Result<SweepOutput> {
  spec.validate()?;
  let jobs: Vec<_> = spec.cells()?.into_iter().flat_map(|c| (0..spec.trials).map(move |t| (c.clone(), t))).collect();
  let rows = jobs.par_iter().map(|(cell, t)| run_trial(spec, cell, *t, budgets)).collect::<Result<Vec<_>>>()?;
  Ok(assemble(rows))
}

/// Zero readings counted batch by batch in parallel.
pub fn estimate(sampler: &LgzSampler, config: &LgzRunConfig) -> LgzEstimate {
  let sizes: Vec<u64> = batch_sizes(config.samples).collect();
  let zeros = sizes.par_iter().enumerate().map(|(b, &size)| sampler.zeros_in_batch(config.seed, b as u64, size)).sum();
  estimate_with(sampler, config, zeros)
}
