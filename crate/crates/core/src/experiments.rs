//! Random-complex sweeps: Vietoris–Rips regimes, Erdős–Rényi windows and speedup factors.
//!
//! Trial `t` of cell `c` uses seed `derive_seed(derive_seed(spec.seed, c), t)`, so every
//! row is reproducible on its own and the order trials run in does not matter.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use serde::{Deserialize, Serialize};

use crate::combinatorics::binomial;
use crate::complex::SimplicialComplex;
use crate::graph::{random_graph, RandomModel};
use crate::homology;
use crate::lgz::{inf_f64, ExactRatio};
use crate::rng::derive_seed;
use crate::{Budgets, Error, Result};

/// Schema version of [`SweepRow`] and [`CellSummary`] tables.
pub const SWEEP_SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
  Subcritical,
  Critical,
  Supercritical,
}

impl fmt::Display for Regime {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    f.write_str(match self {
      Regime::Subcritical => "subcritical",
      Regime::Critical => "critical",
      Regime::Supercritical => "supercritical",
    })
  }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct RegimeThresholds {
  pub lower: f64,
  pub upper: f64,
}

impl Default for RegimeThresholds {
  fn default() -> Self { Self { lower: 0.5, upper: 2.0 } }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegimeLabel {
  pub regime: Regime,
  /// `ε / r̂`.
  pub ratio:  f64,
  /// `r̂ = n^(-1/d)`.
  pub r_hat:  f64,
  pub lower:  f64,
  pub upper:  f64,
}

/// `r̂ = n^(-1/d)`, the typical spacing of `n` uniform points in the unit `d`-cube.
pub fn r_hat(n: usize, d: usize) -> f64 { libm::pow(n as f64, -1.0 / d as f64) }

pub fn classify_regime(n: usize, d: usize, epsilon: f64, thresholds: RegimeThresholds) -> Result<RegimeLabel> {
  if n < 2 || d < 1 {
    return Err(Error::input(format!("regime needs n ≥ 2 and d ≥ 1, got n = {n}, d = {d}")));
  }
  if !(epsilon >= 0.0 && epsilon.is_finite()) {
    return Err(Error::input(format!("epsilon must be finite and non-negative, got {epsilon}")));
  }
  if !(thresholds.lower <= thresholds.upper) {
    return Err(Error::input("regime thresholds must satisfy lower ≤ upper"));
  }
  let r = r_hat(n, d);
  let ratio = epsilon / r;
  let regime = if ratio < thresholds.lower {
    Regime::Subcritical
  } else if ratio > thresholds.upper {
    Regime::Supercritical
  } else {
    Regime::Critical
  };
  Ok(RegimeLabel { regime, ratio, r_hat: r, lower: thresholds.lower, upper: thresholds.upper })
}

/// Midpoint, on the log scale, of the window `(n^(-1/k), n^(-1/(k+1)))` where `β_k` of a
/// random clique complex dominates.
pub fn er_window_midpoint(n: usize, k: usize) -> Result<f64> {
  if k == 0 || n < 2 {
    return Err(Error::input("the Erdős–Rényi window needs k ≥ 1 and n ≥ 2"));
  }
  let exponent = (1.0 / k as f64 + 1.0 / (k as f64 + 1.0)) / 2.0;
  Ok(libm::pow(n as f64, -exponent))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SweepGrid {
  VietorisRips {
    n:              Vec<usize>,
    d:              usize,
    /// `ε` as multiples of `r̂ = n^(-1/d)`.
    #[serde(default)]
    epsilon_ratios: Vec<f64>,
    /// Absolute `ε` values.
    #[serde(default)]
    epsilons:       Vec<f64>,
  },
  ErdosRenyi {
    n:               Vec<usize>,
    #[serde(default)]
    p:               Vec<f64>,
    /// Add the window midpoint `p` for each `n`.
    #[serde(default)]
    window_midpoint: bool,
  },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
  #[serde(default)]
  pub name:       String,
  pub grid:       SweepGrid,
  pub k:          usize,
  pub trials:     usize,
  #[serde(default)]
  pub seed:       u64,
  #[serde(default)]
  pub thresholds: RegimeThresholds,
  /// Where the CLI writes the CSV table; ignored by the library.
  #[serde(default)]
  pub output:     Option<String>,
}

/// One grid point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepCell {
  pub index:         usize,
  pub model:         RandomModel,
  pub epsilon_ratio: Option<f64>,
}

impl SweepSpec {
  pub fn validate(&self) -> Result<()> {
    if self.trials == 0 {
      return Err(Error::input("trials must be at least 1"));
    }
    if self.cells()?.is_empty() {
      return Err(Error::input("sweep grid is empty"));
    }
    Ok(())
  }

  /// Grid points in canonical order: by `n`, then by `ε` ratio / `ε` / `p` as listed.
  pub fn cells(&self) -> Result<Vec<SweepCell>> {
    let mut out = Vec::new();
    let mut push = |model: RandomModel, epsilon_ratio: Option<f64>| -> Result<()> {
      model.validate()?;
      out.push(SweepCell { index: out.len(), model, epsilon_ratio });
      Ok(())
    };
    match &self.grid {
      SweepGrid::VietorisRips { n, d, epsilon_ratios, epsilons } => {
        for &n in n {
          for &r in epsilon_ratios {
            push(RandomModel::VietorisRips { n, d: *d, epsilon: r * r_hat(n, *d) }, Some(r))?;
          }
          for &e in epsilons {
            push(RandomModel::VietorisRips { n, d: *d, epsilon: e }, None)?;
          }
        }
      },
      SweepGrid::ErdosRenyi { n, p, window_midpoint } => {
        for &n in n {
          if *window_midpoint {
            push(RandomModel::ErdosRenyi { n, p: er_window_midpoint(n, self.k)? }, None)?;
          }
          for &p in p {
            push(RandomModel::ErdosRenyi { n, p }, None)?;
          }
        }
      },
    }
    Ok(out)
  }
}

pub fn trial_seed(master: u64, cell: usize, trial: usize) -> u64 { derive_seed(derive_seed(master, cell as u64), trial as u64) }

/// One (cell, trial) result. Flat so it maps to a CSV record.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
  pub cell:          usize,
  pub trial:         usize,
  pub model:         String,
  pub n:             usize,
  pub d:             Option<usize>,
  pub p:             Option<f64>,
  pub epsilon:       Option<f64>,
  pub epsilon_ratio: Option<f64>,
  pub k:             usize,
  pub n_simplices:   Option<u64>,
  pub beta_k:        Option<u64>,
  pub c_k:           Option<f64>,
  /// `β_k / |S_k|` reduced.
  pub c_k_exact:     Option<ExactRatio>,
  pub binomial:      Option<u128>,
  pub zeta_k:        Option<f64>,
  pub zeta_k_exact:  Option<ExactRatio>,
  #[serde(with = "opt_inf")]
  pub xi:            Option<f64>,
  /// `C(n, k+1) / β_k` reduced; empty when `β_k = 0`.
  pub xi_squared:    Option<ExactRatio>,
  pub regime:        Option<Regime>,
  pub seed:          u64,
  /// `ok`, or `skipped: <reason>` when a budget was exceeded.
  pub status:        String,
}

mod opt_inf {
  use serde::{Deserialize, Deserializer, Serializer};

  use super::inf_f64;

  pub fn serialize<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
      Some(x) => inf_f64::serialize(x, s),
      None => s.serialize_none(),
    }
  }

  #[derive(Deserialize)]
  struct Wrap(#[serde(with = "inf_f64")] f64);

  pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
    Ok(Option::<Wrap>::deserialize(d)?.map(|w| w.0))
  }
}

/// Runs trial `trial` of `cell`.
pub fn run_trial(spec: &SweepSpec, cell: &SweepCell, trial: usize, budgets: &Budgets) -> Result<SweepRow> {
  let seed = trial_seed(spec.seed, cell.index, trial);
  let k = spec.k;
  let (model, d, p, epsilon, regime) = match cell.model {
    RandomModel::VietorisRips { n, d, epsilon } => {
      ("vietoris-rips", Some(d), None, Some(epsilon), Some(classify_regime(n, d, epsilon, spec.thresholds)?.regime))
    },
    RandomModel::ErdosRenyi { p, .. } => ("erdos-renyi", None, Some(p), None, None),
  };
  let n = cell.model.n();
  let mut row = SweepRow {
    cell: cell.index,
    trial,
    model: model.to_string(),
    n,
    d,
    p,
    epsilon,
    epsilon_ratio: cell.epsilon_ratio,
    k,
    n_simplices: None,
    beta_k: None,
    c_k: None,
    c_k_exact: None,
    binomial: None,
    zeta_k: None,
    zeta_k_exact: None,
    xi: None,
    xi_squared: None,
    regime,
    seed,
    status: String::from("ok"),
  };
  let graph = random_graph(&cell.model, seed)?;
  // β_k needs dimensions k and k + 1 only
  let local = Budgets { max_dim: k + 1, ..*budgets };
  let computed = SimplicialComplex::clique_complex(&graph, &local).and_then(|c| Ok((c.count(k) as u64, homology::betti_at(&c, k)?)));
  let (size, beta) = match computed {
    Ok(v) => v,
    Err(e) if e.is_budget() => {
      row.status = format!("skipped: {e}");
      return Ok(row);
    },
    Err(e) => return Err(e),
  };
  let binom = binomial(n as u64, k as u64 + 1).ok_or_else(|| Error::input(format!("C({n}, {}) overflows 128 bits", k + 1)))?;
  row.n_simplices = Some(size);
  row.beta_k = Some(beta);
  row.binomial = Some(binom);
  if size > 0 {
    let c = ExactRatio::new(beta as u128, size as u128);
    row.c_k = Some(c.to_f64());
    row.c_k_exact = Some(c);
  }
  if binom > 0 {
    let z = ExactRatio::new(size as u128, binom);
    row.zeta_k = Some(z.to_f64());
    row.zeta_k_exact = Some(z);
  }
  if beta > 0 {
    let x = ExactRatio::new(binom, beta as u128);
    row.xi = Some(libm::sqrt(x.to_f64()));
    row.xi_squared = Some(x);
  } else {
    row.xi = Some(f64::INFINITY);
  }
  Ok(row)
}

/// Per-cell statistics over the trials that completed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CellSummary {
  pub cell:              usize,
  pub model:             String,
  pub n:                 usize,
  pub d:                 Option<usize>,
  pub p:                 Option<f64>,
  pub epsilon:           Option<f64>,
  pub epsilon_ratio:     Option<f64>,
  pub k:                 usize,
  pub trials_ok:         usize,
  pub trials_skipped:    usize,
  pub mean_beta_k:       Option<f64>,
  /// Sample variance (denominator `trials − 1`).
  pub var_beta_k:        Option<f64>,
  /// `1.96 · sqrt(var / trials)`.
  pub ci95_beta_k:       Option<f64>,
  pub mean_n_simplices:  Option<f64>,
  pub mean_c_k:          Option<f64>,
  pub median_c_k:        Option<f64>,
  /// `max β_k / n^(k/2 + 1/2)` over the cell's trials.
  pub max_goff_ratio:    Option<f64>,
  pub regime:            Option<Regime>,
}

fn median(mut v: Vec<f64>) -> Option<f64> {
  if v.is_empty() {
    return None;
  }
  v.sort_by(f64::total_cmp);
  let m = v.len() / 2;
  Some(if v.len() % 2 == 1 { v[m] } else { (v[m - 1] + v[m]) / 2.0 })
}

/// Mean and sample variance.
pub fn mean_var(values: &[f64]) -> (Option<f64>, Option<f64>) {
  if values.is_empty() {
    return (None, None);
  }
  let n = values.len() as f64;
  let mean = values.iter().sum::<f64>() / n;
  let var = (values.len() > 1).then(|| values.iter().map(|x| (x - mean) * (x - mean)).sum::<f64>() / (n - 1.0));
  (Some(mean), var)
}

pub fn summarize(rows: &[SweepRow]) -> Vec<CellSummary> {
  let mut out: Vec<CellSummary> = Vec::new();
  let mut start = 0;
  while start < rows.len() {
    let cell = rows[start].cell;
    let end = start + rows[start..].iter().take_while(|r| r.cell == cell).count();
    let group = &rows[start..end];
    let ok: Vec<&SweepRow> = group.iter().filter(|r| r.beta_k.is_some()).collect();
    let betas: Vec<f64> = ok.iter().map(|r| r.beta_k.unwrap() as f64).collect();
    let (mean_beta_k, var_beta_k) = mean_var(&betas);
    let sizes: Vec<f64> = ok.iter().map(|r| r.n_simplices.unwrap() as f64).collect();
    let cks: Vec<f64> = ok.iter().filter_map(|r| r.c_k).collect();
    let first = &group[0];
    let goff = libm::pow(first.n as f64, first.k as f64 / 2.0 + 0.5);
    out.push(CellSummary {
      cell,
      model: first.model.clone(),
      n: first.n,
      d: first.d,
      p: first.p,
      epsilon: first.epsilon,
      epsilon_ratio: first.epsilon_ratio,
      k: first.k,
      trials_ok: ok.len(),
      trials_skipped: group.len() - ok.len(),
      mean_beta_k,
      var_beta_k,
      ci95_beta_k: var_beta_k.map(|v| 1.96 * libm::sqrt(v / betas.len() as f64)),
      mean_n_simplices: mean_var(&sizes).0,
      mean_c_k: mean_var(&cks).0,
      median_c_k: median(cks),
      max_goff_ratio: betas.iter().copied().reduce(f64::max).map(|b| b / goff),
      regime: first.regime,
    });
    start = end;
  }
  out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepOutput {
  pub rows:    Vec<SweepRow>,
  pub summary: Vec<CellSummary>,
}

/// Sorts rows by (cell, trial) and aggregates them.
pub fn assemble(mut rows: Vec<SweepRow>) -> SweepOutput {
  rows.sort_by_key(|r| (r.cell, r.trial));
  let summary = summarize(&rows);
  SweepOutput { rows, summary }
}

/// Sequential sweep. Cells whose trials exceed a budget are marked skipped.
pub fn run_sweep(spec: &SweepSpec, budgets: &Budgets) -> Result<SweepOutput> {
  spec.validate()?;
  let mut rows = Vec::new();
  for cell in spec.cells()? {
    for t in 0..spec.trials {
      rows.push(run_trial(spec, &cell, t, budgets)?);
    }
  }
  Ok(assemble(rows))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpeedupRow {
  pub name:           String,
  pub n:              usize,
  pub k:              usize,
  pub n_simplices:    u64,
  pub beta_k:         u64,
  #[serde(with = "inf_f64")]
  pub xi:             f64,
  pub xi_squared:     Option<ExactRatio>,
  pub t_classical:    u128,
  #[serde(with = "inf_f64")]
  pub t_q_lower:      f64,
  /// `n^(k/2 + 1/2)`, the best known Vietoris–Rips Betti growth.
  pub goff_reference: f64,
  pub goff_ratio:     f64,
  /// `β_k = 0`: no speedup factor.
  pub beta_zero:      bool,
}

/// Speedup factor `ξ = sqrt(C(n, k+1) / β_k)` for each named complex, `n` its vertex count.
pub fn speedup_table(complexes: &[(&str, &SimplicialComplex)], k: usize) -> Result<Vec<SpeedupRow>> {
  complexes
    .iter()
    .map(|&(name, c)| {
      let n = c.n_vertices();
      let beta = homology::betti_at(c, k)?;
      let binom = binomial(n as u64, k as u64 + 1).ok_or_else(|| Error::input(format!("C({n}, {}) overflows 128 bits", k + 1)))?;
      let xi_squared = (beta > 0).then(|| ExactRatio::new(binom, beta as u128));
      let xi = xi_squared.map_or(f64::INFINITY, |x| libm::sqrt(x.to_f64()));
      let goff = libm::pow(n as f64, k as f64 / 2.0 + 0.5);
      Ok(SpeedupRow {
        name: name.to_string(),
        n,
        k,
        n_simplices: c.count(k) as u64,
        beta_k: beta,
        xi,
        xi_squared,
        t_classical: binom,
        t_q_lower: xi,
        goff_reference: goff,
        goff_ratio: beta as f64 / goff,
        beta_zero: beta == 0,
      })
    })
    .collect()
}
