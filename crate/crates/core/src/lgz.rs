//! Classical simulation of the LGZ Betti-number estimator and its cost formulas.
//!
//! The maximally mixed state over `k`-simplices makes phase estimation return each
//! eigenvalue of `Δ_k` with probability `1/|S_k|` per multiplicity. Phase estimation
//! itself is modelled as threshold rounding: after rescaling by `scale` (the exact
//! `λ_max`, or the Gershgorin row-sum bound), an eigenvalue is reported as zero iff
//! `λ / scale < 2^-b` and otherwise rounded down to the `b`-bit grid.
//!
//! Cost formulas are the asymptotic expressions with every hidden constant set to 1;
//! values are dimensionless formula units.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::combinatorics::{binomial, binomial_f64};
use crate::complex::SimplicialComplex;
use crate::rng;
use crate::spectral::{self, SpectralSummary};
use crate::{Error, Result};

/// Draws per sampling batch; batch `i` uses seed `derive_seed(seed, i)`.
pub const BATCH_SIZE: u64 = 4096;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rescale {
  /// Divide by the exact largest eigenvalue of `Δ_k`.
  #[default]
  Exact,
  /// Divide by the Gershgorin bound (largest absolute row sum), which may over-rescale.
  Gershgorin,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default)]
pub struct LgzRunConfig {
  pub k:                     usize,
  pub samples:               u64,
  /// Phase-register bits; `None` means `⌈log2 κ⌉ + 1`.
  pub qpe_bits:              Option<u32>,
  pub additive_eps:          f64,
  pub mult_delta:            f64,
  pub seed:                  u64,
  pub rescale:               Rescale,
  /// Clique-dense means `ζ_k^-1 ≤ n^c` for this `c`.
  pub clique_dense_exponent: f64,
}

impl Default for LgzRunConfig {
  fn default() -> Self {
    Self {
      k:                     0,
      samples:               2000,
      qpe_bits:              None,
      additive_eps:          0.05,
      mult_delta:            0.1,
      seed:                  0,
      rescale:               Rescale::Exact,
      clique_dense_exponent: 3.0,
    }
  }
}

impl LgzRunConfig {
  pub fn validate(&self) -> Result<()> {
    if self.samples == 0 {
      return Err(Error::input("samples must be at least 1"));
    }
    if self.qpe_bits == Some(0) || self.qpe_bits.is_some_and(|b| b > 62) {
      return Err(Error::input("qpe_bits must lie in 1..=62"));
    }
    let unit = |x: f64| x > 0.0 && x < 1.0;
    if !unit(self.additive_eps) || !unit(self.mult_delta) {
      return Err(Error::input("additive_eps and mult_delta must lie strictly between 0 and 1"));
    }
    if !(self.clique_dense_exponent.is_finite() && self.clique_dense_exponent >= 0.0) {
      return Err(Error::input("clique_dense_exponent must be finite and non-negative"));
    }
    Ok(())
  }
}

/// `⌈log2 κ⌉ + 1`, the resolution at which no nonzero eigenvalue rounds to zero.
pub fn default_qpe_bits(kappa: Option<f64>) -> u32 {
  match kappa {
    Some(k) if k > 1.0 => libm::ceil(libm::log2(k)) as u32 + 1,
    _ => 1,
  }
}

/// Spectrum of `Δ_k` prepared for repeated sampling.
#[derive(Clone, Debug)]
pub struct LgzSampler {
  spectrum:   SpectralSummary,
  qpe_bits:   u32,
  scale:      f64,
  rescale:    Rescale,
  degenerate: bool,
}

impl LgzSampler {
  pub fn new(complex: &SimplicialComplex, config: &LgzRunConfig, eigensolver_cap: usize) -> Result<Self> {
    config.validate()?;
    let spectrum = spectral::spectrum(complex, config.k, eigensolver_cap)?;
    Ok(Self::from_spectrum(spectrum, config))
  }

  pub fn from_spectrum(spectrum: SpectralSummary, config: &LgzRunConfig) -> Self {
    let qpe_bits = config.qpe_bits.unwrap_or_else(|| default_qpe_bits(spectrum.kappa));
    let scale = match config.rescale {
      Rescale::Exact => spectrum.lambda_max,
      Rescale::Gershgorin => spectrum.gershgorin_bound.max(spectrum.lambda_max),
    };
    let degenerate = spectrum.lambda_max == 0.0;
    Self { spectrum, qpe_bits, scale, rescale: config.rescale, degenerate }
  }

  pub fn spectrum(&self) -> &SpectralSummary { &self.spectrum }

  pub fn qpe_bits(&self) -> u32 { self.qpe_bits }

  pub fn scale(&self) -> f64 { self.scale }

  /// All eigenvalues are zero; every sample reports 0.
  pub fn is_degenerate(&self) -> bool { self.degenerate }

  /// The phase-estimation reading of eigenvalue `lambda`.
  pub fn round(&self, lambda: f64) -> f64 {
    if self.degenerate {
      return 0.0;
    }
    let steps = (1u64 << self.qpe_bits) as f64;
    let phase = lambda / self.scale;
    if phase < 1.0 / steps { 0.0 } else { libm::floor(phase * steps) / steps * self.scale }
  }

  /// Nonzero eigenvalues (with multiplicity) that the rounding reports as zero.
  pub fn false_zeros(&self) -> usize {
    self.spectrum.eigenvalues.iter().filter(|&&l| l > 0.0 && self.round(l) == 0.0).count()
  }

  /// `count` rounded draws for batch `batch` of the run seeded by `seed`.
  pub fn sample_batch(&self, seed: u64, batch: u64, count: u64) -> Vec<f64> {
    let mut g = rng::generator(rng::derive_seed(seed, batch));
    let ev = &self.spectrum.eigenvalues;
    (0..count).map(|_| self.round(ev[g.random_range(0..ev.len())])).collect()
  }

  /// `count` rounded draws, batched as [`BATCH_SIZE`].
  pub fn sample(&self, seed: u64, count: u64) -> Vec<f64> {
    let mut out = Vec::with_capacity(count as usize);
    for (batch, size) in batch_sizes(count).enumerate() {
      out.extend(self.sample_batch(seed, batch as u64, size));
    }
    out
  }

  /// Number of zero readings among `count` draws, without storing them.
  pub fn count_zeros(&self, seed: u64, count: u64) -> u64 {
    batch_sizes(count).enumerate().map(|(b, size)| self.zeros_in_batch(seed, b as u64, size)).sum()
  }

  pub fn zeros_in_batch(&self, seed: u64, batch: u64, count: u64) -> u64 {
    self.sample_batch(seed, batch, count).iter().filter(|&&x| x == 0.0).count() as u64
  }
}

/// Sizes of the batches covering `count` draws.
pub fn batch_sizes(count: u64) -> impl Iterator<Item = u64> {
  let full = count / BATCH_SIZE;
  let rest = count % BATCH_SIZE;
  (0..full).map(|_| BATCH_SIZE).chain((rest > 0).then_some(rest))
}

/// Rounded eigenvalue draws from `Δ_k`.
pub fn sample_eigenvalue(complex: &SimplicialComplex, config: &LgzRunConfig, count: u64, eigensolver_cap: usize) -> Result<Vec<f64>> {
  Ok(LgzSampler::new(complex, config, eigensolver_cap)?.sample(config.seed, count))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LgzEstimate {
  pub k:                  usize,
  pub samples:            u64,
  pub qpe_bits:           u32,
  pub rescale:            Rescale,
  pub scale:              f64,
  pub zero_count:         u64,
  pub c_k_hat:            f64,
  pub c_k_true:           f64,
  pub beta_k:             u64,
  pub n_simplices:        usize,
  pub abs_error:          f64,
  pub additive_eps:       f64,
  pub within_eps:         bool,
  /// `2 exp(-2 M ε²)`, the Hoeffding bound on `P(|ĉ − c| > ε)` without false zeros.
  pub hoeffding_failure:  f64,
  /// Fraction of nonzero eigenvalues (with multiplicity) rounded to zero.
  pub false_zero_rate:    f64,
  pub kappa:              Option<f64>,
  pub degenerate:         bool,
  pub seed:               u64,
}

/// `ĉ_k = zero_count / M` from a prepared sampler.
pub fn estimate_with(sampler: &LgzSampler, config: &LgzRunConfig, zero_count: u64) -> LgzEstimate {
  let spec = sampler.spectrum();
  let size = spec.eigenvalues.len();
  let nonzero = size - spec.nullity;
  let c_k_hat = zero_count as f64 / config.samples as f64;
  let c_k_true = spec.betti_rank as f64 / size as f64;
  let abs_error = libm::fabs(c_k_hat - c_k_true);
  LgzEstimate {
    k: config.k,
    samples: config.samples,
    qpe_bits: sampler.qpe_bits(),
    rescale: sampler.rescale,
    scale: sampler.scale(),
    zero_count,
    c_k_hat,
    c_k_true,
    beta_k: spec.betti_rank,
    n_simplices: size,
    abs_error,
    additive_eps: config.additive_eps,
    within_eps: abs_error <= config.additive_eps,
    hoeffding_failure: 2.0 * libm::exp(-2.0 * config.samples as f64 * config.additive_eps * config.additive_eps),
    false_zero_rate: if nonzero == 0 { 0.0 } else { sampler.false_zeros() as f64 / nonzero as f64 },
    kappa: spec.kappa,
    degenerate: sampler.is_degenerate(),
    seed: config.seed,
  }
}

pub fn estimate_normalized_betti(complex: &SimplicialComplex, config: &LgzRunConfig, eigensolver_cap: usize) -> Result<LgzEstimate> {
  let sampler = LgzSampler::new(complex, config, eigensolver_cap)?;
  let zeros = sampler.count_zeros(config.seed, config.samples);
  Ok(estimate_with(&sampler, config, zeros))
}

/// Exact non-negative rational, written `p/q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExactRatio(pub Ratio<u128>);

impl ExactRatio {
  pub fn new(numer: u128, denom: u128) -> Self { Self(Ratio::new(numer, denom)) }

  pub fn numer(&self) -> u128 { *self.0.numer() }

  pub fn denom(&self) -> u128 { *self.0.denom() }

  pub fn to_f64(&self) -> f64 { self.numer() as f64 / self.denom() as f64 }
}

impl fmt::Display for ExactRatio {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result { write!(f, "{}/{}", self.numer(), self.denom()) }
}

impl FromStr for ExactRatio {
  type Err = Error;

  fn from_str(s: &str) -> Result<Self> {
    let bad = || Error::input(format!("`{s}` is not a ratio p/q"));
    let (p, q) = s.split_once('/').ok_or_else(bad)?;
    let p: u128 = p.trim().parse().map_err(|_| bad())?;
    let q: u128 = q.trim().parse().map_err(|_| bad())?;
    if q == 0 {
      return Err(bad());
    }
    Ok(Self::new(p, q))
  }
}

impl Serialize for ExactRatio {
  fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> { s.collect_str(self) }
}

impl<'de> Deserialize<'de> for ExactRatio {
  fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
    String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
  }
}

/// Serializes non-finite floats as the string `"inf"` (JSON has no infinity).
pub mod inf_f64 {
  use alloc::string::String;

  use serde::{Deserialize, Deserializer, Serializer};

  pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    if v.is_finite() { s.serialize_f64(*v) } else { s.serialize_str("inf") }
  }

  #[derive(Deserialize)]
  #[serde(untagged)]
  enum Repr {
    Num(f64),
    Text(String),
  }

  pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    match Repr::deserialize(d)? {
      Repr::Num(x) => Ok(x),
      Repr::Text(t) if t == "inf" => Ok(f64::INFINITY),
      Repr::Text(t) => Err(serde::de::Error::custom(alloc::format!("expected a number or \"inf\", got `{t}`"))),
    }
  }
}

/// Raw quantities the cost formulas depend on.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CostInputs {
  pub n:           usize,
  pub k:           usize,
  pub n_simplices: u128,
  pub beta_k:      u128,
  /// `None` when `Δ_k` has no nonzero eigenvalue; formulas then use 1.
  pub kappa:       Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CostReport {
  pub units:                 String,
  pub n:                     usize,
  pub k:                     usize,
  pub n_simplices:           u128,
  pub beta_k:                u128,
  /// `C(n, k+1)`.
  pub binomial:              u128,
  pub zeta_k:                f64,
  pub zeta_k_exact:          Option<ExactRatio>,
  pub kappa:                 Option<f64>,
  pub kappa_source:          String,
  pub global_kappa:          Option<f64>,
  pub additive_eps:          f64,
  pub mult_delta:            f64,
  #[serde(with = "inf_f64")]
  pub runtime_additive:      f64,
  #[serde(with = "inf_f64")]
  pub runtime_naive_mult:    f64,
  #[serde(with = "inf_f64")]
  pub runtime_improved_mult: f64,
  #[serde(with = "inf_f64")]
  pub t_q_lower:             f64,
  pub t_classical:           f64,
  #[serde(with = "inf_f64")]
  pub xi:                    f64,
  /// `ξ² = C(n,k+1) / β_k`; absent when `β_k = 0`.
  pub xi_squared_exact:      Option<ExactRatio>,
  /// Grover construction step `ζ_k^-1/2`.
  #[serde(with = "inf_f64")]
  pub construction_cost:     f64,
  /// Estimation step `δ^-1 (|S_k|/β_k)^1/2`.
  #[serde(with = "inf_f64")]
  pub estimation_cost:       f64,
  pub clique_dense_exponent: f64,
  pub clique_dense_flag:     bool,
  /// `β_k = 0`: multiplicative costs are infinite.
  pub beta_zero:             bool,
}

/// Evaluates the cost formulas with constants set to 1.
pub fn cost_from_inputs(inputs: &CostInputs, config: &LgzRunConfig) -> Result<CostReport> {
  config.validate()?;
  let CostInputs { n, k, n_simplices, beta_k, kappa } = *inputs;
  let binom = binomial(n as u64, k as u64 + 1)
    .ok_or_else(|| Error::input(format!("C({n}, {}) overflows 128 bits", k + 1)))?;
  if n_simplices > binom {
    return Err(Error::input(format!("{n_simplices} simplices exceed C({n}, {}) = {binom}", k + 1)));
  }
  if beta_k > n_simplices {
    return Err(Error::input(format!("β_{k} = {beta_k} exceeds |S_{k}| = {n_simplices}")));
  }
  let (nf, kf) = (n as f64, k as f64);
  let big_c = binomial_f64(n as u64, k as u64 + 1);
  let size = n_simplices as f64;
  let beta = beta_k as f64;
  let zeta = if binom == 0 { 0.0 } else { size / big_c };
  let zeta_exact = (binom > 0).then(|| ExactRatio::new(n_simplices, binom));
  let kap = kappa.unwrap_or(1.0);
  let (eps, delta) = (config.additive_eps, config.mult_delta);
  let inv_sqrt_zeta = if n_simplices == 0 { f64::INFINITY } else { libm::sqrt(big_c / size) };
  let core = nf * nf * nf * kap + nf * kf * kf * inv_sqrt_zeta;
  let inf = f64::INFINITY;
  let beta_zero = beta_k == 0;
  let ratio = |a: f64| if beta_zero { inf } else { a / beta };
  let xi = libm::sqrt(ratio(big_c));
  Ok(CostReport {
    units: String::from("formula units (all hidden constants = 1)"),
    n,
    k,
    n_simplices,
    beta_k,
    binomial: binom,
    zeta_k: zeta,
    zeta_k_exact: zeta_exact,
    kappa,
    kappa_source: String::from(if kappa.is_some() { "spectrum of Δ_k" } else { "undefined (no nonzero eigenvalue); formulas use 1" }),
    global_kappa: None,
    additive_eps: eps,
    mult_delta: delta,
    runtime_additive: core / (eps * eps),
    runtime_naive_mult: ratio(size) * ratio(size) * core / (delta * delta),
    runtime_improved_mult: (nf * nf * xi + nf * kap * libm::sqrt(ratio(size))) / delta,
    t_q_lower: xi,
    t_classical: big_c,
    xi,
    xi_squared_exact: (!beta_zero).then(|| ExactRatio::new(binom, beta_k)),
    construction_cost: inv_sqrt_zeta,
    estimation_cost: libm::sqrt(ratio(size)) / delta,
    clique_dense_exponent: config.clique_dense_exponent,
    clique_dense_flag: n_simplices > 0 && big_c / size <= libm::pow(nf, config.clique_dense_exponent),
    beta_zero,
  })
}

/// Optional replacements for the exact `β_k` and `κ`, for hypothetical scaling studies.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct CostOverrides {
  pub beta_k: Option<u128>,
  pub kappa:  Option<f64>,
}

/// Cost report for `Δ_k` of `complex`. The exact `β_k` comes from boundary ranks and `κ`
/// from the spectrum of `Δ_k` unless overridden; the global `κ` of `⊕Δ_k` is added when
/// every dimension fits the eigensolver cap.
pub fn cost_report(complex: &SimplicialComplex, config: &LgzRunConfig, overrides: &CostOverrides, eigensolver_cap: usize) -> Result<CostReport> {
  let k = config.k;
  let beta_k = match overrides.beta_k {
    Some(b) => b,
    None => crate::homology::betti_at(complex, k)? as u128,
  };
  let kappa = match overrides.kappa {
    Some(x) if x.is_finite() && x >= 1.0 => Some(x),
    Some(x) => return Err(Error::input(format!("κ override {x} must be finite and at least 1"))),
    None if complex.count(k) == 0 => None,
    None => spectral::spectrum(complex, k, eigensolver_cap)?.kappa,
  };
  let inputs = CostInputs { n: complex.n_vertices(), k, n_simplices: complex.count(k) as u128, beta_k, kappa };
  let mut report = cost_from_inputs(&inputs, config)?;
  if overrides.kappa.is_some() {
    report.kappa_source = String::from("override");
  }
  if !complex.is_truncated() && complex.total_simplices() <= eigensolver_cap {
    report.global_kappa = spectral::global_spectrum(complex, eigensolver_cap)?.kappa;
  }
  Ok(report)
}

impl CostReport {
  pub fn csv_header() -> &'static str {
    "n,k,n_simplices,beta_k,binomial,zeta_k,kappa,runtime_additive,runtime_naive_mult,runtime_improved_mult,t_q_lower,t_classical,xi,clique_dense"
  }

  pub fn csv_row(&self) -> String {
    let f = |x: f64| if x.is_finite() { format!("{x}") } else { String::from("inf") };
    [
      self.n.to_string(),
      self.k.to_string(),
      self.n_simplices.to_string(),
      self.beta_k.to_string(),
      self.binomial.to_string(),
      f(self.zeta_k),
      self.kappa.map_or(String::new(), f),
      f(self.runtime_additive),
      f(self.runtime_naive_mult),
      f(self.runtime_improved_mult),
      f(self.t_q_lower),
      f(self.t_classical),
      f(self.xi),
      self.clique_dense_flag.to_string(),
    ]
    .join(",")
  }
}

#[cfg(test)]
mod tests {
  use super::*;
  use crate::graph::Graph;
  use crate::Budgets;

  fn clique(g: &Graph) -> SimplicialComplex { SimplicialComplex::clique_complex(g, &Budgets::default()).unwrap() }

  fn cfg(k: usize, samples: u64, seed: u64) -> LgzRunConfig { LgzRunConfig { k, samples, seed, ..Default::default() } }

  #[test]
  fn single_edge_zero_frequency() {
    let edge = clique(&Graph::complete(2));
    let est = estimate_normalized_betti(&edge, &cfg(0, 10_000, 3), 4096).unwrap();
    assert!((est.c_k_hat - 0.5).abs() <= 0.02, "{}", est.c_k_hat);
    assert_eq!(est.false_zero_rate, 0.0);
  }

  #[test]
  fn contractible_complex_has_no_zero_readings() {
    let k5 = clique(&Graph::complete(5));
    let est = estimate_normalized_betti(&k5, &cfg(1, 500, 1), 4096).unwrap();
    assert_eq!((est.zero_count, est.c_k_hat), (0, 0.0));
  }

  #[test]
  fn coarse_phase_register_produces_false_zeros() {
    // path on 4 vertices: Δ_0 has eigenvalues 0, 2−√2, 2, 2+√2 so λ_min/λ_max < ½
    let p4 = clique(&Graph::path(4));
    let config = LgzRunConfig { qpe_bits: Some(1), ..cfg(0, 1000, 0) };
    let est = estimate_normalized_betti(&p4, &config, 4096).unwrap();
    assert!(est.false_zero_rate > 0.0);
    let fine = estimate_normalized_betti(&p4, &cfg(0, 1000, 0), 4096).unwrap();
    assert_eq!(fine.false_zero_rate, 0.0);
    assert_eq!(fine.qpe_bits, default_qpe_bits(fine.kappa));
  }

  #[test]
  fn sampling_is_batched_and_reproducible() {
    let c4 = clique(&Graph::cycle(4));
    let s = LgzSampler::new(&c4, &cfg(1, 1, 0), 4096).unwrap();
    let a = s.sample(9, 10_000);
    assert_eq!(a, s.sample(9, 10_000));
    assert_eq!(a.len(), 10_000);
    assert_eq!(a.iter().filter(|&&x| x == 0.0).count() as u64, s.count_zeros(9, 10_000));
    assert_eq!(batch_sizes(8193).collect::<Vec<_>>(), [4096, 4096, 1]);
  }

  #[test]
  fn config_validation() {
    assert!(LgzRunConfig { samples: 0, ..Default::default() }.validate().is_err());
    assert!(LgzRunConfig { qpe_bits: Some(0), ..Default::default() }.validate().is_err());
    assert!(LgzRunConfig { additive_eps: 1.0, ..Default::default() }.validate().is_err());
    assert!(LgzRunConfig::default().validate().is_ok());
  }

  #[test]
  fn cost_formulas_by_hand() {
    let config = LgzRunConfig { additive_eps: 0.5, mult_delta: 0.5, ..Default::default() };
    // 4-cycle, k = 1: |S_1| = 4, β_1 = 1, C(4,2) = 6
    let r = cost_from_inputs(&CostInputs { n: 4, k: 1, n_simplices: 4, beta_k: 1, kappa: Some(2.0) }, &config).unwrap();
    assert_eq!(r.xi, 6f64.sqrt());
    assert_eq!(r.xi_squared_exact, Some(ExactRatio::new(6, 1)));
    assert_eq!(r.zeta_k_exact, Some(ExactRatio::new(2, 3)));
    let core = 64.0 * 2.0 + 4.0 * (1.5f64).sqrt();
    assert!((r.runtime_additive - core / 0.25).abs() < 1e-9);
    assert!((r.runtime_naive_mult - 16.0 * core / 0.25).abs() < 1e-9);
    assert!((r.runtime_improved_mult - (16.0 * 6f64.sqrt() + 8.0 * 2.0) / 0.5).abs() < 1e-9);
    assert_eq!(r.t_classical, 6.0);
    assert!(r.clique_dense_flag);
    let zero = cost_from_inputs(&CostInputs { n: 6, k: 1, n_simplices: 12, beta_k: 0, kappa: Some(3.0) }, &config).unwrap();
    assert!(zero.beta_zero && zero.xi.is_infinite() && zero.runtime_naive_mult.is_infinite());
    assert!(zero.runtime_additive.is_finite());
  }

  #[test]
  fn exact_ratio_text_round_trip() {
    let r: ExactRatio = "10/20".parse().unwrap();
    assert_eq!(r.to_string(), "1/2");
    assert!("1/0".parse::<ExactRatio>().is_err());
  }
}
