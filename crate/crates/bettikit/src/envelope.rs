//! The JSON wrapper every artifact is written in.

use bettikit_core::field::PRIMES;
use bettikit_core::rng::GENERATOR_NAME;
use bettikit_core::Budgets;
use serde::Serialize;

pub const TOOL: &str = "bettikit";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, Serialize)]
pub struct Tolerances {
  /// How an eigenvalue is classified as zero.
  pub zero_eigenvalue: &'static str,
  pub machine_epsilon: f64,
}

impl Default for Tolerances {
  fn default() -> Self { Self { zero_eigenvalue: "|lambda| <= max(|S_k|, n) * machine_epsilon * lambda_max", machine_epsilon: f64::EPSILON } }
}

#[derive(Debug, Serialize)]
pub struct Envelope<'a, C: Serialize, R: Serialize> {
  pub tool:            &'static str,
  pub version:         &'static str,
  pub command:         &'a str,
  /// The fully resolved command configuration.
  pub config:          &'a C,
  pub seed:            Option<u64>,
  pub generator:       &'static str,
  pub budgets:         Budgets,
  pub tolerances:      Tolerances,
  pub primes:          [u64; 2],
  pub result:          R,
  #[serde(skip_serializing_if = "Option::is_none")]
  pub elapsed_seconds: Option<f64>,
}

impl<'a, C: Serialize, R: Serialize> Envelope<'a, C, R> {
  pub fn new(command: &'a str, config: &'a C, budgets: Budgets, seed: Option<u64>, result: R) -> Self {
    Self {
      tool: TOOL,
      version: VERSION,
      command,
      config,
      seed,
      generator: GENERATOR_NAME,
      budgets,
      tolerances: Tolerances::default(),
      primes: PRIMES,
      result,
      elapsed_seconds: None,
    }
  }

  /// Pretty JSON with a trailing newline.
  pub fn to_json(&self) -> String {
    let mut s = serde_json::to_string_pretty(self).expect("envelopes serialize");
    s.push('\n');
    s
  }
}
