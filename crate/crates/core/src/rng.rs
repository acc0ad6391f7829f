//! Seeded, platform-independent randomness.
//!
//! Every random object in the crate is drawn from [`Generator`] seeded by a
//! 64-bit integer. Independent streams (sampling batches, sweep trials) use
//! [`derive_seed`], so results never depend on scheduling.

use rand::SeedableRng;

pub type Generator = rand_chacha::ChaCha8Rng;

/// Name recorded in output artifacts next to the seed.
pub const GENERATOR_NAME: &str = "ChaCha8Rng (rand_chacha 0.9, seed_from_u64)";

pub fn generator(seed: u64) -> Generator { Generator::seed_from_u64(seed) }

/// Seed of stream `stream` under `master`: the SplitMix64 finalizer applied to
/// `master + (stream + 1) * 0x9E3779B97F4A7C15` (wrapping).
pub fn derive_seed(master: u64, stream: u64) -> u64 {
  let mut z = master.wrapping_add(stream.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
  z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
  z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
  z ^ (z >> 31)
}
