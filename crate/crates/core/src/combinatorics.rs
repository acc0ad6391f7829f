//! Binomial coefficients in exact and floating arithmetic.

/// `C(n, k)` when it fits in a `u128`.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
  if k > n {
    return Some(0);
  }
  let k = k.min(n - k);
  let mut acc: u128 = 1;
  for i in 0..k {
    // acc * (n - i) is divisible by (i + 1) after the multiplication
    acc = acc.checked_mul(u128::from(n - i))? / u128::from(i + 1);
  }
  Some(acc)
}

/// `C(n, k)` as a float; exact below 2^53 and a log-gamma-free product otherwise.
pub fn binomial_f64(n: u64, k: u64) -> f64 {
  if k > n {
    return 0.0;
  }
  match binomial(n, k) {
    Some(b) => b as f64,
    None => {
      let k = k.min(n - k);
      let mut acc = 1.0f64;
      for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
      }
      acc
    },
  }
}
