use bettikit_core::complex::SimplicialComplex;
use bettikit_core::graph::Graph;
use bettikit_core::lgz::{cost_from_inputs, estimate_normalized_betti, CostInputs, LgzRunConfig, LgzSampler};
use bettikit_core::rng::derive_seed;
use bettikit_core::Budgets;

fn clique(g: &Graph) -> SimplicialComplex { SimplicialComplex::clique_complex(g, &Budgets::default()).unwrap() }

#[test]
fn eigenvalue_histogram_matches_the_multiplicity_law() {
  let c = clique(&Graph::cycle(6).complement());
  for k in 0..c.n_dims() {
    if c.count(k) > 64 {
      continue;
    }
    let sampler = LgzSampler::new(&c, &LgzRunConfig { k, qpe_bits: Some(40), ..Default::default() }, 4096).unwrap();
    let ev = sampler.spectrum().eigenvalues.clone();
    let draws = sampler.sample(77, 100_000);
    // exact law: each rounded value weighted by its multiplicity
    let mut values: Vec<f64> = ev.iter().map(|&l| sampler.round(l)).collect();
    values.dedup();
    let tv: f64 = values
      .iter()
      .map(|&v| {
        let want = ev.iter().filter(|&&l| sampler.round(l) == v).count() as f64 / ev.len() as f64;
        let got = draws.iter().filter(|&&x| x == v).count() as f64 / draws.len() as f64;
        (want - got).abs()
      })
      .sum::<f64>()
      / 2.0;
    assert!(tv <= 0.02, "k = {k}: total variation {tv}");
  }
}

#[test]
fn zero_frequency_is_unbiased() {
  let c4 = clique(&Graph::cycle(4));
  let runs = 200;
  let m = 400;
  let estimates: Vec<f64> = (0..runs)
    .map(|r| estimate_normalized_betti(&c4, &LgzRunConfig { k: 1, samples: m, seed: derive_seed(99, r), ..Default::default() }, 4096).unwrap().c_k_hat)
    .collect();
  let mean = estimates.iter().sum::<f64>() / runs as f64;
  let se = (0.25f64 * 0.75 / (m as f64 * runs as f64)).sqrt();
  assert!((mean - 0.25).abs() <= 3.0 * se, "mean {mean}");
}

#[test]
fn default_resolution_has_no_false_zeros() {
  for g in [Graph::path(7), Graph::cycle(9), Graph::complete(5).disjoint_union(&Graph::path(3))] {
    let c = clique(&g);
    for k in 0..c.n_dims().min(2) {
      let est = estimate_normalized_betti(&c, &LgzRunConfig { k, samples: 50, ..Default::default() }, 4096).unwrap();
      assert_eq!(est.false_zero_rate, 0.0);
    }
  }
}

#[test]
fn cost_monotonicity() {
  let config = LgzRunConfig::default();
  let base = CostInputs { n: 10, k: 2, n_simplices: 60, beta_k: 1, kappa: Some(4.0) };
  let mut last_xi = f64::INFINITY;
  for beta in 1..=60 {
    let r = cost_from_inputs(&CostInputs { beta_k: beta, ..base.clone() }, &config).unwrap();
    assert!(r.xi <= last_xi);
    last_xi = r.xi;
  }
  let mut last = 0.0;
  for kappa in [1.0, 2.0, 8.0, 100.0] {
    let r = cost_from_inputs(&CostInputs { kappa: Some(kappa), ..base.clone() }, &config).unwrap();
    assert!(r.runtime_additive >= last);
    last = r.runtime_additive;
  }
}

#[test]
fn maximal_betti_complex_has_xi_equal_to_inverse_root_zeta() {
  // n isolated vertices: β_0 = |S_0|
  let c = clique(&Graph::empty(7));
  let config = LgzRunConfig::default();
  let r = bettikit_core::lgz::cost_report(&c, &config, &Default::default(), 4096).unwrap();
  let z = r.zeta_k_exact.unwrap();
  let x = r.xi_squared_exact.unwrap();
  assert_eq!((x.numer(), x.denom()), (z.denom(), z.numer()));
}
