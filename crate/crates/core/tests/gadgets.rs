use bettikit_core::cnf::{brute_force_count, random_uniform};
use bettikit_core::gadgets::{build_reduction_graph, count_sat_via_euler, density_certificate, maximal_cliques_in_a, solutions_from_cliques};
use bettikit_core::rng::derive_seed;
use bettikit_core::Budgets;
use num_rational::Ratio;

#[test]
fn euler_count_equals_brute_force_and_gamma_cliques() {
  let budgets = Budgets::default();
  for i in 0..40u64 {
    let n = 3 + (i % 5) as usize;
    let s = 1 + (derive_seed(11, i) % 10) as usize;
    let f = random_uniform(n, s, 3, derive_seed(12, i)).unwrap();
    let brute = brute_force_count(&f).unwrap();
    assert_eq!(count_sat_via_euler(&f, &budgets).unwrap().solutions, brute);
    let r = build_reduction_graph(&f);
    assert_eq!(maximal_cliques_in_a(&r).len() as u64, brute);
    assert!(maximal_cliques_in_a(&r).iter().all(|c| c.len() == n));
    assert!(solutions_from_cliques(&r).unwrap().into_iter().all(|a| f.is_satisfied_by(a)));
  }
}

#[test]
fn edge_formula_for_uniform_formulas() {
  for i in 0..50u64 {
    let width = 2 + (i % 2) as usize;
    let n = width + (derive_seed(3, i) % 6) as usize;
    let s = (derive_seed(4, i) % 12) as usize;
    let f = random_uniform(n, s, width, derive_seed(5, i)).unwrap();
    let g = build_reduction_graph(&f).graph;
    let (n, s, l) = (n as i64, s as i64, width as i64);
    // 9/2·n(n−1) + 3ns − ℓs + s(s−1)/2, doubled to stay in integers
    let twice = 9 * n * (n - 1) + 6 * n * s - 2 * l * s + s * (s - 1);
    assert_eq!(2 * g.n_edges() as i64, twice);
  }
}

#[test]
fn density_of_three_uniform_gadgets_with_s_four_thirds_n() {
  for n in [3usize, 6, 9, 12, 15] {
    let s = 4 * n / 3;
    let f = random_uniform(n, s, 3, n as u64).unwrap();
    let cert = density_certificate(&build_reduction_graph(&f).graph, 1).unwrap();
    let gamma = Ratio::new(cert.gamma_numer as i128, cert.gamma_denom as i128);
    let want = Ratio::new(1, 2) * (Ratio::from_integer(1) - Ratio::new(165, 169 * n as i128));
    assert_eq!(gamma, want, "n = {n}");
    assert!(gamma > Ratio::new(1, 2) * (Ratio::from_integer(1) - Ratio::new(1, n as i128)));
  }
}
