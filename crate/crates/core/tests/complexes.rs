use bettikit_core::cliques::maximal_cliques;
use bettikit_core::cnf::parse_dimacs;
use bettikit_core::combinatorics::binomial;
use bettikit_core::complex::{SetSystem, SimplicialComplex};
use bettikit_core::gadgets::build_reduction_graph;
use bettikit_core::graph::{random_graph, Graph, RandomModel};
use bettikit_core::Budgets;
use proptest::prelude::*;

fn er(n: usize, p: f64, seed: u64) -> Graph { random_graph(&RandomModel::ErdosRenyi { n, p }, seed).unwrap() }

fn clique(g: &Graph) -> SimplicialComplex { SimplicialComplex::clique_complex(g, &Budgets::default()).unwrap() }

proptest! {
  #![proptest_config(ProptestConfig::with_cases(64))]

  #[test]
  fn clique_complexes_are_downward_closed(n in 1usize..=12, p in 0.0f64..=1.0, seed: u64) {
    let c = clique(&er(n, p, seed));
    prop_assert!(c.is_downward_closed());
    for k in 0..c.n_dims() {
      let list = c.simplices(k).unwrap();
      for s in list.iter() {
        prop_assert!(s.windows(2).all(|w| w[0] < w[1]));
      }
      for i in 1..list.len() {
        prop_assert!(list.get(i - 1) < list.get(i));
      }
    }
  }

  #[test]
  fn set_system_of_maximal_cliques_rebuilds_the_clique_complex(n in 1usize..=10, p in 0.0f64..=1.0, seed: u64) {
    let g = er(n, p, seed);
    let system = SetSystem::new(n, maximal_cliques(&g)).unwrap();
    let from_sets = SimplicialComplex::from_set_system(&system, n, &Budgets::default()).unwrap();
    let direct = clique(&g);
    prop_assert_eq!(from_sets.counts(), direct.counts());
    for k in 0..direct.n_dims() {
      prop_assert_eq!(from_sets.simplices(k), direct.simplices(k));
    }
  }

  #[test]
  fn random_graphs_repeat_bit_for_bit(n in 1usize..=30, seed: u64) {
    let vr = RandomModel::VietorisRips { n, d: 3, epsilon: 0.4 };
    prop_assert_eq!(random_graph(&vr, seed).unwrap(), random_graph(&vr, seed).unwrap());
    prop_assert_eq!(er(n, 0.3, seed), er(n, 0.3, seed));
  }
}

#[test]
fn complete_graph_counts_are_binomial() {
  for n in 1..=12 {
    let c = clique(&Graph::complete(n));
    for k in 0..n {
      assert_eq!(c.count(k) as u128, binomial(n as u64, k as u64 + 1).unwrap());
    }
  }
}

#[test]
fn sampling_frequencies_stay_within_the_uniform_band() {
  let c = clique(&er(10, 0.6, 4));
  for k in 0..3 {
    let size = c.count(k);
    let m = 20_000usize;
    let mut hits = vec![0usize; size];
    for i in c.sample_indices(k, m, 17 + k as u64).unwrap() {
      hits[i] += 1;
    }
    let band = 3.0 * ((size as f64).ln().max(1.0) / m as f64).sqrt();
    for h in hits {
      assert!((h as f64 / m as f64 - 1.0 / size as f64).abs() <= band);
    }
  }
}

#[test]
fn fig3_triangles_pass_a_chi_square_test() {
  let f = parse_dimacs("p cnf 2 2\n1 -2 0\n-1 2 0\n").unwrap();
  let c = clique(&build_reduction_graph(&f).graph);
  assert_eq!(c.count(2), 10);
  let m = 10_000;
  let mut hits = [0usize; 10];
  for i in c.sample_indices(2, m, 2024).unwrap() {
    hits[i] += 1;
  }
  let expected = m as f64 / 10.0;
  let chi2: f64 = hits.iter().map(|&h| (h as f64 - expected).powi(2) / expected).sum();
  // 99th percentile of χ² with 9 degrees of freedom
  assert!(chi2 < 21.666, "χ² = {chi2}");
}

#[test]
fn vertex_frequencies_of_k4() {
  let c = clique(&Graph::complete(4));
  let mut hits = [0usize; 4];
  for i in c.sample_indices(0, 4000, 8).unwrap() {
    hits[i] += 1;
  }
  assert!(hits.iter().all(|&h| (h as f64 / 4000.0 - 0.25).abs() <= 0.05));
}
