use bettikit_core::census::cochordal_graphs;
use bettikit_core::gadgets::verify_homology_transfer;
use bettikit_core::Budgets;

#[test]
fn reduced_betti_transfer_holds_for_every_cochordal_graph_up_to_seven_vertices() {
  let budgets = Budgets::default();
  let mut checked = 0;
  for n in 3..=7 {
    for g in cochordal_graphs(n).unwrap() {
      if g.n_edges() == n * (n - 1) / 2 {
        continue;
      }
      let report = verify_homology_transfer(&g, &budgets).unwrap();
      assert!(report.all_match, "edges {:?}: {:?} vs {:?}", g.edges(), report.reduced_betti_g, report.reduced_betti_h);
      assert!(report.density_bound_met);
      checked += 1;
    }
  }
  assert_eq!(checked, 3 + 9 + 26 + 93 + 392);
}
