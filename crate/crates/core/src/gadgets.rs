//! Reduction gadgets: model counting through the Euler characteristic of a clique
//! complex, and the co-bipartite complement that carries the homology of a co-chordal
//! graph's clique complex to complementary dimension.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::cliques;
use crate::cnf::CnfFormula;
use crate::complex::SimplicialComplex;
use crate::graph::{Graph, VertexRole};
use crate::homology;
use crate::{Budgets, Error, Result};

/// The labelled graph whose clique complex encodes a CNF formula.
///
/// Vertex numbering is fixed: `t_i = i`, `f_i = n + i`, `p_i = 2n + i`, `c_j = 3n + j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReductionGraph {
  pub graph:  Graph,
  pub source: CnfFormula,
}

impl ReductionGraph {
  pub fn n_vars(&self) -> usize { self.source.n_vars() }

  pub fn n_clauses(&self) -> usize { self.source.n_clauses() }

  pub fn t(&self, i: usize) -> usize { i }

  pub fn f(&self, i: usize) -> usize { self.n_vars() + i }

  pub fn p(&self, i: usize) -> usize { 2 * self.n_vars() + i }

  pub fn c(&self, j: usize) -> usize { 3 * self.n_vars() + j }

  pub fn role(&self, v: usize) -> VertexRole {
    let n = self.n_vars();
    match v / n.max(1) {
      _ if v >= 3 * n => VertexRole::Clause(v - 3 * n),
      0 => VertexRole::True(v),
      1 => VertexRole::False(v - n),
      _ => VertexRole::Present(v - 2 * n),
    }
  }

  /// Reads a clique of `t`/`f` vertices as a (partial) truth assignment, bit `i` set
  /// when `t_i` is present.
  pub fn decode(&self, clique: &[usize]) -> Result<u64> {
    let mut bits = 0u64;
    for &v in clique {
      match self.role(v) {
        VertexRole::True(i) => bits |= 1 << i,
        VertexRole::False(_) => {},
        other => return Err(Error::input(format!("vertex {other} is not a literal vertex"))),
      }
    }
    Ok(bits)
  }
}

/// Builds the reduction graph: vertices of distinct variables are adjacent, clause
/// vertices are pairwise adjacent, and `c_j` is adjacent to every variable vertex except
/// the literal vertices of its own literals.
pub fn build_reduction_graph(formula: &CnfFormula) -> ReductionGraph {
  let n = formula.n_vars();
  let s = formula.n_clauses();
  let total = 3 * n + s;
  let mut g = Graph::empty(total);
  for u in 0..3 * n {
    for v in u + 1..3 * n {
      if u % n != v % n {
        g.add_edge(u, v).expect("in range");
      }
    }
  }
  for (j, clause) in formula.clauses().iter().enumerate() {
    let c = 3 * n + j;
    for v in 0..3 * n {
      let blocked = clause.iter().any(|&l| {
        let i = l.unsigned_abs() as usize - 1;
        v == if l > 0 { i } else { n + i }
      });
      if !blocked {
        g.add_edge(c, v).expect("in range");
      }
    }
    for j2 in j + 1..s {
      g.add_edge(c, 3 * n + j2).expect("in range");
    }
  }
  let roles = (0..n)
    .map(VertexRole::True)
    .chain((0..n).map(VertexRole::False))
    .chain((0..n).map(VertexRole::Present))
    .chain((0..s).map(VertexRole::Clause))
    .collect();
  let graph = g.with_roles(roles).expect("one role per vertex");
  ReductionGraph { graph, source: formula.clone() }
}

/// `9/2·n(n−1) + 3ns − Ls + s(s−1)/2` with `L·s` the total literal count; for an
/// `ℓ`-uniform formula `L·s = ℓs`.
pub fn predicted_edge_count(formula: &CnfFormula) -> u64 {
  let n = formula.n_vars() as u64;
  let s = formula.n_clauses() as u64;
  let literals = formula.n_literals() as u64;
  9 * n * n.saturating_sub(1) / 2 + 3 * n * s - literals + s * s.saturating_sub(1) / 2
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SatCount {
  pub solutions:      u64,
  pub chi:            i64,
  pub simplex_counts: Vec<u64>,
  pub gamma:          f64,
  pub n_vertices:     usize,
  pub n_edges:        usize,
}

/// Counts satisfying assignments as `(−1)^n (1 − χ)` where `χ` is the Euler
/// characteristic of the reduction graph's clique complex. Cliques are counted in a
/// streaming pass (no dimension cap); `budgets.max_enumerated` bounds the work.
pub fn count_sat_via_euler(formula: &CnfFormula, budgets: &Budgets) -> Result<SatCount> {
  let reduction = build_reduction_graph(formula);
  let g = &reduction.graph;
  let (counts, truncated) = cliques::count_cliques(g, g.n_vertices(), budgets.max_enumerated)?;
  debug_assert!(!truncated);
  let chi: i64 = counts.iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c as i64 } else { -(c as i64) }).sum();
  let signed = if formula.n_vars() % 2 == 0 { 1 - chi } else { chi - 1 };
  let solutions = u64::try_from(signed)
    .map_err(|_| Error::Integrity(format!("Euler characteristic {chi} gives a negative model count")))?;
  let cert = density_certificate(g, 1)?;
  Ok(SatCount { solutions, chi, simplex_counts: counts, gamma: cert.gamma, n_vertices: g.n_vertices(), n_edges: g.n_edges() })
}

/// Maximal cliques of the reduction graph made only of `t`/`f` vertices, sorted.
/// Each has one vertex per variable and decodes to a satisfying assignment.
pub fn maximal_cliques_in_a(reduction: &ReductionGraph) -> Vec<Vec<usize>> {
  let g = &reduction.graph;
  let n = reduction.n_vars();
  let mut literal_vertices = BitSet::new(g.n_vertices());
  for v in 0..2 * n {
    literal_vertices.insert(v);
  }
  // maximal inside the literal block, then keep those no outside vertex extends
  cliques::maximal_cliques_within(g, &literal_vertices)
    .into_iter()
    .filter(|c| {
      (2 * n..g.n_vertices()).all(|w| c.iter().any(|&v| !g.has_edge(v, w)))
    })
    .collect()
}

/// Satisfying assignments read off [`maximal_cliques_in_a`], sorted.
pub fn solutions_from_cliques(reduction: &ReductionGraph) -> Result<Vec<u64>> {
  let mut out = maximal_cliques_in_a(reduction).iter().map(|c| reduction.decode(c)).collect::<Result<Vec<_>>>()?;
  out.sort_unstable();
  Ok(out)
}

/// Edge density `γ = |E| / N²` checked against `γ > ½(1 − 1/k)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensityCertificate {
  pub gamma:           f64,
  pub gamma_numer:     u64,
  pub gamma_denom:     u64,
  pub n_vertices:      usize,
  pub n_edges:         usize,
  pub k:               usize,
  /// Largest `k` with `γ > ½(1 − 1/k)`; 0 when no `k ≥ 1` qualifies.
  pub k_max_certified: u64,
  pub passes:          bool,
}

impl DensityCertificate {
  pub fn gamma_exact(&self) -> Ratio<u64> { Ratio::new(self.gamma_numer, self.gamma_denom) }
}

pub fn density_certificate(graph: &Graph, k: usize) -> Result<DensityCertificate> {
  if k == 0 {
    return Err(Error::input("density certificate needs k ≥ 1"));
  }
  let n = graph.n_vertices() as u64;
  let e = graph.n_edges() as u64;
  let n2 = (n * n).max(1);
  let gamma = Ratio::new(e, n2);
  // γ > ½(1 − 1/k)  ⇔  2kE > (k − 1)N²  ⇔  k < N² / (N² − 2E), using 2E < N²
  let passes = 2 * k as u128 * e as u128 > (k as u128 - 1) * (n * n) as u128;
  let slack = n2 - 2 * e;
  let k_max = n2.div_ceil(slack) - 1;
  Ok(DensityCertificate {
    gamma: e as f64 / n2 as f64,
    gamma_numer: *gamma.numer(),
    gamma_denom: *gamma.denom(),
    n_vertices: graph.n_vertices(),
    n_edges: graph.n_edges(),
    k,
    k_max_certified: k_max,
    passes,
  })
}

/// The complement `H̄` of the bipartite graph `H` between the vertices of `g` and the
/// complements `F_j = V ∖ e_j` of its non-edges.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuspensionReduction {
  /// Vertices `0..n` are the original vertices, `n + j` is `F_j`.
  pub h_bar:     Graph,
  pub non_edges: Vec<(usize, usize)>,
  /// Number of edges of `H`, always `2m`.
  pub h_edges:   usize,
}

impl SuspensionReduction {
  pub fn n_original(&self) -> usize { self.h_bar.n_vertices() - self.non_edges.len() }

  /// The `F` block, a clique of `H̄`.
  pub fn face_block(&self) -> Vec<usize> { (self.n_original()..self.h_bar.n_vertices()).collect() }
}

pub fn alexander_suspension_reduction(g: &Graph) -> Result<SuspensionReduction> {
  let n = g.n_vertices();
  if n < 3 {
    return Err(Error::input(format!("reduction needs at least 3 vertices, got {n}")));
  }
  let non_edges = g.non_edges();
  if non_edges.is_empty() {
    return Err(Error::input("graph is complete; there are no non-edges to dualize"));
  }
  let m = non_edges.len();
  let mut h_bar = Graph::complete(n).disjoint_union(&Graph::complete(m));
  for (j, &(a, b)) in non_edges.iter().enumerate() {
    for x in 0..n {
      // x ∈ F_j exactly when x is not an endpoint of e_j; H joins x to F_j when x ∉ F_j
      if x != a && x != b {
        h_bar.add_edge(x, n + j)?;
      }
    }
  }
  Ok(SuspensionReduction { h_bar, non_edges, h_edges: 2 * m })
}

/// Reduced Betti numbers of `Cl(g)` and `Cl(H̄)` side by side.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransferReport {
  pub n:                 usize,
  pub m:                 usize,
  pub homology:          &'static str,
  /// `β̃_0 … β̃_{n−2}` of `Cl(g)`.
  pub reduced_betti_g:   Vec<i64>,
  /// `β̃_0 … β̃_{n−2}` of `Cl(H̄)`.
  pub reduced_betti_h:   Vec<i64>,
  /// Entry `k` compares `β̃_k(Cl g)` with `β̃_{n−k−2}(Cl H̄)`.
  pub matches:           Vec<bool>,
  pub all_match:         bool,
  pub density:           DensityCertificate,
  /// `γ(H̄) > ½(1 − 5/N)`, checked exactly.
  pub density_bound_met: bool,
}

/// Checks `β̃_k(Cl g) = β̃_{n−k−2}(Cl H̄)` for `0 ≤ k ≤ n − 2`. The complement of `g` must be
/// chordal.
pub fn verify_homology_transfer(g: &Graph, budgets: &Budgets) -> Result<TransferReport> {
  if !g.complement().is_chordal() {
    return Err(Error::Precondition(String::from("the complement of the graph is not chordal")));
  }
  let red = alexander_suspension_reduction(g)?;
  let n = g.n_vertices();
  let m = red.non_edges.len();
  let top = n - 2;

  let local = Budgets { max_dim: budgets.max_dim.max(top + 1), ..*budgets };
  let cl_g = SimplicialComplex::clique_complex(g, &local)?;
  let beta_g = homology::betti_numbers(&cl_g)?.reduced();

  // homology of Cl(H̄) relative to the F clique is its reduced homology, and skips the 2^m
  // subsets of that block; dimensions above n − 2 are never needed
  let h_budgets = Budgets { max_dim: top + 1, ..*budgets };
  let cl_h = SimplicialComplex::clique_complex_relative(&red.h_bar, &red.face_block(), &h_budgets)?;
  let beta_h = homology::betti_numbers(&cl_h)?.reduced();

  let at = |v: &[i64], k: usize| v.get(k).copied().unwrap_or(0);
  let reduced_betti_g: Vec<i64> = (0..=top).map(|k| at(&beta_g, k)).collect();
  let reduced_betti_h: Vec<i64> = (0..=top).map(|k| at(&beta_h, k)).collect();
  let matches: Vec<bool> = (0..=top).map(|k| reduced_betti_g[k] == reduced_betti_h[top - k]).collect();

  let density = density_certificate(&red.h_bar, 1)?;
  // γ > ½(1 − 5/N)  ⇔  2E > N² − 5N
  let big_n = red.h_bar.n_vertices() as i128;
  let density_bound_met = 2 * red.h_bar.n_edges() as i128 > big_n * big_n - 5 * big_n;
  Ok(TransferReport {
    n,
    m,
    homology: "reduced",
    all_match: matches.iter().all(|&b| b),
    reduced_betti_g,
    reduced_betti_h,
    matches,
    density,
    density_bound_met,
  })
}

#[cfg(test)]
mod tests {
  use alloc::vec;

  use super::*;
  use crate::cnf::{brute_force_count, parse_dimacs, random_uniform};

  fn fig3() -> CnfFormula { parse_dimacs("p cnf 2 2\n1 -2 0\n-1 2 0\n").unwrap() }

  #[test]
  fn fig3_gadget() {
    let r = build_reduction_graph(&fig3());
    assert_eq!(r.graph.n_vertices(), 8);
    assert_eq!(r.graph.n_edges(), 18);
    assert_eq!(predicted_edge_count(&fig3()), 18);
    let sc = count_sat_via_euler(&fig3(), &Budgets::default()).unwrap();
    assert_eq!(sc.simplex_counts, vec![8, 18, 10, 1]);
    assert_eq!((sc.chi, sc.solutions), (-1, 2));
    // Γ(S) = {{t1,t2},{f1,f2}}
    assert_eq!(maximal_cliques_in_a(&r), vec![vec![0, 1], vec![2, 3]]);
    assert_eq!(solutions_from_cliques(&r).unwrap(), vec![0b00, 0b11]);
  }

  #[test]
  fn small_cases() {
    let one = CnfFormula::new(1, vec![]).unwrap();
    let r = build_reduction_graph(&one);
    assert_eq!((r.graph.n_vertices(), r.graph.n_edges()), (3, 0));
    let unsat = CnfFormula::new(1, vec![vec![1], vec![-1]]).unwrap();
    assert_eq!(count_sat_via_euler(&unsat, &Budgets::default()).unwrap().solutions, 0);
    assert!(maximal_cliques_in_a(&build_reduction_graph(&unsat)).is_empty());
    for n in 1..6 {
      let empty = CnfFormula::new(n, vec![]).unwrap();
      assert_eq!(count_sat_via_euler(&empty, &Budgets::default()).unwrap().solutions, 1 << n);
    }
  }

  #[test]
  fn random_instances_agree_with_brute_force() {
    for seed in 0..20 {
      let f = random_uniform(5, 6, 3, seed).unwrap();
      let expected = brute_force_count(&f).unwrap();
      assert_eq!(count_sat_via_euler(&f, &Budgets::default()).unwrap().solutions, expected);
      let r = build_reduction_graph(&f);
      assert_eq!(maximal_cliques_in_a(&r).len() as u64, expected);
      assert_eq!(r.graph.n_edges() as u64, predicted_edge_count(&f));
      for a in solutions_from_cliques(&r).unwrap() {
        assert!(f.is_satisfied_by(a));
      }
    }
  }

  #[test]
  fn density_examples() {
    let k10 = density_certificate(&Graph::complete(10), 9).unwrap();
    assert_eq!(k10.gamma_exact(), Ratio::new(45, 100));
    assert!(k10.passes);
    assert_eq!(k10.k_max_certified, 9);
    let empty = density_certificate(&Graph::empty(5), 2).unwrap();
    assert_eq!((empty.gamma, empty.passes, empty.k_max_certified), (0.0, false, 0));
    assert!(density_certificate(&Graph::empty(5), 1).unwrap().k_max_certified == 0);
  }

  #[test]
  fn suspension_reduction_sizes() {
    let c4 = alexander_suspension_reduction(&Graph::cycle(4)).unwrap();
    assert_eq!((c4.h_bar.n_vertices(), c4.h_edges), (6, 4));
    let p4 = alexander_suspension_reduction(&Graph::path(4)).unwrap();
    assert_eq!((p4.h_bar.n_vertices(), p4.h_edges), (7, 6));
    assert!(alexander_suspension_reduction(&Graph::complete(4)).is_err());
    assert!(alexander_suspension_reduction(&Graph::empty(2)).is_err());
  }

  #[test]
  fn transfer_on_named_graphs() {
    let b = Budgets::default();
    let c4 = verify_homology_transfer(&Graph::cycle(4), &b).unwrap();
    assert!(c4.all_match && c4.density_bound_met);
    assert_eq!(c4.reduced_betti_g, vec![0, 1, 0]);
    assert_eq!(c4.reduced_betti_h[1], 1);
    assert!(verify_homology_transfer(&Graph::path(4), &b).unwrap().all_match);
    let mut k4e = Graph::complete(4);
    k4e = Graph::from_edges(4, &k4e.edges()[1..]).unwrap();
    assert!(verify_homology_transfer(&k4e, &b).unwrap().all_match);
    // complement of C5 is C5, not chordal
    assert!(matches!(verify_homology_transfer(&Graph::cycle(5), &b), Err(Error::Precondition(_))));
  }
}
