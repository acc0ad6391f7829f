//! Chordal graphs up to isomorphism, and their complements (the co-chordal graphs).
//!
//! Every chordal graph has a simplicial vertex whose removal leaves a chordal graph, so
//! all chordal graphs on `n` vertices arise by adding a vertex adjacent to a clique of a
//! chordal graph on `n − 1` vertices. Candidates are deduplicated by canonical form.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::{Error, Result};

/// Largest vertex count supported by [`chordal_graphs`].
pub const CENSUS_MAX_VERTICES: usize = 10;

type Adj = Vec<u16>;

fn to_graph(adj: &Adj) -> Graph {
  let n = adj.len();
  let mut g = Graph::empty(n);
  for u in 0..n {
    for v in u + 1..n {
      if adj[u] >> v & 1 == 1 {
        g.add_edge(u, v).expect("in range");
      }
    }
  }
  g
}

fn pair_code(adj: &Adj, perm: &[usize]) -> u64 {
  // bit index of pair (i, j), i < j, in row-major order of the relabelled graph
  let n = adj.len();
  let mut code = 0u64;
  let mut bit = 0;
  for i in 0..n {
    for j in i + 1..n {
      if adj[perm[i]] >> perm[j] & 1 == 1 {
        code |= 1 << bit;
      }
      bit += 1;
    }
  }
  code
}

/// Canonical code: the largest pair code over relabellings that order vertices by a
/// refinement invariant (degree, then sorted neighbour degrees).
fn canonical_code(adj: &Adj) -> (Vec<(u32, Vec<u32>)>, u64) {
  let n = adj.len();
  let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
  let keys: Vec<(u32, Vec<u32>)> = (0..n)
    .map(|v| {
      let mut nd: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| deg[w]).collect();
      nd.sort_unstable();
      (deg[v], nd)
    })
    .collect();
  let mut order: Vec<usize> = (0..n).collect();
  order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
  let mut classes: Vec<(usize, usize)> = Vec::new();
  let mut start = 0;
  for i in 1..=n {
    if i == n || keys[order[i]] != keys[order[start]] {
      classes.push((start, i));
      start = i;
    }
  }
  let mut best = 0u64;
  permute_classes(adj, &mut order, &classes, 0, &mut best);
  let mut sorted_keys: Vec<(u32, Vec<u32>)> = order.iter().map(|&v| keys[v].clone()).collect();
  sorted_keys.sort();
  (sorted_keys, best)
}

fn permute_classes(adj: &Adj, order: &mut [usize], classes: &[(usize, usize)], c: usize, best: &mut u64) {
  let Some(&(lo, hi)) = classes.get(c) else {
    *best = (*best).max(pair_code(adj, order));
    return;
  };
  heap_permute(adj, order, classes, c, lo, hi - lo, best);
}

#[allow(clippy::too_many_arguments)]
fn heap_permute(adj: &Adj, order: &mut [usize], classes: &[(usize, usize)], c: usize, lo: usize, k: usize, best: &mut u64) {
  if k <= 1 {
    permute_classes(adj, order, classes, c + 1, best);
    return;
  }
  for i in 0..k {
    heap_permute(adj, order, classes, c, lo, k - 1, best);
    let j = if k % 2 == 0 { lo + i } else { lo };
    if i + 1 < k {
      order.swap(j, lo + k - 1);
    }
  }
}

fn cliques_of(adj: &Adj) -> Vec<u16> {
  let n = adj.len();
  let mut out = alloc::vec![0u16];
  for v in 0..n {
    let len = out.len();
    for i in 0..len {
      let c = out[i];
      // extend only cliques of vertices below v that are all adjacent to v
      if c & !adj[v] == 0 {
        out.push(c | 1 << v);
      }
    }
  }
  out
}

/// All chordal graphs on `n` vertices, one per isomorphism class.
pub fn chordal_graphs(n: usize) -> Result<Vec<Graph>> {
  if n > CENSUS_MAX_VERTICES {
    return Err(Error::budget("census_vertices", CENSUS_MAX_VERTICES as u64, "chordal census is limited to small graphs"));
  }
  let mut level: Vec<Adj> = alloc::vec![Vec::new()];
  for size in 1..=n {
    let mut seen = BTreeSet::new();
    let mut next = Vec::new();
    for adj in &level {
      for clique in cliques_of(adj) {
        let mut grown = adj.clone();
        for (u, row) in grown.iter_mut().enumerate() {
          if clique >> u & 1 == 1 {
            *row |= 1 << (size - 1);
          }
        }
        grown.push(clique);
        if seen.insert(canonical_code(&grown)) {
          next.push(grown);
        }
      }
    }
    level = next;
  }
  Ok(level.iter().map(to_graph).collect())
}

/// Co-chordal graphs on `n` vertices up to isomorphism (complements of chordal graphs).
pub fn cochordal_graphs(n: usize) -> Result<Vec<Graph>> {
  Ok(chordal_graphs(n)?.iter().map(Graph::complement).collect())
}

#[cfg(test)]
mod tests {
  use super::*;

  #[test]
  fn chordal_counts_match_known_sequence() {
    // unlabeled chordal graphs on 1..=7 vertices
    let expected = [1, 2, 4, 10, 27, 94, 393];
    for (i, &want) in expected.iter().enumerate() {
      let graphs = chordal_graphs(i + 1).unwrap();
      assert_eq!(graphs.len(), want, "n = {}", i + 1);
      assert!(graphs.iter().all(Graph::is_chordal));
    }
  }

  #[test]
  fn cochordal_graphs_have_chordal_complements() {
    for g in cochordal_graphs(5).unwrap() {
      assert!(g.complement().is_chordal());
    }
    assert!(chordal_graphs(11).is_err());
  }
}
