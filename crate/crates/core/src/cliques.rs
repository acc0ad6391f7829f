//! Clique enumeration: every clique up to a size cap, streaming clique counts, and
//! maximal cliques (Bron–Kerbosch with Tomita pivoting).

use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::graph::Graph;
use crate::{Error, Result};

/// Cliques grouped by size: `by_dim[k]` is a flat buffer of `(k+1)`-cliques, each an
/// increasing vertex tuple, in lexicographic order.
#[derive(Debug, Clone)]
pub struct CliqueTable {
  pub by_dim:    Vec<Vec<u32>>,
  /// Some clique of size `max_dim + 2` exists but was not enumerated.
  pub truncated: bool,
}

struct Walk<'a> {
  graph:     &'a Graph,
  max_size:  usize,
  stack:     Vec<u32>,
  truncated: bool,
}

impl Walk<'_> {
  /// Depth-first extension of `self.stack` by increasing members of `cand`.
  fn extend<F: FnMut(&[u32]) -> Result<()>>(&mut self, cand: &BitSet, emit: &mut F) -> Result<()> {
    emit(&self.stack)?;
    if cand.is_empty() {
      return Ok(());
    }
    if self.stack.len() == self.max_size {
      self.truncated = true;
      return Ok(());
    }
    for w in cand.iter() {
      let mut next = cand.intersection(self.graph.neighbors(w));
      next.retain_above(w);
      self.stack.push(w as u32);
      self.extend(&next, emit)?;
      self.stack.pop();
    }
    Ok(())
  }
}

/// Calls `emit` on every clique with at most `max_dim + 1` vertices.
///
/// Without `exclude`, cliques arrive in lexicographic order of their increasing tuples.
/// With `exclude = Some(face)`, cliques contained in `face` are skipped; each remaining
/// clique is generated from its smallest vertex outside `face` and is handed to `emit`
/// unsorted. Returns whether larger cliques were cut off by the cap.
pub fn walk_cliques<F>(graph: &Graph, max_dim: usize, exclude: Option<&BitSet>, mut emit: F) -> Result<bool>
where
  F: FnMut(&[u32]) -> Result<()>,
{
  let n = graph.n_vertices();
  let mut walk = Walk { graph, max_size: max_dim + 1, stack: Vec::with_capacity(max_dim + 1), truncated: false };
  for u in 0..n {
    if exclude.is_some_and(|f| f.contains(u)) {
      continue;
    }
    let mut cand = graph.neighbors(u).clone();
    match exclude {
      Some(face) => {
        let mut above = cand.clone();
        above.retain_above(u);
        above.difference_with(face);
        cand.intersect_with(face);
        for v in above.iter() {
          cand.insert(v);
        }
      },
      None => cand.retain_above(u),
    }
    walk.stack.push(u as u32);
    walk.extend(&cand, &mut emit)?;
    walk.stack.pop();
  }
  Ok(walk.truncated)
}

/// Enumerates and stores all cliques of at most `max_dim + 1` vertices.
pub fn enumerate_cliques(graph: &Graph, max_dim: usize, max_simplices: usize, exclude: Option<&BitSet>) -> Result<CliqueTable> {
  let mut by_dim: Vec<Vec<u32>> = Vec::new();
  let mut stored = 0usize;
  let truncated = walk_cliques(graph, max_dim, exclude, |c| {
    stored += 1;
    if stored > max_simplices {
      return Err(Error::budget(
        "max_simplices",
        max_simplices as u64,
        "clique complex too large; lower max_dim or raise max_simplices",
      ));
    }
    let k = c.len() - 1;
    if by_dim.len() <= k {
      by_dim.resize_with(k + 1, Vec::new);
    }
    by_dim[k].extend_from_slice(c);
    Ok(())
  })?;
  if exclude.is_some() {
    for (k, flat) in by_dim.iter_mut().enumerate() {
      sort_tuples(flat, k + 1);
    }
  }
  Ok(CliqueTable { by_dim, truncated })
}

/// Number of cliques of each size up to `max_dim + 1`, without storing them.
/// `max_enumerated` caps the number of cliques visited.
pub fn count_cliques(graph: &Graph, max_dim: usize, max_enumerated: u64) -> Result<(Vec<u64>, bool)> {
  if graph.n_vertices() <= 64 {
    return count_cliques_small(graph, max_dim, max_enumerated);
  }
  let mut counts: Vec<u64> = Vec::new();
  let mut visited = 0u64;
  let truncated = walk_cliques(graph, max_dim, None, |c| {
    visited += 1;
    if visited > max_enumerated {
      return Err(Error::budget("max_enumerated", max_enumerated, "too many cliques to count at desk scale"));
    }
    if counts.len() < c.len() {
      counts.resize(c.len(), 0);
    }
    counts[c.len() - 1] += 1;
    Ok(())
  })?;
  Ok((counts, truncated))
}

struct SmallCount {
  adj:       Vec<u64>,
  counts:    Vec<u64>,
  max_size:  usize,
  visited:   u64,
  limit:     u64,
  truncated: bool,
}

impl SmallCount {
  fn extend(&mut self, size: usize, mut cand: u64) -> Result<()> {
    self.visited += 1;
    if self.visited > self.limit {
      return Err(Error::budget("max_enumerated", self.limit, "too many cliques to count at desk scale"));
    }
    self.counts[size - 1] += 1;
    if cand == 0 {
      return Ok(());
    }
    if size == self.max_size {
      self.truncated = true;
      return Ok(());
    }
    while cand != 0 {
      let w = cand.trailing_zeros() as usize;
      cand &= cand - 1;
      self.extend(size + 1, cand & self.adj[w])?;
    }
    Ok(())
  }
}

// Word-sized version of the walk for graphs on at most 64 vertices; no allocation per node.
fn count_cliques_small(graph: &Graph, max_dim: usize, max_enumerated: u64) -> Result<(Vec<u64>, bool)> {
  let n = graph.n_vertices();
  let adj: Vec<u64> = (0..n).map(|v| graph.neighbors(v).words().first().copied().unwrap_or(0)).collect();
  let max_size = max_dim.saturating_add(1).min(n.max(1));
  let mut walk = SmallCount { adj, counts: alloc::vec![0; max_size], max_size, visited: 0, limit: max_enumerated, truncated: false };
  for u in 0..n {
    let above = if u == 63 { 0 } else { !0u64 << (u + 1) };
    walk.extend(1, walk.adj[u] & above)?;
  }
  let mut counts = walk.counts;
  while counts.last() == Some(&0) {
    counts.pop();
  }
  Ok((counts, walk.truncated))
}

/// Sorts a flat buffer of `width`-tuples lexicographically (each tuple sorted first) and
/// drops duplicates.
pub fn sort_tuples(flat: &mut Vec<u32>, width: usize) {
  let mut tuples: Vec<&mut [u32]> = flat.chunks_mut(width).collect();
  for t in tuples.iter_mut() {
    t.sort_unstable();
  }
  let mut owned: Vec<Vec<u32>> = tuples.into_iter().map(|t| t.to_vec()).collect();
  owned.sort_unstable();
  owned.dedup();
  flat.clear();
  for t in owned {
    flat.extend_from_slice(&t);
  }
}

/// All maximal cliques of `graph`, each sorted, in lexicographic order.
pub fn maximal_cliques(graph: &Graph) -> Vec<Vec<usize>> {
  maximal_cliques_within(graph, &BitSet::full(graph.n_vertices()))
}

/// Maximal cliques of the subgraph induced on `allowed`.
pub fn maximal_cliques_within(graph: &Graph, allowed: &BitSet) -> Vec<Vec<usize>> {
  let mut out = Vec::new();
  let mut r = Vec::new();
  let x = BitSet::new(graph.n_vertices());
  if !allowed.is_empty() {
    bron_kerbosch(graph, &mut r, allowed.clone(), x, allowed, &mut out);
  }
  for c in &mut out {
    c.sort_unstable();
  }
  out.sort();
  out
}

fn bron_kerbosch(graph: &Graph, r: &mut Vec<usize>, mut p: BitSet, mut x: BitSet, allowed: &BitSet, out: &mut Vec<Vec<usize>>) {
  if p.is_empty() {
    if x.is_empty() {
      out.push(r.clone());
    }
    return;
  }
  // Tomita pivot: the vertex of P ∪ X with the most neighbours in P
  let pivot = p
    .iter()
    .chain(x.iter())
    .max_by_key(|&u| p.intersection_count(graph.neighbors(u)))
    .expect("P is non-empty");
  let mut branch = p.clone();
  branch.difference_with(graph.neighbors(pivot));
  for v in branch.iter() {
    let mut nv = graph.neighbors(v).clone();
    nv.intersect_with(allowed);
    r.push(v);
    bron_kerbosch(graph, r, p.intersection(&nv), x.intersection(&nv), allowed, out);
    r.pop();
    p.remove(v);
    x.insert(v);
  }
}

#[cfg(test)]
mod tests {
  use alloc::vec;

  use super::*;

  #[test]
  fn k4_cliques_in_lex_order() {
    let t = enumerate_cliques(&Graph::complete(4), 16, 100, None).unwrap();
    let counts: Vec<usize> = t.by_dim.iter().enumerate().map(|(k, f)| f.len() / (k + 1)).collect();
    assert_eq!(counts, vec![4, 6, 4, 1]);
    assert_eq!(t.by_dim[1], vec![0, 1, 0, 2, 0, 3, 1, 2, 1, 3, 2, 3]);
    assert!(!t.truncated);
  }

  #[test]
  fn cap_and_budget() {
    let t = enumerate_cliques(&Graph::complete(5), 1, 100, None).unwrap();
    assert_eq!(t.by_dim.len(), 2);
    assert!(t.truncated);
    let err = enumerate_cliques(&Graph::complete(5), 16, 10, None).unwrap_err();
    assert!(err.is_budget());
  }

  #[test]
  fn exclusion_skips_subsets_of_face() {
    let g = Graph::complete(4);
    let mut face = BitSet::new(4);
    face.insert(2);
    face.insert(3);
    let t = enumerate_cliques(&g, 16, 100, Some(&face)).unwrap();
    let total: usize = t.by_dim.iter().enumerate().map(|(k, f)| f.len() / (k + 1)).sum();
    // 15 nonempty cliques of K4 minus the 3 inside {2,3}
    assert_eq!(total, 12);
    assert_eq!(t.by_dim[0], vec![0, 1]);
    assert_eq!(t.by_dim[1], vec![0, 1, 0, 2, 0, 3, 1, 2, 1, 3]);
  }

  #[test]
  fn counting_matches_enumeration() {
    let g = Graph::cycle(7).complement();
    let t = enumerate_cliques(&g, 16, 10_000, None).unwrap();
    let (counts, _) = count_cliques(&g, 16, 10_000).unwrap();
    let stored: Vec<u64> = t.by_dim.iter().enumerate().map(|(k, f)| (f.len() / (k + 1)) as u64).collect();
    assert_eq!(counts, stored);
    let (capped, truncated) = count_cliques(&Graph::complete(6), 2, 10_000).unwrap();
    assert_eq!((capped, truncated), (vec![6, 15, 20], true));
    assert!(count_cliques(&Graph::complete(10), 9, 100).unwrap_err().is_budget());
  }

  #[test]
  fn wide_graphs_take_the_general_path() {
    // 70 vertices: two disjoint K35 blocks
    let g = Graph::complete(35).disjoint_union(&Graph::complete(35));
    let (counts, truncated) = count_cliques(&g, 2, 1_000_000).unwrap();
    assert_eq!(counts, vec![70, 2 * 595, 2 * 6545]);
    assert!(truncated);
    let small = Graph::complete(35);
    assert_eq!(count_cliques(&small, 2, 1_000_000).unwrap().0, vec![35, 595, 6545]);
  }

  #[test]
  fn maximal_cliques_of_small_graphs() {
    assert_eq!(maximal_cliques(&Graph::cycle(4)), vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
    assert_eq!(maximal_cliques(&Graph::complete(4)), vec![vec![0, 1, 2, 3]]);
    assert_eq!(maximal_cliques(&Graph::empty(2)), vec![vec![0], vec![1]]);
    // Moon–Moser graph K_{3,3,3}: 27 maximal triangles
    let mut mm = Graph::empty(9);
    for u in 0..9 {
      for v in u + 1..9 {
        if u % 3 != v % 3 {
          mm.add_edge(u, v).unwrap();
        }
      }
    }
    assert_eq!(maximal_cliques(&mm).len(), 27);
  }
}
