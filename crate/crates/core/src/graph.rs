//! Graphs, point clouds and the random models that produce them.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::rng;
use crate::{Error, Result};

/// Role tag of a vertex in a reduction gadget. Indices are 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexRole {
  /// `t_i`: variable `i` is true.
  True(usize),
  /// `f_i`: variable `i` is false.
  False(usize),
  /// `p_i`: placeholder vertex of variable `i`.
  Present(usize),
  /// `c_j`: clause `j`.
  Clause(usize),
}

impl fmt::Display for VertexRole {
  fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    // 1-based in text, matching the usual X_1..X_n naming
    match self {
      VertexRole::True(i) => write!(f, "t{}", i + 1),
      VertexRole::False(i) => write!(f, "f{}", i + 1),
      VertexRole::Present(i) => write!(f, "p{}", i + 1),
      VertexRole::Clause(j) => write!(f, "c{}", j + 1),
    }
  }
}

impl Serialize for VertexRole {
  fn serialize<S: serde::Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
    s.collect_str(self)
  }
}

impl<'de> Deserialize<'de> for VertexRole {
  fn deserialize<D: serde::Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
    let text = String::deserialize(d)?;
    let (head, tail) = text.split_at(text.len().min(1));
    let index: usize = tail.parse().map_err(serde::de::Error::custom)?;
    if index == 0 {
      return Err(serde::de::Error::custom("role indices are 1-based"));
    }
    match head {
      "t" => Ok(VertexRole::True(index - 1)),
      "f" => Ok(VertexRole::False(index - 1)),
      "p" => Ok(VertexRole::Present(index - 1)),
      "c" => Ok(VertexRole::Clause(index - 1)),
      _ => Err(serde::de::Error::custom(format!("unknown vertex role `{text}`"))),
    }
  }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
  n:     usize,
  adj:   Vec<BitSet>,
  roles: Option<Vec<VertexRole>>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
  n_vertices: usize,
  edges:      Vec<(usize, usize)>,
  #[serde(default, skip_serializing_if = "Option::is_none")]
  roles:      Option<Vec<VertexRole>>,
}

impl From<Graph> for GraphRepr {
  fn from(g: Graph) -> Self { GraphRepr { n_vertices: g.n, edges: g.edges(), roles: g.roles } }
}

impl TryFrom<GraphRepr> for Graph {
  type Error = Error;

  fn try_from(r: GraphRepr) -> Result<Self> {
    let g = Graph::from_edges(r.n_vertices, &r.edges)?;
    match r.roles {
      Some(roles) => g.with_roles(roles),
      None => Ok(g),
    }
  }
}

impl Graph {
  pub fn empty(n: usize) -> Self { Self { n, adj: (0..n).map(|_| BitSet::new(n)).collect(), roles: None } }

  pub fn complete(n: usize) -> Self {
    let mut g = Self::empty(n);
    for u in 0..n {
      for v in u + 1..n {
        g.connect(u, v);
      }
    }
    g
  }

  pub fn cycle(n: usize) -> Self {
    let mut g = Self::empty(n);
    for u in 0..n {
      let v = (u + 1) % n;
      if u != v {
        g.connect(u, v);
      }
    }
    g
  }

  pub fn path(n: usize) -> Self {
    let mut g = Self::empty(n);
    for u in 1..n {
      g.connect(u - 1, u);
    }
    g
  }

  /// Builds a graph from an edge list. Repeated edges collapse to one; self-loops and
  /// out-of-range endpoints are rejected.
  pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
    let mut g = Self::empty(n);
    for &(u, v) in edges {
      g.add_edge(u, v)?;
    }
    Ok(g)
  }

  pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
    if u >= self.n || v >= self.n {
      return Err(Error::input(format!("edge ({u}, {v}) has an endpoint outside 0..{}", self.n)));
    }
    if u == v {
      return Err(Error::input(format!("self-loop at vertex {u}")));
    }
    self.connect(u, v);
    Ok(())
  }

  fn connect(&mut self, u: usize, v: usize) {
    self.adj[u].insert(v);
    self.adj[v].insert(u);
  }

  pub fn with_roles(mut self, roles: Vec<VertexRole>) -> Result<Self> {
    if roles.len() != self.n {
      return Err(Error::input(format!("{} roles given for {} vertices", roles.len(), self.n)));
    }
    self.roles = Some(roles);
    Ok(self)
  }

  pub fn n_vertices(&self) -> usize { self.n }

  pub fn n_edges(&self) -> usize { self.adj.iter().map(BitSet::count).sum::<usize>() / 2 }

  pub fn roles(&self) -> Option<&[VertexRole]> { self.roles.as_deref() }

  #[inline]
  pub fn has_edge(&self, u: usize, v: usize) -> bool { u < self.n && self.adj[u].contains(v) }

  pub fn neighbors(&self, v: usize) -> &BitSet { &self.adj[v] }

  pub fn degree(&self, v: usize) -> usize { self.adj[v].count() }

  /// Edges `(u, v)` with `u < v`, in lexicographic order.
  pub fn edges(&self) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(self.n_edges());
    for u in 0..self.n {
      for v in self.adj[u].iter().filter(|&v| v > u) {
        out.push((u, v));
      }
    }
    out
  }

  /// Unordered pairs that are not edges, in lexicographic order.
  pub fn non_edges(&self) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in 0..self.n {
      for v in u + 1..self.n {
        if !self.has_edge(u, v) {
          out.push((u, v));
        }
      }
    }
    out
  }

  pub fn complement(&self) -> Graph {
    let mut g = Graph::empty(self.n);
    for (u, v) in self.non_edges() {
      g.connect(u, v);
    }
    g
  }

  pub fn is_clique(&self, vertices: &[usize]) -> bool {
    vertices.iter().enumerate().all(|(i, &u)| vertices[i + 1..].iter().all(|&v| self.has_edge(u, v)))
  }

  /// Disjoint union; vertices of `other` are shifted by `self.n_vertices()`.
  pub fn disjoint_union(&self, other: &Graph) -> Graph {
    let mut g = Graph::empty(self.n + other.n);
    for (u, v) in self.edges() {
      g.connect(u, v);
    }
    for (u, v) in other.edges() {
      g.connect(u + self.n, v + self.n);
    }
    g
  }

  /// Maximum cardinality search ordering, first visited vertex first. Ties go to the
  /// smallest index.
  pub fn maximum_cardinality_search(&self) -> Vec<usize> {
    let mut weight = alloc::vec![0usize; self.n];
    let mut visited = alloc::vec![false; self.n];
    let mut order = Vec::with_capacity(self.n);
    for _ in 0..self.n {
      let v = (0..self.n).filter(|&v| !visited[v]).max_by_key(|&v| (weight[v], core::cmp::Reverse(v))).unwrap();
      visited[v] = true;
      order.push(v);
      for w in self.adj[v].iter() {
        if !visited[w] {
          weight[w] += 1;
        }
      }
    }
    order
  }

  /// A perfect elimination ordering if the graph is chordal.
  ///
  /// The reverse of a maximum cardinality search order is checked with the
  /// Tarjan–Yannakakis test: for every vertex, its neighbours later in the ordering
  /// must all be adjacent to the earliest of them.
  pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
    let mut peo = self.maximum_cardinality_search();
    peo.reverse();
    let mut position = alloc::vec![0usize; self.n];
    for (i, &v) in peo.iter().enumerate() {
      position[v] = i;
    }
    for &v in &peo {
      let later: Vec<usize> = self.adj[v].iter().filter(|&w| position[w] > position[v]).collect();
      if let Some(&parent) = later.iter().min_by_key(|&&w| position[w]) {
        if later.iter().any(|&w| w != parent && !self.has_edge(parent, w)) {
          return None;
        }
      }
    }
    Some(peo)
  }

  pub fn is_chordal(&self) -> bool { self.perfect_elimination_ordering().is_some() }
}

/// Finite point set in `R^d` with the Euclidean metric.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointCloud {
  points: Vec<Vec<f64>>,
  dim:    usize,
}

impl PointCloud {
  pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
    let dim = points.first().map(Vec::len).ok_or_else(|| Error::input("point cloud is empty"))?;
    if dim == 0 {
      return Err(Error::input("points must have at least one coordinate"));
    }
    for (i, p) in points.iter().enumerate() {
      if p.len() != dim {
        return Err(Error::input(format!("point {i} has {} coordinates, expected {dim}", p.len())));
      }
      if p.iter().any(|x| !x.is_finite()) {
        return Err(Error::input(format!("point {i} has a non-finite coordinate")));
      }
    }
    Ok(Self { points, dim })
  }

  pub fn len(&self) -> usize { self.points.len() }

  pub fn is_empty(&self) -> bool { self.points.is_empty() }

  pub fn dim(&self) -> usize { self.dim }

  pub fn points(&self) -> &[Vec<f64>] { &self.points }

  pub fn distance(&self, i: usize, j: usize) -> f64 {
    let d2: f64 = self.points[i].iter().zip(&self.points[j]).map(|(a, b)| (a - b) * (a - b)).sum();
    libm::sqrt(d2)
  }

  /// Connects `i` and `j` iff their distance is strictly below `epsilon`.
  pub fn epsilon_graph(&self, epsilon: f64) -> Result<Graph> {
    if !(epsilon > 0.0) || !epsilon.is_finite() {
      return Err(Error::input(format!("grouping scale must be a positive finite number, got {epsilon}")));
    }
    let mut g = Graph::empty(self.len());
    for i in 0..self.len() {
      for j in i + 1..self.len() {
        if self.distance(i, j) < epsilon {
          g.connect(i, j);
        }
      }
    }
    Ok(g)
  }
}

/// Parameters of a seeded random graph model.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case")]
pub enum RandomModel {
  /// `n` uniform points in `[0,1]^d`, connected below distance `epsilon`.
  VietorisRips { n: usize, d: usize, epsilon: f64 },
  /// Each of the `C(n,2)` edges present independently with probability `p`.
  ErdosRenyi { n: usize, p: f64 },
}

impl RandomModel {
  pub fn validate(&self) -> Result<()> {
    match *self {
      RandomModel::VietorisRips { d, epsilon, .. } => {
        if d == 0 {
          return Err(Error::input("ambient dimension must be positive"));
        }
        if !(epsilon >= 0.0) || !epsilon.is_finite() {
          return Err(Error::input(format!("epsilon must be finite and non-negative, got {epsilon}")));
        }
      },
      RandomModel::ErdosRenyi { p, .. } => {
        if !(0.0..=1.0).contains(&p) {
          return Err(Error::input(format!("edge probability must lie in [0, 1], got {p}")));
        }
      },
    }
    Ok(())
  }

  pub fn n(&self) -> usize {
    match *self {
      RandomModel::VietorisRips { n, .. } | RandomModel::ErdosRenyi { n, .. } => n,
    }
  }
}

/// `n` i.i.d. uniform points in the unit cube `[0,1]^d`.
pub fn random_points(n: usize, d: usize, seed: u64) -> Result<PointCloud> {
  let mut rng = rng::generator(seed);
  let points = (0..n).map(|_| (0..d).map(|_| rng.random::<f64>()).collect()).collect();
  PointCloud::new(points)
}

pub fn random_graph(model: &RandomModel, seed: u64) -> Result<Graph> {
  model.validate()?;
  match *model {
    RandomModel::VietorisRips { n, d, epsilon } => {
      if n == 0 {
        return Ok(Graph::empty(0));
      }
      let cloud = random_points(n, d, seed)?;
      if epsilon == 0.0 {
        // strict inequality: nothing is closer than 0
        return Ok(Graph::empty(n));
      }
      cloud.epsilon_graph(epsilon)
    },
    RandomModel::ErdosRenyi { n, p } => {
      let mut rng = rng::generator(seed);
      let mut g = Graph::empty(n);
      for u in 0..n {
        for v in u + 1..n {
          if rng.random::<f64>() < p {
            g.connect(u, v);
          }
        }
      }
      Ok(g)
    },
  }
}
