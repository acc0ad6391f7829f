//! Text formats: point CSV, edge lists, face lists, complex JSON, DIMACS and boundary
//! triplets. Parsers work on strings and report 1-based line numbers; the `read_*`
//! wrappers add the file name.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use bettikit_core::boundary::BoundaryMatrix;
use bettikit_core::cnf::{parse_dimacs, CnfFormula};
use bettikit_core::complex::{SetSystem, SimplicialComplex};
use bettikit_core::graph::{Graph, PointCloud};
use bettikit_core::{Error, Result};
use serde::Deserialize;

use crate::error::{CliError, CliResult};

pub fn read_text(path: &Path) -> CliResult<String> {
  fs::read_to_string(path).map_err(|source| CliError::Read { path: path.to_path_buf(), source })
}

pub fn write_text(path: &Path, text: &str) -> CliResult<()> {
  if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
    fs::create_dir_all(dir).map_err(|source| CliError::Write { path: dir.to_path_buf(), source })?;
  }
  fs::write(path, text).map_err(|source| CliError::Write { path: path.to_path_buf(), source })
}

/// Lines with their 1-based numbers, skipping blanks and `#` comments.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
  text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_index(tok: &str, line: usize) -> Result<usize> {
  tok.parse().map_err(|_| Error::parse(line, format!("`{tok}` is not a vertex index")))
}

/// `n <count>` header line, if `line` is one.
fn vertex_header(line: &str, no: usize) -> Result<Option<usize>> {
  let mut it = line.split_whitespace();
  if it.next() != Some("n") {
    return Ok(None);
  }
  match (it.next(), it.next()) {
    (Some(count), None) => count.parse().map(Some).map_err(|_| Error::parse(no, format!("bad vertex count `{count}`"))),
    _ => Err(Error::parse(no, "expected `n <count>`")),
  }
}

/// One point per row, comma separated; a first row that is not numeric is a header.
pub fn parse_points_csv(text: &str) -> Result<PointCloud> {
  let mut reader = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).comment(Some(b'#')).from_reader(text.as_bytes());
  let mut points = Vec::new();
  for (i, record) in reader.records().enumerate() {
    let record = record.map_err(|e| Error::parse(e.position().map_or(0, |p| p.line() as usize), e.to_string()))?;
    let line = record.position().map_or(i + 1, |p| p.line() as usize);
    let parsed: std::result::Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
    match parsed {
      Ok(row) => points.push(row),
      Err(_) if points.is_empty() && i == 0 => continue,
      Err(_) => return Err(Error::parse(line, format!("non-numeric coordinate in `{}`", record.iter().collect::<Vec<_>>().join(",")))),
    }
    if let Some(bad) = points.last().and_then(|p| p.iter().find(|x| !x.is_finite())) {
      return Err(Error::parse(line, format!("coordinate {bad} is not finite")));
    }
  }
  PointCloud::new(points)
}

/// `n <count>` on the first line, then one `u v` pair per line, 0-indexed.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
  let mut lines = content_lines(text);
  let (no, first) = lines.next().ok_or_else(|| Error::parse(1, "empty edge list; expected `n <count>`"))?;
  let n = vertex_header(first, no)?.ok_or_else(|| Error::parse(no, "edge list must start with `n <count>`"))?;
  let mut g = Graph::empty(n);
  for (no, line) in lines {
    let toks: Vec<&str> = line.split_whitespace().collect();
    let [u, v] = toks[..] else {
      return Err(Error::parse(no, format!("expected `u v`, got `{line}`")));
    };
    let (u, v) = (parse_index(u, no)?, parse_index(v, no)?);
    if u >= n || v >= n {
      return Err(Error::parse(no, format!("edge ({u}, {v}) has an endpoint outside 0..{n}")));
    }
    if u == v {
      return Err(Error::parse(no, format!("self-loop at vertex {u}")));
    }
    g.add_edge(u, v).map_err(|e| Error::parse(no, e.to_string()))?;
  }
  Ok(g)
}

pub fn format_edge_list(g: &Graph) -> String {
  let mut out = format!("n {}\n", g.n_vertices());
  for (u, v) in g.edges() {
    let _ = writeln!(out, "{u} {v}");
  }
  out
}

/// One face per line as space-separated vertex indices; an optional `n <count>` first
/// line fixes the vertex count (otherwise it is one more than the largest index).
pub fn parse_faces(text: &str) -> Result<SetSystem> {
  let mut declared = None;
  let mut faces = Vec::new();
  let mut max_vertex = None;
  for (i, (no, line)) in content_lines(text).enumerate() {
    if i == 0 {
      if let Some(n) = vertex_header(line, no)? {
        declared = Some(n);
        continue;
      }
    }
    let face = line.split_whitespace().map(|t| parse_index(t, no)).collect::<Result<Vec<usize>>>()?;
    if let (Some(n), Some(&v)) = (declared, face.iter().find(|&&v| v >= declared.unwrap_or(usize::MAX))) {
      return Err(Error::parse(no, format!("vertex {v} outside 0..{n}")));
    }
    max_vertex = face.iter().copied().chain(max_vertex).max();
    faces.push(face);
  }
  let n = declared.unwrap_or_else(|| max_vertex.map_or(0, |m| m + 1));
  SetSystem::new(n, faces)
}

#[derive(Deserialize)]
struct ComplexEnvelope {
  result: SimplicialComplex,
}

/// A complex as written by `complex build` (an envelope whose `result` is the complex) or
/// a bare complex object.
pub fn parse_complex_json(text: &str) -> std::result::Result<SimplicialComplex, String> {
  let value: serde_json::Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
  if value.get("result").is_some() {
    serde_json::from_value::<ComplexEnvelope>(value).map(|e| e.result).map_err(|e| e.to_string())
  } else {
    serde_json::from_value(value).map_err(|e| e.to_string())
  }
}

/// Sparse triplets: a `rows cols nnz` header, then `row col sign` per nonzero in
/// column-major order.
pub fn format_triplets(m: &BoundaryMatrix) -> String {
  let mut out = format!("{} {} {}\n", m.n_rows(), m.n_cols(), m.nnz());
  for (r, c, s) in m.triplets() {
    let _ = writeln!(out, "{r} {c} {s}");
  }
  out
}

pub fn read_points(path: &Path) -> CliResult<PointCloud> { parse_points_csv(&read_text(path)?).map_err(|e| CliError::in_file(path, e)) }

pub fn read_edges(path: &Path) -> CliResult<Graph> { parse_edge_list(&read_text(path)?).map_err(|e| CliError::in_file(path, e)) }

pub fn read_faces(path: &Path) -> CliResult<SetSystem> { parse_faces(&read_text(path)?).map_err(|e| CliError::in_file(path, e)) }

pub fn read_complex(path: &Path) -> CliResult<SimplicialComplex> {
  parse_complex_json(&read_text(path)?).map_err(|message| CliError::Format { path: path.to_path_buf(), message })
}

pub fn read_dimacs(path: &Path) -> CliResult<CnfFormula> { parse_dimacs(&read_text(path)?).map_err(|e| CliError::in_file(path, e)) }

#[cfg(test)]
mod tests {
  use super::*;

  #[test]
  fn points_with_and_without_header() {
    let a = parse_points_csv("x,y\n0,0\n1,0\n").unwrap();
    let b = parse_points_csv("0,0\n1,0\n").unwrap();
    assert_eq!(a, b);
    assert_eq!(a.dim(), 2);
    assert!(matches!(parse_points_csv("0,0\n1,x\n"), Err(Error::Parse { line: 2, .. })));
    assert!(parse_points_csv("0,0\n1\n").is_err());
    assert!(parse_points_csv("0,0\nNaN,1\n").is_err());
  }

  #[test]
  fn edge_lists() {
    let g = parse_edge_list("n 4\n0 1\n1 2\n# comment\n2 3\n3 0\n").unwrap();
    assert_eq!(g, Graph::cycle(4));
    assert_eq!(parse_edge_list(&format_edge_list(&g)).unwrap(), g);
    assert!(matches!(parse_edge_list("n 3\n0 5\n"), Err(Error::Parse { line: 2, .. })));
    assert!(matches!(parse_edge_list("0 1\n"), Err(Error::Parse { line: 1, .. })));
    assert!(matches!(parse_edge_list("n 3\n1 1\n"), Err(Error::Parse { line: 2, .. })));
    assert!(matches!(parse_edge_list("n 3\n0 1 2\n"), Err(Error::Parse { line: 2, .. })));
  }

  #[test]
  fn faces() {
    let s = parse_faces("0 1 2\n1 2 3\n").unwrap();
    assert_eq!(s.n_vertices(), 4);
    let s = parse_faces("n 6\n0 1\n").unwrap();
    assert_eq!(s.n_vertices(), 6);
    assert!(matches!(parse_faces("n 2\n0 3\n"), Err(Error::Parse { line: 2, .. })));
  }

  #[test]
  fn triplet_header() {
    let c = SimplicialComplex::clique_complex(&Graph::complete(3), &Default::default()).unwrap();
    let m = BoundaryMatrix::from_complex(&c, 2).unwrap();
    assert_eq!(format_triplets(&m), "3 1 3\n0 0 1\n1 0 -1\n2 0 1\n");
  }
}
