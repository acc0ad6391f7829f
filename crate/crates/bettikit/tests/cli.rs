use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(dir: &Path, args: &[&str]) -> Output {
  Command::new(env!("CARGO_BIN_EXE_bettikit")).current_dir(dir).args(args).output().unwrap()
}

fn ok_json(dir: &Path, args: &[&str]) -> Value {
  let out = run(dir, args);
  assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
  serde_json::from_slice(&out.stdout).unwrap()
}

fn fixtures() -> tempfile::TempDir {
  let dir = tempfile::tempdir().unwrap();
  let d = dir.path();
  fs::write(d.join("two.cnf"), "c two clauses\np cnf 2 2\n1 -2 0\n-1 2 0\n").unwrap();
  fs::write(d.join("k4.txt"), "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
  fs::write(d.join("square.csv"), "x,y\n0,0\n1,0\n1,1\n0,1\n").unwrap();
  fs::write(d.join("hollow.txt"), "0 1\n1 2\n0 2\n").unwrap();
  dir
}

#[test]
fn sat_count_reports_two_models() {
  let dir = fixtures();
  let v = ok_json(dir.path(), &["sat", "count", "two.cnf"]);
  assert_eq!(v["result"]["solutions"], 2);
  assert_eq!(v["result"]["chi"], -1);
  assert_eq!(v["result"]["simplex_counts"], serde_json::json!([8, 18, 10, 1]));
  assert_eq!(v["command"], "sat count");
  assert!(v["result"].get("elapsed_seconds").is_none() && v.get("elapsed_seconds").is_none());
  let timed = ok_json(dir.path(), &["sat", "count", "two.cnf", "--timing"]);
  assert!(timed["elapsed_seconds"].as_f64().unwrap() >= 0.0);
}

#[test]
fn betti_of_complete_graph() {
  let dir = fixtures();
  let v = ok_json(dir.path(), &["homology", "betti", "--edges", "k4.txt"]);
  assert_eq!(v["result"]["betti"], serde_json::json!([1, 0, 0, 0]));
}

#[test]
fn square_point_cloud_is_a_circle() {
  let dir = fixtures();
  let d = dir.path();
  let out = run(d, &["complex", "build", "--points", "square.csv", "--eps", "1.1", "-o", "sq.json"]);
  assert!(out.status.success());
  let v = ok_json(d, &["homology", "betti", "--complex", "sq.json"]);
  assert_eq!(v["result"]["betti"], serde_json::json!([1, 1]));
}

#[test]
fn exported_complex_round_trips() {
  let dir = fixtures();
  let d = dir.path();
  assert!(run(d, &["complex", "build", "--edges", "k4.txt", "-o", "a.json"]).status.success());
  assert!(run(d, &["complex", "build", "--complex", "a.json", "-o", "b.json"]).status.success());
  let a: Value = serde_json::from_slice(&fs::read(d.join("a.json")).unwrap()).unwrap();
  let b: Value = serde_json::from_slice(&fs::read(d.join("b.json")).unwrap()).unwrap();
  assert_eq!(a["result"], b["result"]);
  // homology of the re-imported complex, written to the same path, is byte-identical
  assert!(run(d, &["homology", "betti", "--complex", "a.json", "-o", "h.json"]).status.success());
  let first = fs::read(d.join("h.json")).unwrap();
  fs::copy(d.join("b.json"), d.join("a.json")).unwrap();
  assert!(run(d, &["homology", "betti", "--complex", "a.json", "-o", "h.json"]).status.success());
  assert_eq!(first, fs::read(d.join("h.json")).unwrap());
}

#[test]
fn envelope_carries_provenance() {
  let dir = fixtures();
  let v = ok_json(dir.path(), &["lgz", "simulate", "--edges", "k4.txt", "--k", "0", "--seed", "4", "--max-dim", "5"]);
  assert_eq!(v["tool"], "bettikit");
  assert_eq!(v["seed"], 4);
  assert_eq!(v["budgets"]["max_dim"], 5);
  assert_eq!(v["primes"], serde_json::json!([2147483647u64, 1000000007u64]));
  assert!(v["tolerances"]["machine_epsilon"].as_f64().unwrap() > 0.0);
  assert_eq!(v["config"]["samples"], 2000);
  assert_eq!(v["config"]["rescale"], "exact");
}

#[test]
fn faces_and_boundary_export() {
  let dir = fixtures();
  let d = dir.path();
  let v = ok_json(d, &["homology", "betti", "--faces", "hollow.txt"]);
  assert_eq!(v["result"]["betti"], serde_json::json!([1, 1]));
  let out = run(d, &["homology", "boundary", "--faces", "hollow.txt", "--k", "1"]);
  let text = String::from_utf8(out.stdout).unwrap();
  assert_eq!(text.lines().next(), Some("3 3 6"));
  assert_eq!(text.lines().count(), 7);
}

#[test]
fn exit_codes() {
  let dir = fixtures();
  let d = dir.path();
  let code = |args: &[&str]| run(d, args).status.code();
  assert_eq!(code(&["homology", "betti", "--edges", "missing.txt"]), Some(2));
  fs::write(d.join("bad.txt"), "n 3\n0 7\n").unwrap();
  let out = run(d, &["homology", "betti", "--edges", "bad.txt"]);
  assert_eq!(out.status.code(), Some(2));
  let err = String::from_utf8_lossy(&out.stderr);
  assert!(err.contains("bad.txt:2:"), "{err}");
  assert_eq!(code(&["homology", "betti", "--edges", "k4.txt", "--bogus"]), Some(2));
  assert_eq!(code(&["homology", "betti"]), Some(2));
  let out = run(d, &["homology", "betti", "--edges", "k4.txt", "--max-simplices", "5"]);
  assert_eq!(out.status.code(), Some(3));
  assert!(String::from_utf8_lossy(&out.stderr).contains("max_simplices"));
  fs::write(d.join("taut.cnf"), "p cnf 1 1\n1 -1 0\n").unwrap();
  assert_eq!(code(&["sat", "count", "taut.cnf"]), Some(2));
  assert_eq!(code(&["--version"]), Some(0));
  assert_eq!(code(&["lgz", "simulate", "--help"]), Some(0));
}

#[test]
fn reduce_and_emit_graph() {
  let dir = fixtures();
  let d = dir.path();
  fs::write(d.join("p3.txt"), "n 3\n0 1\n1 2\n").unwrap();
  let v = ok_json(d, &["reduce", "cochordal", "--edges", "p3.txt", "--emit-graph", "h.txt"]);
  assert_eq!(v["result"]["all_match"], true);
  assert_eq!(v["result"]["homology"], "reduced");
  assert!(fs::read_to_string(d.join("h.txt")).unwrap().starts_with("n 4\n"));
  fs::write(d.join("c4.txt"), "n 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
  // the 4-cycle's complement is two disjoint edges, which is chordal; the 5-cycle's is not
  assert!(run(d, &["reduce", "cochordal", "--edges", "c4.txt"]).status.success());
  fs::write(d.join("c5.txt"), "n 5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
  assert_eq!(run(d, &["reduce", "cochordal", "--edges", "c5.txt"]).status.code(), Some(2));
}

#[test]
fn sweep_csv_and_plot() {
  let dir = fixtures();
  let d = dir.path();
  fs::write(d.join("s.json"), r#"{"name":"er","k":1,"trials":3,"seed":2,"grid":{"model":"erdos-renyi","n":[8,10],"p":[0.3,0.6]}}"#).unwrap();
  assert!(run(d, &["random", "sweep", "s.json", "--csv", "t/rows.csv", "-o", "t/s.json"]).status.success());
  let v: Value = serde_json::from_slice(&fs::read(d.join("t/s.json")).unwrap()).unwrap();
  assert_eq!(v["result"]["rows"].as_array().unwrap().len(), 12);
  let rows = fs::read_to_string(d.join("t/rows.csv")).unwrap();
  assert_eq!(rows.lines().count(), 1 + 4 * 3);
  let cells = fs::read_to_string(d.join("t/rows.summary.csv")).unwrap();
  assert_eq!(cells.lines().count(), 1 + 4);
  let svg = run(d, &["plot", "--sweep", "t/s.json", "--x", "p"]);
  assert!(svg.status.success());
  let svg = String::from_utf8(svg.stdout).unwrap();
  assert!(svg.starts_with("<svg") && svg.matches("<polyline").count() == 2);
  fs::write(d.join("wrong.json"), r#"{"k":1}"#).unwrap();
  assert_eq!(run(d, &["random", "sweep", "wrong.json"]).status.code(), Some(2));
}

#[test]
fn skeleton_and_cost() {
  let dir = fixtures();
  let d = dir.path();
  assert!(run(d, &["skeleton", "--n", "5", "--k", "2", "-o", "sk.json"]).status.success());
  let v = ok_json(d, &["lgz", "cost", "--complex", "sk.json", "--k", "2", "--csv", "cost.csv"]);
  assert_eq!(v["result"]["n_simplices"], 20);
  assert_eq!(v["result"]["beta_k"], 10);
  assert_eq!(v["result"]["xi_squared_exact"], "2/1");
  assert_eq!(fs::read_to_string(d.join("cost.csv")).unwrap().lines().count(), 2);
  let v = ok_json(d, &["lgz", "cost", "--complex", "sk.json", "--k", "2", "--beta", "0"]);
  assert_eq!(v["result"]["xi"], "inf");
  let v = ok_json(d, &["spectrum", "--complex", "sk.json", "--k", "2", "--global"]);
  assert_eq!(v["result"]["nullity"], 10);
}
