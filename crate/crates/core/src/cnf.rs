//! CNF formulas: DIMACS parsing, exhaustive model counting and random instances.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::index;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{rng, Error, Result};

/// Largest variable count accepted by [`brute_force_count`].
pub const BRUTE_FORCE_MAX_VARS: usize = 24;

/// Conjunction of clauses over variables `1..=n_vars`; literal `i` is `X_i` and `-i`
/// is `¬X_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CnfFormula {
  n_vars:  usize,
  clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
  /// Validates literal ranges, drops repeated literals and rejects tautologies.
  pub fn new(n_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
    let mut clean = Vec::with_capacity(clauses.len());
    for (j, clause) in clauses.into_iter().enumerate() {
      clean.push(normalize_clause(n_vars, clause).map_err(|m| Error::input(format!("clause {}: {m}", j + 1)))?);
    }
    Ok(Self { n_vars, clauses: clean })
  }

  pub fn n_vars(&self) -> usize { self.n_vars }

  pub fn clauses(&self) -> &[Vec<i32>] { &self.clauses }

  pub fn n_clauses(&self) -> usize { self.clauses.len() }

  /// Total number of literal occurrences.
  pub fn n_literals(&self) -> usize { self.clauses.iter().map(Vec::len).sum() }

  /// `Some(ℓ)` when every clause has exactly `ℓ` literals.
  pub fn uniform_width(&self) -> Option<usize> {
    let w = self.clauses.first()?.len();
    self.clauses.iter().all(|c| c.len() == w).then_some(w)
  }

  /// Does the assignment (bit `i` = value of `X_{i+1}`) satisfy every clause?
  pub fn is_satisfied_by(&self, assignment: u64) -> bool {
    self.clauses.iter().all(|c| {
      c.iter().any(|&l| {
        let bit = assignment >> (l.unsigned_abs() - 1) & 1 == 1;
        if l > 0 { bit } else { !bit }
      })
    })
  }

  pub fn to_dimacs(&self) -> String {
    let mut out = format!("p cnf {} {}\n", self.n_vars, self.clauses.len());
    for c in &self.clauses {
      for l in c {
        out.push_str(&format!("{l} "));
      }
      out.push_str("0\n");
    }
    out
  }
}

fn normalize_clause(n_vars: usize, mut clause: Vec<i32>) -> core::result::Result<Vec<i32>, String> {
  for &l in &clause {
    if l == 0 || l.unsigned_abs() as usize > n_vars {
      return Err(format!("literal {l} outside ±1..={n_vars}"));
    }
  }
  clause.sort_by_key(|&l| (l.unsigned_abs(), l < 0));
  clause.dedup();
  if clause.windows(2).any(|w| w[0] == -w[1]) {
    return Err(String::from("tautological clause (contains a literal and its negation)"));
  }
  Ok(clause)
}

/// Parses DIMACS CNF. Comment lines start with `c`; a `%` line ends the data
/// (SATLIB convention). Clauses may span lines and must end with `0`.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
  let mut header: Option<(usize, usize)> = None;
  let mut clauses: Vec<Vec<i32>> = Vec::new();
  let mut current: Vec<i32> = Vec::new();
  let mut current_line = 0;
  let mut last_line = 0;
  for (idx, raw) in text.lines().enumerate() {
    let line_no = idx + 1;
    last_line = line_no;
    let line = raw.trim();
    if line.is_empty() || line.starts_with('c') {
      continue;
    }
    if line.starts_with('%') {
      break;
    }
    if line.starts_with('p') {
      if header.is_some() {
        return Err(Error::parse(line_no, "duplicate problem line"));
      }
      let fields: Vec<&str> = line.split_whitespace().collect();
      let parsed = match fields.as_slice() {
        ["p", "cnf", v, c] => v.parse::<usize>().ok().zip(c.parse::<usize>().ok()),
        _ => None,
      };
      header = Some(parsed.ok_or_else(|| Error::parse(line_no, format!("malformed header `{line}`, expected `p cnf <vars> <clauses>`")))?);
      continue;
    }
    let Some((n_vars, _)) = header else {
      return Err(Error::parse(line_no, "clause before the `p cnf` header"));
    };
    for tok in line.split_whitespace() {
      let lit: i32 = tok.parse().map_err(|_| Error::parse(line_no, format!("`{tok}` is not an integer literal")))?;
      if lit == 0 {
        let clause = core::mem::take(&mut current);
        clauses.push(normalize_clause(n_vars, clause).map_err(|m| Error::parse(current_line.max(line_no), m))?);
        current_line = 0;
        continue;
      }
      if lit.unsigned_abs() as usize > n_vars {
        return Err(Error::parse(line_no, format!("literal {lit} exceeds the declared {n_vars} variables")));
      }
      if current.is_empty() {
        current_line = line_no;
      }
      current.push(lit);
    }
  }
  let Some((n_vars, n_clauses)) = header else {
    return Err(Error::parse(last_line.max(1), "missing `p cnf` header"));
  };
  if !current.is_empty() {
    return Err(Error::parse(current_line, "clause is missing its terminating 0"));
  }
  if clauses.len() != n_clauses {
    return Err(Error::parse(last_line, format!("header declares {n_clauses} clauses but {} were read", clauses.len())));
  }
  Ok(CnfFormula { n_vars, clauses })
}

/// Number of satisfying assignments by enumerating all `2^n` of them.
pub fn brute_force_count(formula: &CnfFormula) -> Result<u64> {
  let n = formula.n_vars();
  if n > BRUTE_FORCE_MAX_VARS {
    return Err(Error::budget("brute_force_vars", BRUTE_FORCE_MAX_VARS as u64, format!("{n} variables")));
  }
  // clause j is satisfied iff a & pos[j] != 0 or !a & neg[j] != 0
  let masks: Vec<(u64, u64)> = formula
    .clauses()
    .iter()
    .map(|c| {
      c.iter().fold((0, 0), |(p, q), &l| {
        let bit = 1u64 << (l.unsigned_abs() - 1);
        if l > 0 { (p | bit, q) } else { (p, q | bit) }
      })
    })
    .collect();
  let mut count = 0;
  for a in 0..(1u64 << n) {
    if masks.iter().all(|&(p, q)| a & p != 0 || !a & q != 0) {
      count += 1;
    }
  }
  Ok(count)
}

/// Random formula whose clauses have `width` distinct variables with random signs.
pub fn random_uniform(n_vars: usize, n_clauses: usize, width: usize, seed: u64) -> Result<CnfFormula> {
  if width == 0 || width > n_vars {
    return Err(Error::input(format!("clause width {width} needs 1..={n_vars}")));
  }
  let mut g = rng::generator(seed);
  let clauses = (0..n_clauses)
    .map(|_| {
      index::sample(&mut g, n_vars, width)
        .into_iter()
        .map(|v| {
          let lit = v as i32 + 1;
          if g.random::<bool>() { lit } else { -lit }
        })
        .collect()
    })
    .collect();
  CnfFormula::new(n_vars, clauses)
}
