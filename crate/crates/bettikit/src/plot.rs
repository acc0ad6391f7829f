//! Static SVG line charts of sweep summaries.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use bettikit_core::experiments::CellSummary;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum XAxis {
  /// Vertex count; one line per ε ratio, ε or p.
  N,
  /// Absolute ε; one line per n.
  Epsilon,
  /// ε / r̂; one line per n.
  EpsilonRatio,
  /// Edge probability; one line per n.
  P,
}

pub struct Series {
  pub label:  String,
  pub points: Vec<(f64, f64, Option<f64>)>,
}

fn key(x: Option<f64>) -> String { x.map_or_else(|| "-".into(), |v| format!("{v:.4}")) }

/// Mean `β_k` against the chosen axis, one series per value of the other parameter.
pub fn series(summary: &[CellSummary], x: XAxis) -> Vec<Series> {
  let mut groups: BTreeMap<(u64, String), Series> = BTreeMap::new();
  for cell in summary {
    let Some(y) = cell.mean_beta_k else { continue };
    let (xv, label, order) = match x {
      XAxis::N => {
        let (name, v) = match (cell.epsilon_ratio, cell.epsilon, cell.p) {
          (Some(r), _, _) => ("eps/r", Some(r)),
          (None, Some(e), _) => ("eps", Some(e)),
          (_, _, p) => ("p", p),
        };
        (Some(cell.n as f64), format!("{name} = {}", key(v)), v.map_or(0, f64::to_bits))
      },
      XAxis::Epsilon => (cell.epsilon, format!("n = {}", cell.n), cell.n as u64),
      XAxis::EpsilonRatio => (cell.epsilon_ratio, format!("n = {}", cell.n), cell.n as u64),
      XAxis::P => (cell.p, format!("n = {}", cell.n), cell.n as u64),
    };
    let Some(xv) = xv else { continue };
    groups.entry((order, label.clone())).or_insert_with(|| Series { label, points: Vec::new() }).points.push((xv, y, cell.ci95_beta_k));
  }
  let mut out: Vec<Series> = groups.into_values().collect();
  for s in &mut out {
    s.points.sort_by(|a, b| a.0.total_cmp(&b.0));
  }
  out
}

const COLORS: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"];

/// Renders the series; deterministic for identical input.
pub fn render_svg(series: &[Series], title: &str, x_label: &str, y_label: &str) -> String {
  let (w, h) = (640.0, 420.0);
  let (left, right, top, bottom) = (70.0, 170.0, 40.0, 60.0);
  let pts = series.iter().flat_map(|s| s.points.iter());
  let (mut x0, mut x1, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, 0.0f64);
  for &(x, y, ci) in pts {
    x0 = x0.min(x);
    x1 = x1.max(x);
    y1 = y1.max(y + ci.unwrap_or(0.0));
  }
  if !x0.is_finite() {
    (x0, x1) = (0.0, 1.0);
  }
  if x1 <= x0 {
    x1 = x0 + 1.0;
  }
  if y1 <= 0.0 {
    y1 = 1.0;
  }
  let (pw, ph) = (w - left - right, h - top - bottom);
  let sx = |x: f64| left + (x - x0) / (x1 - x0) * pw;
  let sy = |y: f64| top + ph - y / y1 * ph;

  let mut svg = String::new();
  let _ = writeln!(svg, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="sans-serif" font-size="12">"#);
  let _ = writeln!(svg, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
  let _ = writeln!(svg, r#"<text x="{:.1}" y="22" text-anchor="middle" font-size="14">{}</text>"#, left + pw / 2.0, escape(title));
  let _ = writeln!(svg, r#"<path d="M{left} {top} V{:.1} H{:.1}" fill="none" stroke="black"/>"#, top + ph, left + pw);
  for i in 0..=4 {
    let f = f64::from(i) / 4.0;
    let (xv, yv) = (x0 + f * (x1 - x0), f * y1);
    let _ = writeln!(svg, r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{}</text>"#, sx(xv), top + ph + 18.0, tick(xv));
    let _ = writeln!(svg, r#"<text x="{:.1}" y="{:.1}" text-anchor="end">{}</text>"#, left - 6.0, sy(yv) + 4.0, tick(yv));
    let _ = writeln!(svg, r##"<path d="M{left} {:.1} H{:.1}" stroke="#dddddd"/>"##, sy(yv), left + pw);
  }
  let _ = writeln!(svg, r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{}</text>"#, left + pw / 2.0, h - 18.0, escape(x_label));
  let _ = writeln!(
    svg,
    r#"<text x="18" y="{:.1}" text-anchor="middle" transform="rotate(-90 18 {:.1})">{}</text>"#,
    top + ph / 2.0,
    top + ph / 2.0,
    escape(y_label)
  );
  for (i, s) in series.iter().enumerate() {
    let color = COLORS[i % COLORS.len()];
    let path: Vec<String> = s.points.iter().map(|&(x, y, _)| format!("{:.1},{:.1}", sx(x), sy(y))).collect();
    let _ = writeln!(svg, r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#, path.join(" "));
    for &(x, y, ci) in &s.points {
      if let Some(ci) = ci {
        let _ = writeln!(svg, r#"<path d="M{:.1} {:.1} V{:.1}" stroke="{color}"/>"#, sx(x), sy(y - ci), sy(y + ci));
      }
      let _ = writeln!(svg, r#"<circle cx="{:.1}" cy="{:.1}" r="3" fill="{color}"/>"#, sx(x), sy(y));
    }
    let ly = top + 10.0 + 18.0 * i as f64;
    let _ = writeln!(svg, r#"<path d="M{:.1} {ly:.1} h20" stroke="{color}" stroke-width="2"/>"#, w - right + 15.0);
    let _ = writeln!(svg, r#"<text x="{:.1}" y="{:.1}">{}</text>"#, w - right + 40.0, ly + 4.0, escape(&s.label));
  }
  svg.push_str("</svg>\n");
  svg
}

fn tick(v: f64) -> String {
  if v == v.round() && v.abs() < 1e6 {
    format!("{v:.0}")
  } else {
    format!("{v:.3}")
  }
}

fn escape(s: &str) -> String { s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;") }
