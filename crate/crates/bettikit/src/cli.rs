//! Command-line definition and dispatch.

use std::path::{Path, PathBuf};
use std::time::Instant;

use bettikit_core::boundary::BoundaryMatrix;
use bettikit_core::complex::SimplicialComplex;
use bettikit_core::experiments::{SweepOutput, SweepSpec};
use bettikit_core::gadgets::{self, build_reduction_graph, count_sat_via_euler, maximal_cliques_in_a};
use bettikit_core::graph::{random_graph, Graph, RandomModel};
use bettikit_core::homology::{betti_numbers, euler_characteristic, HomologyResult};
use bettikit_core::lgz::{cost_report, CostOverrides, LgzRunConfig, LgzSampler, Rescale};
use bettikit_core::spectral::{self, SpectralSummary};
use bettikit_core::{cnf, Budgets};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::envelope::Envelope;
use crate::error::{CliError, CliResult};
use crate::plot::{self, XAxis};
use crate::{io, parallel};

#[derive(Parser, Debug)]
#[command(name = "bettikit", version, about = "Clique complexes, exact Betti numbers, #SAT gadgets and LGZ cost models")]
pub struct Cli {
  #[command(flatten)]
  pub global:  GlobalArgs,
  #[command(subcommand)]
  pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
  /// Worker threads for parallel sweeps and sampling (default: all cores).
  #[arg(long, global = true)]
  pub threads:         Option<usize>,
  /// Add wall-clock time to the output (makes artifacts differ between runs).
  #[arg(long, global = true)]
  pub timing:          bool,
  /// Highest simplex dimension enumerated.
  #[arg(long, global = true, default_value_t = 16)]
  pub max_dim:         usize,
  /// Maximum number of stored simplices.
  #[arg(long, global = true, default_value_t = 2_000_000)]
  pub max_simplices:   usize,
  /// Maximum number of cliques visited by streaming counts.
  #[arg(long, global = true, default_value_t = 1_000_000_000)]
  pub max_enumerated:  u64,
  /// Largest matrix given to the dense eigensolver.
  #[arg(long, global = true, default_value_t = 4096)]
  pub eigensolver_cap: usize,
  /// Write the artifact to this file instead of standard output.
  #[arg(short, long, global = true)]
  pub output:          Option<PathBuf>,
}

impl GlobalArgs {
  pub fn budgets(&self) -> Budgets {
    Budgets {
      max_dim:         self.max_dim,
      max_simplices:   self.max_simplices,
      max_enumerated:  self.max_enumerated,
      eigensolver_cap: self.eigensolver_cap,
    }
  }
}

#[derive(Subcommand, Debug)]
pub enum Command {
  /// Build complexes.
  #[command(subcommand)]
  Complex(ComplexCmd),
  /// Betti numbers and boundary matrices.
  #[command(subcommand)]
  Homology(HomologyCmd),
  /// Euler characteristic from simplex counts.
  Euler(InputArgs),
  /// Spectrum of a Hodge Laplacian.
  Spectrum(SpectrumArgs),
  /// Model counting through the Euler characteristic.
  #[command(subcommand)]
  Sat(SatCmd),
  /// Homology-transferring reductions.
  #[command(subcommand)]
  Reduce(ReduceCmd),
  /// LGZ estimator simulation and cost formulas.
  #[command(subcommand)]
  Lgz(LgzCmd),
  /// Random graphs and parameter sweeps.
  #[command(subcommand)]
  Random(RandomCmd),
  /// The k-skeleton of the n-simplex.
  Skeleton(SkeletonArgs),
  /// SVG chart of a sweep summary.
  Plot(PlotArgs),
}

#[derive(Subcommand, Debug)]
pub enum ComplexCmd {
  /// Build a complex and write it as JSON.
  Build(InputArgs),
}

#[derive(Subcommand, Debug)]
pub enum HomologyCmd {
  /// Betti numbers from exact boundary ranks.
  Betti(BettiArgs),
  /// Export the boundary matrix ∂_k as sparse triplets.
  Boundary(BoundaryArgs),
}

#[derive(Subcommand, Debug)]
pub enum SatCmd {
  /// Count satisfying assignments of a DIMACS formula.
  Count(SatArgs),
}

#[derive(Subcommand, Debug)]
pub enum ReduceCmd {
  /// Check the homology transfer from a co-chordal graph to its co-bipartite complement.
  Cochordal(CochordalArgs),
}

#[derive(Subcommand, Debug)]
pub enum LgzCmd {
  /// Estimate c_k = β_k/|S_k| from sampled eigenvalues.
  Simulate(LgzSimulateArgs),
  /// Evaluate the runtime formulas.
  Cost(LgzCostArgs),
}

#[derive(Subcommand, Debug)]
pub enum RandomCmd {
  /// Run a sweep described by a TOML or JSON spec.
  Sweep(SweepArgs),
  /// Draw one random graph.
  Graph(RandomGraphArgs),
}

/// Where a complex comes from; exactly one source.
#[derive(Args, Debug, Clone, Serialize)]
pub struct InputArgs {
  /// Complex JSON written by `complex build` or `skeleton`.
  #[arg(long)]
  pub complex:  Option<PathBuf>,
  /// Edge list (`n <count>` then `u v` lines); the clique complex is used.
  #[arg(long)]
  pub edges:    Option<PathBuf>,
  /// Point CSV; needs --eps.
  #[arg(long)]
  pub points:   Option<PathBuf>,
  /// Distance scale: points closer than this are joined.
  #[arg(long)]
  pub eps:      Option<f64>,
  /// Face list, one face per line.
  #[arg(long)]
  pub faces:    Option<PathBuf>,
  /// With --faces: keep simplices up to this dimension.
  #[arg(long)]
  pub face_dim: Option<usize>,
}

impl InputArgs {
  fn check(&self) -> CliResult<()> {
    let sources = [self.complex.is_some(), self.edges.is_some(), self.points.is_some(), self.faces.is_some()];
    if sources.iter().filter(|&&b| b).count() != 1 {
      return Err(CliError::Usage("give exactly one of --complex, --edges, --points, --faces".into()));
    }
    if self.points.is_some() != self.eps.is_some() {
      return Err(CliError::Usage("--points needs a distance scale (--eps; --point-eps under lgz) and vice versa".into()));
    }
    Ok(())
  }

  /// The graph behind a graph-like source.
  pub fn graph(&self) -> CliResult<Option<Graph>> {
    self.check()?;
    if let Some(p) = &self.edges {
      return Ok(Some(io::read_edges(p)?));
    }
    if let (Some(p), Some(eps)) = (&self.points, self.eps) {
      return Ok(Some(io::read_points(p)?.epsilon_graph(eps)?));
    }
    Ok(None)
  }

  pub fn load(&self, budgets: &Budgets) -> CliResult<SimplicialComplex> {
    if let Some(g) = self.graph()? {
      return Ok(SimplicialComplex::clique_complex(&g, budgets)?);
    }
    if let Some(p) = &self.complex {
      return io::read_complex(p);
    }
    let path = self.faces.as_ref().expect("checked");
    let system = io::read_faces(path)?;
    Ok(SimplicialComplex::from_set_system(&system, self.face_dim.unwrap_or(usize::MAX), budgets)?)
  }
}

#[derive(Args, Debug, Serialize)]
pub struct BettiArgs {
  #[command(flatten)]
  pub input:    InputArgs,
  /// Also compute Hodge Laplacian spectra of every dimension within the eigensolver cap.
  #[arg(long)]
  pub spectral: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct BoundaryArgs {
  #[command(flatten)]
  pub input: InputArgs,
  #[arg(long)]
  pub k:     usize,
}

#[derive(Args, Debug, Serialize)]
pub struct SpectrumArgs {
  #[command(flatten)]
  pub input:  InputArgs,
  #[arg(long)]
  pub k:      usize,
  /// Also report the global κ of ⊕Δ_k.
  #[arg(long)]
  pub global: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct SatArgs {
  /// DIMACS CNF file.
  pub formula:     PathBuf,
  /// Cross-check against exhaustive enumeration and the maximal-clique count.
  #[arg(long)]
  pub brute_force: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct CochordalArgs {
  #[command(flatten)]
  pub input:      InputArgs,
  /// Also write the edge list of the co-bipartite graph here.
  #[arg(long)]
  pub emit_graph: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RescaleArg {
  Exact,
  Gershgorin,
}

/// Same sources as [`InputArgs`]; `--eps` is taken by the error target here, so the
/// point distance scale is `--point-eps`.
#[derive(Args, Debug, Clone, Serialize)]
pub struct LgzInputArgs {
  #[arg(long)]
  pub complex:   Option<PathBuf>,
  #[arg(long)]
  pub edges:     Option<PathBuf>,
  /// Point CSV; needs --point-eps.
  #[arg(long)]
  pub points:    Option<PathBuf>,
  #[arg(long)]
  pub point_eps: Option<f64>,
  #[arg(long)]
  pub faces:     Option<PathBuf>,
  #[arg(long)]
  pub face_dim:  Option<usize>,
}

impl From<&LgzInputArgs> for InputArgs {
  fn from(a: &LgzInputArgs) -> Self {
    InputArgs {
      complex:  a.complex.clone(),
      edges:    a.edges.clone(),
      points:   a.points.clone(),
      eps:      a.point_eps,
      faces:    a.faces.clone(),
      face_dim: a.face_dim,
    }
  }
}

#[derive(Args, Debug, Serialize)]
pub struct LgzSimulateArgs {
  #[command(flatten)]
  pub input:    LgzInputArgs,
  #[arg(long)]
  pub k:        usize,
  #[arg(long, default_value_t = 2000)]
  pub samples:  u64,
  /// Phase-register bits (default ⌈log2 κ⌉ + 1).
  #[arg(long)]
  pub qpe_bits: Option<u32>,
  /// Additive error target for c_k.
  #[arg(long, default_value_t = 0.05)]
  pub eps:      f64,
  /// Multiplicative error target for β_k.
  #[arg(long, default_value_t = 0.1)]
  pub delta:    f64,
  #[arg(long, default_value_t = 0)]
  pub seed:     u64,
  #[arg(long, value_enum, default_value = "exact")]
  pub rescale:  RescaleArg,
}

#[derive(Args, Debug, Serialize)]
pub struct LgzCostArgs {
  #[command(flatten)]
  pub input:          LgzInputArgs,
  #[arg(long)]
  pub k:              usize,
  /// Additive error target for c_k.
  #[arg(long, default_value_t = 0.05)]
  pub eps:            f64,
  #[arg(long, default_value_t = 0.1)]
  pub delta:          f64,
  /// Use this β_k instead of the exact value.
  #[arg(long)]
  pub beta:           Option<u128>,
  /// Use this κ instead of the spectrum of Δ_k.
  #[arg(long)]
  pub kappa:          Option<f64>,
  /// Clique-dense means ζ_k^-1 ≤ n^c for this c.
  #[arg(long, default_value_t = 3.0)]
  pub dense_exponent: f64,
  /// Also write a one-row CSV here.
  #[arg(long)]
  pub csv:            Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct SweepArgs {
  /// Sweep spec (.toml or .json).
  pub spec: PathBuf,
  /// Per-trial CSV (defaults to the spec's `output`); the per-cell summary goes next to it.
  #[arg(long)]
  pub csv:  Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelArg {
  Vr,
  Er,
}

#[derive(Args, Debug, Serialize)]
pub struct RandomGraphArgs {
  #[arg(long, value_enum)]
  pub model:     ModelArg,
  #[arg(long)]
  pub n:         usize,
  /// Edge probability (er).
  #[arg(long)]
  pub p:         Option<f64>,
  /// Ambient dimension (vr).
  #[arg(long)]
  pub d:         Option<usize>,
  /// Distance scale (vr).
  #[arg(long)]
  pub eps:       Option<f64>,
  #[arg(long, default_value_t = 0)]
  pub seed:      u64,
  /// Also write the graph as an edge list here.
  #[arg(long)]
  pub edges_out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
pub struct SkeletonArgs {
  /// Simplex dimension (n + 1 vertices).
  #[arg(long)]
  pub n: usize,
  #[arg(long)]
  pub k: usize,
}

#[derive(Args, Debug, Serialize)]
pub struct PlotArgs {
  /// Sweep JSON written by `random sweep`.
  #[arg(long)]
  pub sweep: PathBuf,
  #[arg(long, value_enum, default_value = "n")]
  pub x:     XAxis,
}

struct Ctx<'a> {
  global:  &'a GlobalArgs,
  budgets: Budgets,
  start:   Instant,
}

impl Ctx<'_> {
  fn json<C: Serialize, R: Serialize>(&self, command: &str, config: &C, seed: Option<u64>, result: R) -> String {
    let mut env = Envelope::new(command, config, self.budgets, seed, result);
    if self.global.timing {
      env.elapsed_seconds = Some(self.start.elapsed().as_secs_f64());
    }
    env.to_json()
  }
}

#[derive(Serialize)]
struct BettiReport {
  #[serde(flatten)]
  homology: HomologyResult,
  reduced:  Vec<i64>,
  #[serde(skip_serializing_if = "Option::is_none")]
  spectra:  Option<Vec<SpectralSummary>>,
}

#[derive(Serialize)]
struct EulerReport {
  chi:            i64,
  simplex_counts: Vec<usize>,
}

#[derive(Serialize)]
struct SpectrumReport {
  #[serde(flatten)]
  spectrum:           SpectralSummary,
  #[serde(skip_serializing_if = "Option::is_none")]
  global_kappa:       Option<f64>,
}

#[derive(Serialize)]
struct SatReport {
  #[serde(flatten)]
  count:         gadgets::SatCount,
  n_vars:        usize,
  n_clauses:     usize,
  #[serde(skip_serializing_if = "Option::is_none")]
  brute_force:   Option<u64>,
  #[serde(skip_serializing_if = "Option::is_none")]
  gamma_cliques: Option<usize>,
}

#[derive(Serialize)]
struct SweepReport<'a> {
  spec:    &'a SweepSpec,
  #[serde(flatten)]
  output:  &'a SweepOutput,
}

/// Runs one command and writes its artifact.
pub fn run(cli: &Cli) -> CliResult<()> {
  if let Some(threads) = cli.global.threads {
    // only the first call in a process takes effect
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
  }
  let ctx = Ctx { global: &cli.global, budgets: cli.global.budgets(), start: Instant::now() };
  let budgets = &ctx.budgets;
  let text = match &cli.command {
    Command::Complex(ComplexCmd::Build(a)) => ctx.json("complex build", a, None, a.load(budgets)?),
    Command::Skeleton(a) => ctx.json("skeleton", a, None, SimplicialComplex::k_skeleton_of_simplex(a.n, a.k, budgets)?),
    Command::Homology(HomologyCmd::Betti(a)) => {
      let c = a.input.load(budgets)?;
      let homology = betti_numbers(&c)?;
      let spectra = if a.spectral {
        let dims = homology.betti.len();
        Some((0..dims).filter(|&k| c.count(k) > 0).map(|k| spectral::spectrum(&c, k, budgets.eigensolver_cap)).collect::<Result<Vec<_>, _>>()?)
      } else {
        None
      };
      ctx.json("homology betti", a, None, BettiReport { reduced: homology.reduced(), homology, spectra })
    },
    Command::Homology(HomologyCmd::Boundary(a)) => {
      let c = a.input.load(budgets)?;
      io::format_triplets(&BoundaryMatrix::from_complex(&c, a.k)?)
    },
    Command::Euler(a) => {
      let c = a.load(budgets)?;
      ctx.json("euler", a, None, EulerReport { chi: euler_characteristic(&c)?, simplex_counts: c.counts() })
    },
    Command::Spectrum(a) => {
      let c = a.input.load(budgets)?;
      let spectrum = spectral::spectrum(&c, a.k, budgets.eigensolver_cap)?;
      let global_kappa = if a.global { spectral::global_spectrum(&c, budgets.eigensolver_cap)?.kappa } else { None };
      ctx.json("spectrum", a, None, SpectrumReport { spectrum, global_kappa })
    },
    Command::Sat(SatCmd::Count(a)) => {
      let f = io::read_dimacs(&a.formula)?;
      let count = count_sat_via_euler(&f, budgets)?;
      let (brute_force, gamma_cliques) = if a.brute_force {
        (Some(cnf::brute_force_count(&f)?), Some(maximal_cliques_in_a(&build_reduction_graph(&f)).len()))
      } else {
        (None, None)
      };
      ctx.json("sat count", a, None, SatReport { count, n_vars: f.n_vars(), n_clauses: f.n_clauses(), brute_force, gamma_cliques })
    },
    Command::Reduce(ReduceCmd::Cochordal(a)) => {
      let g = a.input.graph()?.ok_or_else(|| CliError::Usage("reduce cochordal needs a graph (--edges or --points/--eps)".into()))?;
      let report = gadgets::verify_homology_transfer(&g, budgets)?;
      if let Some(path) = &a.emit_graph {
        io::write_text(path, &io::format_edge_list(&gadgets::alexander_suspension_reduction(&g)?.h_bar))?;
      }
      ctx.json("reduce cochordal", a, None, report)
    },
    Command::Lgz(LgzCmd::Simulate(a)) => {
      let c = InputArgs::from(&a.input).load(budgets)?;
      let config = LgzRunConfig {
        k:            a.k,
        samples:      a.samples,
        qpe_bits:     a.qpe_bits,
        additive_eps: a.eps,
        mult_delta:   a.delta,
        seed:         a.seed,
        rescale:      match a.rescale {
          RescaleArg::Exact => Rescale::Exact,
          RescaleArg::Gershgorin => Rescale::Gershgorin,
        },
        ..Default::default()
      };
      let sampler = LgzSampler::new(&c, &config, budgets.eigensolver_cap)?;
      ctx.json("lgz simulate", a, Some(a.seed), parallel::estimate(&sampler, &config))
    },
    Command::Lgz(LgzCmd::Cost(a)) => {
      let c = InputArgs::from(&a.input).load(budgets)?;
      let config = LgzRunConfig { k: a.k, additive_eps: a.eps, mult_delta: a.delta, clique_dense_exponent: a.dense_exponent, ..Default::default() };
      let report = cost_report(&c, &config, &CostOverrides { beta_k: a.beta, kappa: a.kappa }, budgets.eigensolver_cap)?;
      if let Some(path) = &a.csv {
        io::write_text(path, &format!("{}\n{}\n", bettikit_core::lgz::CostReport::csv_header(), report.csv_row()))?;
      }
      ctx.json("lgz cost", a, None, report)
    },
    Command::Random(RandomCmd::Sweep(a)) => {
      let spec = read_spec(&a.spec)?;
      let out = parallel::run_sweep(&spec, budgets)?;
      if let Some(path) = a.csv.clone().or_else(|| spec.output.as_ref().map(PathBuf::from)) {
        write_sweep_csv(&path, &out)?;
      }
      ctx.json("random sweep", a, Some(spec.seed), SweepReport { spec: &spec, output: &out })
    },
    Command::Random(RandomCmd::Graph(a)) => {
      let model = match a.model {
        ModelArg::Er => RandomModel::ErdosRenyi { n: a.n, p: a.p.ok_or_else(|| CliError::Usage("--model er needs --p".into()))? },
        ModelArg::Vr => RandomModel::VietorisRips {
          n:       a.n,
          d:       a.d.ok_or_else(|| CliError::Usage("--model vr needs --d".into()))?,
          epsilon: a.eps.ok_or_else(|| CliError::Usage("--model vr needs --eps".into()))?,
        },
      };
      let g = random_graph(&model, a.seed)?;
      if let Some(path) = &a.edges_out {
        io::write_text(path, &io::format_edge_list(&g))?;
      }
      ctx.json("random graph", a, Some(a.seed), g)
    },
    Command::Plot(a) => {
      let text = io::read_text(&a.sweep)?;
      let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| CliError::Format { path: a.sweep.clone(), message: e.to_string() })?;
      let summary = value.pointer("/result/summary").cloned().unwrap_or(serde_json::Value::Null);
      let summary: Vec<bettikit_core::experiments::CellSummary> =
        serde_json::from_value(summary).map_err(|e| CliError::Format { path: a.sweep.clone(), message: format!("no sweep summary: {e}") })?;
      let k = summary.first().map_or(0, |c| c.k);
      let x_label = match a.x {
        XAxis::N => "n",
        XAxis::Epsilon => "epsilon",
        XAxis::EpsilonRatio => "epsilon / r_hat",
        XAxis::P => "p",
      };
      plot::render_svg(&plot::series(&summary, a.x), &format!("mean beta_{k} vs {x_label}"), x_label, &format!("mean beta_{k}"))
    },
  };
  emit(cli.global.output.as_deref(), &text)
}

fn emit(path: Option<&Path>, text: &str) -> CliResult<()> {
  match path {
    Some(p) => io::write_text(p, text),
    None => {
      use std::io::Write;
      let mut out = std::io::stdout().lock();
      out.write_all(text.as_bytes()).map_err(|source| CliError::Write { path: PathBuf::from("<stdout>"), source })
    },
  }
}

pub fn read_spec(path: &Path) -> CliResult<SweepSpec> {
  let text = io::read_text(path)?;
  let format_err = |message: String| CliError::Format { path: path.to_path_buf(), message };
  let spec: SweepSpec = if path.extension().is_some_and(|e| e == "json") {
    serde_json::from_str(&text).map_err(|e| format_err(e.to_string()))?
  } else {
    toml::from_str(&text).map_err(|e| format_err(e.to_string()))?
  };
  spec.validate().map_err(|e| CliError::in_file(path, e))?;
  Ok(spec)
}

/// `<stem>.summary.csv` next to the per-trial table.
pub fn summary_path(path: &Path) -> PathBuf {
  let stem = path.file_stem().map_or_else(|| "sweep".into(), |s| s.to_string_lossy().into_owned());
  path.with_file_name(format!("{stem}.summary.csv"))
}

pub fn write_sweep_csv(path: &Path, out: &SweepOutput) -> CliResult<()> {
  let to_err = |e: csv::Error| CliError::Write { path: path.to_path_buf(), source: std::io::Error::other(e) };
  let mut rows = csv::Writer::from_writer(Vec::new());
  for r in &out.rows {
    rows.serialize(r).map_err(to_err)?;
  }
  let mut cells = csv::Writer::from_writer(Vec::new());
  for c in &out.summary {
    cells.serialize(c).map_err(to_err)?;
  }
  let bytes = |w: csv::Writer<Vec<u8>>| String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is utf-8");
  io::write_text(path, &bytes(rows))?;
  io::write_text(&summary_path(path), &bytes(cells))
}
