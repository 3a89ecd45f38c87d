//! Command-line front end: graph generation, forcing/cover estimation,
//! structural statistics, experiment sweeps, and SVG plots.
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O or data error, 3 internal
//! assertion failure (e.g. the harness produced an invalid set).

use clap::{Args, Parser, Subcommand};
use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;
use zforce::experiment::{
    aggregate, fit_summary_scalings, parse_summary_csv, run_experiment, run_experiment_with_workers,
    write_records_csv, write_summary_csv, ExperimentConfig, ExperimentError,
};
use zforce::generators::{
    gen_deactivation, gen_pa, gen_stars, DeactParams, PaParams, Seed, StarArrangement, StarSpec,
};
use zforce::graph::Graph;
use zforce::metrics::{degree_distribution, diameter, estimate_gamma, DiameterMethod};
use zforce::plot::{emit_plot, PlotQuantity};
use zforce::vertex_cover::{exact_vertex_cover, lm_vertex_cover};
use zforce::zero_forcing::{
    exact_zero_forcing, lm_zero_forcing, lm_zero_forcing_traced, ForcingRule, LmMode,
};

#[derive(Parser)]
#[command(
    name = "zforce",
    version,
    about = "Zero forcing and vertex cover estimation on power-law graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum GenModel {
    Pa,
    Deact,
    Stars,
}

impl FromStr for GenModel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pa" => Ok(GenModel::Pa),
            "deact" | "deactivation" => Ok(GenModel::Deact),
            "stars" => Ok(GenModel::Stars),
            other => Err(format!(
                "unknown model {other:?}, expected pa, deact or stars"
            )),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph and write it as an edge list
    Generate {
        /// pa, deact or stars
        #[arg(long)]
        model: GenModel,
        /// Vertex count (pa, deact)
        #[arg(long)]
        n: Option<usize>,
        /// Edges per new vertex (pa, deact)
        #[arg(long)]
        m: Option<usize>,
        /// Initial attractiveness (pa, deact)
        #[arg(long)]
        a: Option<f64>,
        /// Leaf count per hub, e.g. 3,3,4 (stars)
        #[arg(long, value_delimiter = ',')]
        hub_degrees: Option<Vec<usize>>,
        /// isolated or string (stars; default isolated)
        #[arg(long, default_value = "isolated")]
        arrangement: StarArrangement,
        /// Generator seed (pa, deact)
        #[arg(long, default_value_t = 0)]
        seed: Seed,
        /// Output edge-list path
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Estimate the zero forcing number of an edge-list graph
    Zf {
        edgelist: PathBuf,
        /// closure-consistent or strict-literal
        #[arg(long, default_value = "closure-consistent")]
        mode: LmMode,
        /// Also run the exact brute-force solver (small graphs only)
        #[arg(long)]
        exact: bool,
        /// Print the forcing set, one "id rule" line per vertex
        #[arg(long)]
        trace: bool,
    },
    /// Estimate the minimum vertex cover of an edge-list graph
    Vc {
        edgelist: PathBuf,
        /// Also run the exact brute-force solver (small graphs only)
        #[arg(long)]
        exact: bool,
    },
    /// Degree histogram, tail exponent, and diameter of a graph
    Stats {
        edgelist: PathBuf,
        /// Fit the tail exponent over degrees >= this value
        #[arg(long)]
        kmin: Option<usize>,
        /// exact or two-sweep
        #[arg(long, default_value = "two-sweep")]
        diameter: DiameterMethod,
    },
    /// Run a configured sweep, or fit scaling laws to its summary
    Experiment(ExperimentArgs),
    /// Render a summary CSV as an SVG chart
    Plot {
        /// Summary CSV produced by the experiment subcommand
        #[arg(long)]
        csv: PathBuf,
        /// z, v, delta_z or delta_v
        #[arg(long)]
        quantity: PlotQuantity,
        /// Output SVG path
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Args)]
struct ExperimentArgs {
    #[command(subcommand)]
    action: Option<ExperimentAction>,
    /// JSON config file (see README for the schema)
    #[arg(long)]
    config: Option<PathBuf>,
    /// Worker threads (default: all cores)
    #[arg(long)]
    workers: Option<usize>,
    /// Output path for the per-replica CSV; the aggregated summary lands
    /// next to it with a _summary suffix
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ExperimentAction {
    /// Fit the near-gamma-2 scaling laws to an experiment summary
    Fit {
        /// Summary CSV produced by the experiment subcommand
        #[arg(long)]
        csv: PathBuf,
        /// Inclusive gamma window, e.g. 2.0:2.6
        #[arg(long)]
        window: String,
    },
}

enum CliError {
    Usage(String),
    Io(String),
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(1),
            CliError::Io(_) => ExitCode::from(2),
            CliError::Internal(_) => ExitCode::from(3),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Io(m) => write!(f, "io error: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

fn usage<E: fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn io_err<E: fmt::Display>(e: E) -> CliError {
    CliError::Io(e.to_string())
}

impl From<ExperimentError> for CliError {
    fn from(e: ExperimentError) -> Self {
        match e {
            ExperimentError::InvalidResult(m) => CliError::Internal(m),
            ExperimentError::Io(m) => CliError::Io(m.to_string()),
            ExperimentError::Csv { .. } => CliError::Io(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are successes, not usage errors
            if e.use_stderr() {
                eprint!("{e}");
                return ExitCode::from(1);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Generate {
            model,
            n,
            m,
            a,
            hub_degrees,
            arrangement,
            seed,
            output,
        } => cmd_generate(model, n, m, a, hub_degrees, arrangement, seed, &output),
        Command::Zf {
            edgelist,
            mode,
            exact,
            trace,
        } => cmd_zf(&edgelist, mode, exact, trace),
        Command::Vc { edgelist, exact } => cmd_vc(&edgelist, exact),
        Command::Stats {
            edgelist,
            kmin,
            diameter,
        } => cmd_stats(&edgelist, kmin, diameter),
        Command::Experiment(args) => cmd_experiment(args),
        Command::Plot {
            csv,
            quantity,
            output,
        } => cmd_plot(&csv, quantity, &output),
    }
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| io_err(format!("{}: {e}", path.display())))?;
    Graph::from_edge_list(&text).map_err(|e| io_err(format!("{}: {e}", path.display())))
}

#[allow(clippy::too_many_arguments)]
fn cmd_generate(
    model: GenModel,
    n: Option<usize>,
    m: Option<usize>,
    a: Option<f64>,
    hub_degrees: Option<Vec<usize>>,
    arrangement: StarArrangement,
    seed: Seed,
    output: &Path,
) -> Result<(), CliError> {
    let graph = match model {
        GenModel::Pa | GenModel::Deact => {
            let (n, m, a) = match (n, m, a) {
                (Some(n), Some(m), Some(a)) => (n, m, a),
                _ => return Err(usage("pa and deact need --n, --m and --a")),
            };
            if model == GenModel::Pa {
                gen_pa(&PaParams { n, m, a }, seed).map_err(usage)?
            } else {
                gen_deactivation(&DeactParams { n, m, a }, seed).map_err(usage)?
            }
        }
        GenModel::Stars => {
            let hub_degrees =
                hub_degrees.ok_or_else(|| usage("stars needs --hub-degrees, e.g. 3,3,4"))?;
            gen_stars(&StarSpec {
                hub_degrees,
                arrangement,
            })
            .map_err(usage)?
        }
    };
    std::fs::write(output, graph.to_edge_list())
        .map_err(|e| io_err(format!("{}: {e}", output.display())))?;
    println!(
        "wrote {} vertices, {} edges to {}",
        graph.n_alive(),
        graph.edge_count(),
        output.display()
    );
    Ok(())
}

fn cmd_zf(edgelist: &Path, mode: LmMode, exact: bool, trace: bool) -> Result<(), CliError> {
    let g = load_graph(edgelist)?;
    let result = if trace {
        lm_zero_forcing_traced(&g, mode)
    } else {
        lm_zero_forcing(&g, mode)
    };
    let mut line = format!(
        "Z_LM={} delta_Z={} N={}",
        result.z_lm,
        result.delta_z,
        g.n_alive()
    );
    if exact {
        let (z, _) = exact_zero_forcing(&g).map_err(usage)?;
        line.push_str(&format!(" Z_EXACT={z}"));
    }
    println!("{line}");
    if let Some(events) = result.rule_trace {
        for (rule, v) in events {
            let tag = match rule {
                ForcingRule::ChainEnd => "chain-end",
                ForcingRule::SiblingLeaf => "sibling-leaf",
                ForcingRule::StallBreak => "stall-break",
                ForcingRule::MaxDegree => "max-degree",
                ForcingRule::IsolatedWhite => "isolated",
            };
            println!("{v} {tag}");
        }
    }
    Ok(())
}

fn cmd_vc(edgelist: &Path, exact: bool) -> Result<(), CliError> {
    let g = load_graph(edgelist)?;
    let result = lm_vertex_cover(&g);
    let mut line = format!(
        "V_LM={} delta_V={} N={}",
        result.v_lm,
        result.delta_v,
        g.n_alive()
    );
    if exact {
        let (v, _) = exact_vertex_cover(&g).map_err(usage)?;
        line.push_str(&format!(" V_EXACT={v}"));
    }
    println!("{line}");
    Ok(())
}

fn cmd_stats(
    edgelist: &Path,
    kmin: Option<usize>,
    method: DiameterMethod,
) -> Result<(), CliError> {
    let g = load_graph(edgelist)?;
    let stats = degree_distribution(&g).map_err(usage)?;
    println!("degree,count");
    for (degree, count) in &stats.histogram {
        println!("{degree},{count}");
    }
    if let Some(kmin) = kmin {
        match estimate_gamma(&stats, kmin) {
            Ok(est) => println!(
                "gamma={:.4} stderr={:.4} n_tail={}",
                est.gamma, est.stderr, est.n_tail
            ),
            Err(e) => println!("gamma=NA reason=\"{e}\""),
        }
    }
    let d = diameter(&g, method).map_err(usage)?;
    println!(
        "diameter={} method={} components={}",
        d.diameter, d.method, d.component_count
    );
    Ok(())
}

fn cmd_experiment(args: ExperimentArgs) -> Result<(), CliError> {
    if let Some(ExperimentAction::Fit { csv, window }) = args.action {
        return cmd_experiment_fit(&csv, &window);
    }
    let config_path = args
        .config
        .ok_or_else(|| usage("experiment needs --config <json>"))?;
    let output = args
        .output
        .ok_or_else(|| usage("experiment needs --output <csv>"))?;
    let text = std::fs::read_to_string(&config_path)
        .map_err(|e| io_err(format!("{}: {e}", config_path.display())))?;
    let cfg: ExperimentConfig = serde_json::from_str(&text)
        .map_err(|e| usage(format!("{}: {e}", config_path.display())))?;
    let records = match args.workers {
        Some(w) => run_experiment_with_workers(&cfg, w)?,
        None => run_experiment(&cfg)?,
    };
    write_records_csv(&records, &output)?;
    let summary_path = summary_path_for(&output);
    let rows = aggregate(&records)?;
    write_summary_csv(&rows, &summary_path)?;
    println!(
        "wrote {} records to {} and {} summary rows to {}",
        records.len(),
        output.display(),
        rows.len(),
        summary_path.display()
    );
    Ok(())
}

/// `results.csv` -> `results_summary.csv`
fn summary_path_for(records_path: &Path) -> PathBuf {
    let stem = records_path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "results".into());
    let name = match records_path.extension() {
        Some(ext) => format!("{stem}_summary.{}", ext.to_string_lossy()),
        None => format!("{stem}_summary"),
    };
    records_path.with_file_name(name)
}

fn cmd_experiment_fit(csv: &Path, window: &str) -> Result<(), CliError> {
    let (lo, hi) = window
        .split_once(':')
        .and_then(|(lo, hi)| Some((lo.parse::<f64>().ok()?, hi.parse::<f64>().ok()?)))
        .ok_or_else(|| usage(format!("bad window {window:?}, expected LO:HI")))?;
    if lo >= hi {
        return Err(usage(format!("empty window {lo}:{hi}")));
    }
    let text =
        std::fs::read_to_string(csv).map_err(|e| io_err(format!("{}: {e}", csv.display())))?;
    let rows = parse_summary_csv(&text)?;
    let (fit_z, fit_v) = fit_summary_scalings(&rows, (lo, hi))?;
    println!(
        "one_minus_z: slope={:.6} intercept={:.6} r_squared={:.6}",
        fit_z.slope, fit_z.intercept, fit_z.r_squared
    );
    println!(
        "v: slope={:.6} intercept={:.6} r_squared={:.6}",
        fit_v.slope, fit_v.intercept, fit_v.r_squared
    );
    Ok(())
}

fn cmd_plot(csv: &Path, quantity: PlotQuantity, output: &Path) -> Result<(), CliError> {
    let text =
        std::fs::read_to_string(csv).map_err(|e| io_err(format!("{}: {e}", csv.display())))?;
    let rows = parse_summary_csv(&text)?;
    emit_plot(&rows, quantity, output).map_err(|e| match e {
        zforce::plot::PlotError::Io(m) => io_err(m),
        other => usage(other),
    })?;
    println!("wrote {}", output.display());
    Ok(())
}
