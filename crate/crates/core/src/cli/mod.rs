//! The `bitile` command line: argument parsing, file handling, exit codes.
//!
//! Exit code 0 means a verdict was computed (including `NoFactor`), 1 a
//! usage or input error, 2 an internal invariant violation.

pub mod commands;
pub mod format;
pub mod generate;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub use commands::{
    cmd_certify, cmd_check, cmd_construct, cmd_stats, cmd_sweep, cmd_tile, ConstructArgs,
    ConstructKind, RunReport, Sidecar, Stats, SweepArgs, SWEEP_HEADER,
};
pub use format::{parse_graph, write_graph, Format, GraphFile, ParseError};
pub use generate::{random_graph, ExtremalInstance, GenerateError, Planted};

use crate::bigraph::BipartiteGraph;
use crate::solver::{verify_factor, Factor};
use crate::tiler::TilerConfig;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Input(_) => 1,
            CliError::Internal(_) => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "bitile",
    version,
    about = "K_{s,t}-factors in balanced bipartite graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct Shape {
    #[arg(long)]
    pub s: usize,
    #[arg(long)]
    pub t: usize,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct BudgetArgs {
    /// Node limit for the exact search.
    #[arg(long)]
    pub budget_nodes: Option<u64>,
    /// Wall-clock limit for the exact search, in seconds.
    #[arg(long)]
    pub budget_secs: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a lower-bound construction or a C4-free gadget.
    Construct {
        #[arg(value_enum)]
        case: ConstructKind,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Graph output; block labels go to `<out>.blocks.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact factor search.
    Check {
        graph: PathBuf,
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the factor here when one is found.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Constructive tiling with exact fallback on small graphs.
    Tile {
        graph: PathBuf,
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = 0.01)]
        alpha: f64,
        /// Largest class size for the exact fallback.
        #[arg(long, default_value_t = 40)]
        fallback_cap: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the no-factor certificate of a constructed graph.
    Certify {
        graph: PathBuf,
        #[arg(long, value_enum)]
        case: ConstructKind,
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        k: usize,
        /// Defaults to `<graph>.blocks.json`.
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Constructions and random threshold graphs for a range of k, as CSV.
    Sweep {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0.01)]
        alpha: f64,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Record wall-clock times (makes output run-dependent).
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random balanced graph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        min_degree: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degree and density statistics.
    Stats {
        graph: PathBuf,
        #[arg(long, requires = "t")]
        s: Option<usize>,
        #[arg(long, requires = "s")]
        t: Option<usize>,
    },
}

/// Parses `args` (program name first), runs, and returns the exit code with
/// everything meant for stdout.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match execute(cli.command) {
        Ok(out) => (0, out),
        Err(e) => {
            eprintln!("bitile: {e}");
            (e.exit_code(), String::new())
        }
    }
}

fn read_graph(path: &Path) -> Result<BipartiteGraph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn sidecar_path(graph: &Path) -> PathBuf {
    let mut s = graph.as_os_str().to_owned();
    s.push(".blocks.json");
    PathBuf::from(s)
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

/// Writes the factor, reads it back and re-verifies it against `g`.
fn emit_factor(g: &BipartiteGraph, r: &RunReport, out: Option<&Path>) -> Result<(), CliError> {
    if !r.is_consistent_with(g) {
        return Err(CliError::Internal(
            "report verdict and factor disagree".into(),
        ));
    }
    let (Some(path), Some(f)) = (out, &r.factor) else {
        return Ok(());
    };
    write_file(path, &json(f))?;
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(e.to_string()))?;
    let back: Factor =
        serde_json::from_str(&text).map_err(|e| CliError::Internal(e.to_string()))?;
    if !verify_factor(g, r.s, r.t, &back) {
        return Err(CliError::Internal(
            "factor failed verification after reload".into(),
        ));
    }
    Ok(())
}

pub fn execute(cmd: Command) -> Result<String, CliError> {
    match cmd {
        Command::Construct {
            case,
            s,
            t,
            k,
            m,
            p,
            q,
            format,
            out,
        } => {
            let (g, sidecar) = cmd_construct(case, &ConstructArgs { s, t, k, m, p, q })?;
            let text = write_graph(&g, format);
            match out {
                None => Ok(text),
                Some(path) => {
                    write_file(&path, &text)?;
                    write_file(&sidecar_path(&path), &json(&sidecar))?;
                    Ok(json(&serde_json::json!({
                        "graph": path.display().to_string(),
                        "n_a": g.n_a(),
                        "n_b": g.n_b(),
                        "edges": g.edge_count(),
                        "min_degree": g.min_degree().unwrap_or(0),
                        "claimed_min_degree": sidecar.claimed_min_degree,
                    })))
                }
            }
        }
        Command::Check {
            graph,
            shape,
            budget,
            out,
        } => {
            let g = read_graph(&graph)?;
            let r = cmd_check(
                &g,
                &graph.display().to_string(),
                shape.s,
                shape.t,
                commands::budget(budget.budget_nodes, budget.budget_secs),
            )?;
            emit_factor(&g, &r, out.as_deref())?;
            Ok(json(&r))
        }
        Command::Tile {
            graph,
            shape,
            alpha,
            fallback_cap,
            budget,
            out,
        } => {
            let g = read_graph(&graph)?;
            let mut cfg = TilerConfig {
                alpha,
                fallback_n_cap: fallback_cap,
                ..TilerConfig::default()
            };
            if budget.budget_nodes.is_some() || budget.budget_secs.is_some() {
                cfg.fallback_budget = commands::budget(budget.budget_nodes, budget.budget_secs);
            }
            let r = cmd_tile(&g, &graph.display().to_string(), shape.s, shape.t, &cfg)?;
            emit_factor(&g, &r, out.as_deref())?;
            Ok(json(&r))
        }
        Command::Certify {
            graph,
            case,
            shape,
            k,
            labels,
        } => {
            let g = read_graph(&graph)?;
            let lp = labels.unwrap_or_else(|| sidecar_path(&graph));
            let text = fs::read_to_string(&lp)
                .map_err(|e| CliError::Input(format!("missing sidecar {}: {e}", lp.display())))?;
            let sidecar: Sidecar = serde_json::from_str(&text)
                .map_err(|e| CliError::Input(format!("{}: {e}", lp.display())))?;
            let r = cmd_certify(
                &g,
                &graph.display().to_string(),
                &sidecar,
                case,
                shape.s,
                shape.t,
                k,
            )?;
            Ok(json(&r))
        }
        Command::Sweep {
            shape,
            k,
            trials,
            seed,
            density,
            alpha,
            budget,
            timing,
            out,
        } => {
            let search = if budget.budget_nodes.is_none() && budget.budget_secs.is_none() {
                crate::solver::SearchBudget::nodes(20_000_000)
            } else {
                commands::budget(budget.budget_nodes, budget.budget_secs)
            };
            let args = SweepArgs {
                s: shape.s,
                t: shape.t,
                ks: k,
                trials,
                seed,
                density,
                budget: search,
                tiler: TilerConfig {
                    alpha,
                    ..TilerConfig::default()
                },
                timing,
            };
            let csv = cmd_sweep(&args)?;
            match out {
                None => Ok(csv),
                Some(path) => {
                    write_file(&path, &csv)?;
                    Ok(String::new())
                }
            }
        }
        Command::Random {
            n,
            density,
            min_degree,
            seed,
            format,
            out,
        } => {
            let g = random_graph(n, density, min_degree, seed)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let text = write_graph(&g, format);
            match out {
                None => Ok(text),
                Some(path) => {
                    write_file(&path, &text)?;
                    Ok(String::new())
                }
            }
        }
        Command::Stats { graph, s, t } => {
            let g = read_graph(&graph)?;
            Ok(json(&cmd_stats(&g, s.zip(t))))
        }
    }
}
