//! The operations behind each subcommand, independent of argument parsing.

use std::time::{Duration, Instant};

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generate::random_graph;
use super::CliError;
use crate::bigraph::BipartiteGraph;
use crate::c4free::{GadgetKind, GadgetSpec};
use crate::extremal::{
    self, check_obstruction, obstruction_for, threshold, Blocks, ConstructionCase,
    ConstructionParams, Obstruction,
};
use crate::solver::{has_factor, verify_factor, Factor, SearchBudget, SearchOutcome};
use crate::tiler::{tile, Route, TileVerdict, TilerConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructKind {
    Even,
    OddMid,
    OddSucc,
    #[value(name = "P", alias = "p")]
    #[serde(rename = "P")]
    P,
    #[value(name = "Q", alias = "q")]
    #[serde(rename = "Q")]
    Q,
    #[value(name = "R", alias = "r")]
    #[serde(rename = "R")]
    R,
}

impl ConstructKind {
    fn case(self) -> Option<ConstructionCase> {
        match self {
            ConstructKind::Even => Some(ConstructionCase::Even),
            ConstructKind::OddMid => Some(ConstructionCase::OddMid),
            ConstructKind::OddSucc => Some(ConstructionCase::OddSucc),
            _ => None,
        }
    }
}

/// Block labels written next to a constructed graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sidecar {
    pub kind: ConstructKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<ConstructionParams>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gadget: Option<GadgetSpec>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub blocks: Option<Blocks>,
    pub claimed_min_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub obstruction: Option<Obstruction>,
}

#[derive(Debug, Clone, Default)]
pub struct ConstructArgs {
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub p: Option<usize>,
    pub q: Option<usize>,
}

fn need(v: Option<usize>, flag: &str, kind: ConstructKind) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("construct {kind:?} needs --{flag}")))
}

pub fn cmd_construct(
    kind: ConstructKind,
    args: &ConstructArgs,
) -> Result<(BipartiteGraph, Sidecar), CliError> {
    if let Some(case) = kind.case() {
        let (s, t, k) = (
            need(args.s, "s", kind)?,
            need(args.t, "t", kind)?,
            need(args.k, "k", kind)?,
        );
        let params =
            ConstructionParams::new(s, t, k).map_err(|e| CliError::Input(e.to_string()))?;
        let built = match case {
            ConstructionCase::Even => extremal::build_even(params),
            ConstructionCase::OddMid => extremal::build_odd_mid(params),
            ConstructionCase::OddSucc => extremal::build_odd_succ(params),
        }
        .map_err(|e| CliError::Input(format!("construct {s} {t} {k}: {e}")))?;
        let sidecar = Sidecar {
            kind,
            params: Some(params),
            gadget: None,
            blocks: Some(built.blocks.clone()),
            claimed_min_degree: built.claimed_min_degree,
            obstruction: Some(obstruction_for(&built)),
        };
        return Ok((built.graph, sidecar));
    }
    let (gk, deg) = match kind {
        ConstructKind::P => (GadgetKind::P, need(args.p, "p", kind)?),
        ConstructKind::Q => (GadgetKind::Q, need(args.q, "q", kind)?),
        _ => (GadgetKind::R, need(args.q, "q", kind)?),
    };
    let spec = GadgetSpec {
        kind: gk,
        m: need(args.m, "m", kind)?,
        deg,
    };
    let g = spec.build().map_err(|e| CliError::Input(e.to_string()))?;
    let sidecar = Sidecar {
        kind,
        params: None,
        gadget: Some(spec),
        blocks: None,
        claimed_min_degree: g.min_degree().unwrap_or(0),
        obstruction: None,
    };
    Ok((g, sidecar))
}

/// Result of one decision command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub instance: String,
    pub s: usize,
    pub t: usize,
    pub k: Option<usize>,
    pub verdict: String,
    pub min_degree: usize,
    pub threshold: Option<usize>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub route: Option<Route>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub case: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub certificate: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub factor: Option<Factor>,
}

impl RunReport {
    fn new(command: &str, instance: &str, g: &BipartiteGraph, s: usize, t: usize) -> Self {
        let k =
            (g.is_balanced() && g.n_a().is_multiple_of(s + t) && g.n_a() > 0).then(|| g.n_a() / (s + t));
        RunReport {
            command: command.into(),
            instance: instance.into(),
            s,
            t,
            k,
            verdict: String::new(),
            min_degree: g.min_degree().unwrap_or(0),
            threshold: k.map(|k| threshold(s, t, k)),
            elapsed_ms: 0,
            route: None,
            case: None,
            note: None,
            certificate: None,
            factor: None,
        }
    }

    /// The embedded factor, if any, is a factor of `g`.
    pub fn is_consistent_with(&self, g: &BipartiteGraph) -> bool {
        match (&self.factor, self.verdict.as_str()) {
            (Some(f), "Found") => verify_factor(g, self.s, self.t, f),
            (None, "Found") => false,
            (Some(_), _) => false,
            _ => true,
        }
    }
}

fn check_shape(s: usize, t: usize) -> Result<(), CliError> {
    if s == 0 || t < s {
        return Err(CliError::Usage(format!(
            "need 1 <= s <= t, got --s {s} --t {t}"
        )));
    }
    Ok(())
}

pub fn budget(nodes: Option<u64>, secs: Option<f64>) -> SearchBudget {
    SearchBudget {
        node_limit: nodes,
        time_limit: secs.map(Duration::from_secs_f64),
    }
}

pub fn cmd_check(
    g: &BipartiteGraph,
    instance: &str,
    s: usize,
    t: usize,
    budget: SearchBudget,
) -> Result<RunReport, CliError> {
    check_shape(s, t)?;
    let mut r = RunReport::new("check", instance, g, s, t);
    let start = Instant::now();
    let out = has_factor(g, s, t, budget);
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    r.verdict = out.label().into();
    if let SearchOutcome::Found(f) = out {
        r.factor = Some(f);
    }
    Ok(r)
}

pub fn cmd_tile(
    g: &BipartiteGraph,
    instance: &str,
    s: usize,
    t: usize,
    cfg: &TilerConfig,
) -> Result<RunReport, CliError> {
    check_shape(s, t)?;
    let mut r = RunReport::new("tile", instance, g, s, t);
    let start = Instant::now();
    let out = tile(g, s, t, cfg).map_err(|e| CliError::Input(e.to_string()))?;
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    r.verdict = out.verdict.label().into();
    r.route = Some(out.route);
    r.case = out.case;
    r.note = out.note;
    if let TileVerdict::Found(f) = out.verdict {
        r.factor = Some(f);
    }
    Ok(r)
}

/// Verdict `Certified` iff the sidecar describes a construction of the
/// requested case and parameters and its certificate checks against `g`.
pub fn cmd_certify(
    g: &BipartiteGraph,
    instance: &str,
    sidecar: &Sidecar,
    kind: ConstructKind,
    s: usize,
    t: usize,
    k: usize,
) -> Result<RunReport, CliError> {
    check_shape(s, t)?;
    let mut r = RunReport::new("certify", instance, g, s, t);
    let start = Instant::now();
    let matches = sidecar.kind == kind
        && sidecar.params.is_some_and(|p| (p.s, p.t, p.k) == (s, t, k))
        && kind.case().is_some();
    let ok = matches
        && sidecar
            .obstruction
            .as_ref()
            .is_some_and(|o| check_obstruction(g, o, s, t));
    r.elapsed_ms = start.elapsed().as_millis() as u64;
    r.certificate = Some(ok);
    r.verdict = if ok { "Certified" } else { "NotCertified" }.into();
    if !matches {
        r.note = Some("sidecar does not describe the requested case and parameters".into());
    }
    Ok(r)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Stats {
    pub n_a: usize,
    pub n_b: usize,
    pub edges: usize,
    pub min_degree: Option<usize>,
    pub max_degree: usize,
    pub density: f64,
    pub balanced: bool,
    pub k22_free: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub threshold: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub meets_threshold: Option<bool>,
}

pub fn cmd_stats(g: &BipartiteGraph, shape: Option<(usize, usize)>) -> Stats {
    let cells = (g.n_a() * g.n_b()).max(1);
    let min_degree = g.min_degree().ok();
    let thr = shape.and_then(|(s, t)| {
        (s >= 1 && t >= s && g.is_balanced() && g.n_a() > 0 && g.n_a().is_multiple_of(s + t))
            .then(|| threshold(s, t, g.n_a() / (s + t)))
    });
    Stats {
        n_a: g.n_a(),
        n_b: g.n_b(),
        edges: g.edge_count(),
        min_degree,
        max_degree: g.max_degree(),
        density: g.edge_count() as f64 / cells as f64,
        balanced: g.is_balanced(),
        k22_free: g.is_k22_free(),
        threshold: thr,
        meets_threshold: thr.map(|x| min_degree.unwrap_or(0) >= x),
    }
}

#[derive(Debug, Clone)]
pub struct SweepArgs {
    pub s: usize,
    pub t: usize,
    pub ks: Vec<usize>,
    pub trials: usize,
    pub seed: u64,
    pub density: f64,
    pub budget: SearchBudget,
    pub tiler: TilerConfig,
    /// Fill the `elapsed_ms` column; off by default so output is reproducible.
    pub timing: bool,
}

pub const SWEEP_HEADER: &str = "s,t,k,instance_kind,seed,min_degree,threshold,verdict,elapsed_ms";

#[derive(Debug, Clone, PartialEq, Eq)]
enum Row {
    Construction(usize),
    Random { k: usize, seed: u64 },
}

/// For each `k`, the lower-bound construction (expected `NoFactor`) and
/// `trials` random graphs at the threshold (expected `Found`), as CSV.
pub fn cmd_sweep(a: &SweepArgs) -> Result<String, CliError> {
    check_shape(a.s, a.t)?;
    if !(0.0..=1.0).contains(&a.density) {
        return Err(CliError::Usage(format!(
            "density must lie in [0, 1], got {}",
            a.density
        )));
    }
    if a.ks.contains(&0) {
        return Err(CliError::Usage("k must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let mut rows = Vec::new();
    for &k in &a.ks {
        rows.push(Row::Construction(k));
        for _ in 0..a.trials {
            rows.push(Row::Random {
                k,
                seed: rng.next_u64(),
            });
        }
    }
    let lines: Vec<Result<String, CliError>> =
        rows.par_iter().map(|row| sweep_row(a, row)).collect();
    let mut out = String::from(SWEEP_HEADER);
    out.push('\n');
    for l in lines {
        out.push_str(&l?);
        out.push('\n');
    }
    Ok(out)
}

fn sweep_row(a: &SweepArgs, row: &Row) -> Result<String, CliError> {
    let (s, t) = (a.s, a.t);
    let start = Instant::now();
    let (k, kind, seed, min_degree, verdict) = match *row {
        Row::Construction(k) => {
            let built = ConstructionParams::new(s, t, k).and_then(extremal::build);
            match built {
                Ok(c) => {
                    let v = has_factor(&c.graph, s, t, a.budget).label();
                    let kind = serde_json::to_value(c.case)
                        .ok()
                        .and_then(|v| v.as_str().map(str::to_string))
                        .unwrap_or_default();
                    (
                        k,
                        kind,
                        String::new(),
                        c.claimed_min_degree.to_string(),
                        v.to_string(),
                    )
                }
                Err(_) => (
                    k,
                    "construction".into(),
                    String::new(),
                    String::new(),
                    "Unavailable".into(),
                ),
            }
        }
        Row::Random { k, seed } => {
            let n = k * (s + t);
            let g = random_graph(n, a.density, threshold(s, t, k), seed)
                .map_err(|e| CliError::Internal(e.to_string()))?;
            let out = tile(&g, s, t, &a.tiler).map_err(|e| CliError::Internal(e.to_string()))?;
            let md = g
                .min_degree()
                .map_err(|e| CliError::Internal(e.to_string()))?;
            (
                k,
                "random".into(),
                seed.to_string(),
                md.to_string(),
                out.verdict.label().to_string(),
            )
        }
    };
    let elapsed = if a.timing {
        start.elapsed().as_millis().to_string()
    } else {
        String::new()
    };
    Ok(format!(
        "{s},{t},{k},{kind},{seed},{min_degree},{},{verdict},{elapsed}",
        threshold(s, t, k)
    ))
}
