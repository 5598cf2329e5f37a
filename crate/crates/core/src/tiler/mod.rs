//! Constructive tiling of graphs close to the extremal structure.
//!
//! A graph at or above the degree threshold that still contains a sparse
//! pair `(A1, B1)` of half-classes looks like two near-complete bipartite
//! graphs crossing each other. [`classify`] recovers that structure,
//! [`tile_even`] and [`tile_odd`] rebalance the two dense pairs by moving
//! star centers and special vertices, and [`tile_dense_pair`] fills each
//! pair greedily. [`tile`] strings this together and falls back to the
//! exact solver on small inputs.

mod cases;
mod classify;
mod pair;
mod stars;

use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cases::{even_case, odd_case, tile_even, tile_odd, tile_with_targets, EvenCase, OddCase};
pub use classify::{classify, label_by_degree, repair_labeling, Cuts, ExtremalLabeling};
pub use pair::tile_dense_pair;
pub use stars::{find_stars, star_bounds, Star, StarBounds};

use crate::bigraph::{BipartiteGraph, GraphError, Side, VertexRef, VertexSet};
use crate::extremal::threshold;
use crate::solver::{has_factor, verify_factor, Factor, SearchBudget, SearchOutcome};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TileError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("star lemma hypotheses fail: {0}")]
    StarHypothesis(String),
    #[error("bug: greedy found {found} of {wanted} guaranteed {h}-stars")]
    StarBug {
        h: usize,
        found: usize,
        wanted: usize,
    },
    #[error("only {found} of {wanted} relocation stars available in {block}")]
    NoStars {
        block: &'static str,
        found: usize,
        wanted: usize,
    },
    #[error("a relocation star from {block} has too few common partners")]
    Extension { block: &'static str },
    #[error("orientation quota: {0}")]
    Quota(String),
    #[error("greedy completion stuck with {remaining} vertices left")]
    Stuck { remaining: usize },
    #[error("internal: {0}")]
    Internal(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TilerConfig {
    pub alpha: f64,
    /// Largest class size handed to the exact solver when the constructive
    /// route fails.
    pub fallback_n_cap: usize,
    pub fallback_budget: SearchBudget,
}

impl Default for TilerConfig {
    fn default() -> Self {
        TilerConfig {
            alpha: 0.01,
            fallback_n_cap: 40,
            fallback_budget: SearchBudget::nodes(50_000_000).with_time(Duration::from_secs(60)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TileVerdict {
    Found(Factor),
    NoFactor,
    Unknown,
}

impl TileVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            TileVerdict::Found(_) => "Found",
            TileVerdict::NoFactor => "NoFactor",
            TileVerdict::Unknown => "Unknown",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Classification and case analysis.
    Extremal,
    /// Exact search.
    Fallback,
    /// Neither applied.
    None,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TileOutcome {
    pub verdict: TileVerdict,
    pub route: Route,
    /// Case of the extremal analysis, when a labeling was found.
    pub case: Option<String>,
    /// Why the extremal route was skipped or failed.
    pub note: Option<String>,
}

/// Finds a `K_{s,t}`-factor or reports that none exists, when either route
/// settles it.
pub fn tile(
    g: &BipartiteGraph,
    s: usize,
    t: usize,
    cfg: &TilerConfig,
) -> Result<TileOutcome, TileError> {
    if !(cfg.alpha > 0.0 && cfg.alpha < 1.0) {
        return Err(TileError::Precondition(format!(
            "alpha must lie in (0, 1), got {}",
            cfg.alpha
        )));
    }
    if s == 0 || t < s {
        return Err(TileError::Precondition(format!(
            "need 1 <= s <= t, got ({s}, {t})"
        )));
    }
    if !g.is_balanced() {
        return Err(TileError::Precondition(format!(
            "graph is not balanced ({} vs {})",
            g.n_a(),
            g.n_b()
        )));
    }
    let n = g.n_a();
    if n == 0 || !n.is_multiple_of(s + t) {
        return Err(TileError::Precondition(format!(
            "class size {n} is not a positive multiple of {}",
            s + t
        )));
    }
    let k = n / (s + t);

    let (case, note) = match extremal_route(g, s, t, k, cfg) {
        Ok((f, c)) => {
            assert!(
                verify_factor(g, s, t, &f),
                "extremal route produced an invalid factor"
            );
            return Ok(TileOutcome {
                verdict: TileVerdict::Found(f),
                route: Route::Extremal,
                case: Some(c),
                note: None,
            });
        }
        Err(failure) => failure,
    };

    if n > cfg.fallback_n_cap {
        return Ok(TileOutcome {
            verdict: TileVerdict::Unknown,
            route: Route::None,
            case,
            note: Some(note),
        });
    }
    let verdict = match has_factor(g, s, t, cfg.fallback_budget) {
        SearchOutcome::Found(f) => {
            assert!(
                verify_factor(g, s, t, &f),
                "solver produced an invalid factor"
            );
            TileVerdict::Found(f)
        }
        SearchOutcome::NoFactor => TileVerdict::NoFactor,
        SearchOutcome::BudgetExceeded => TileVerdict::Unknown,
    };
    Ok(TileOutcome {
        verdict,
        route: Route::Fallback,
        case,
        note: Some(note),
    })
}

type RouteFailure = (Option<String>, String);

fn extremal_route(
    g: &BipartiteGraph,
    s: usize,
    t: usize,
    k: usize,
    cfg: &TilerConfig,
) -> Result<(Factor, String), RouteFailure> {
    let need = threshold(s, t, k);
    let got = g.min_degree().map_err(|e| (None, e.to_string()))?;
    if got < need {
        return Err((
            None,
            format!("minimum degree {got} is below the threshold {need}"),
        ));
    }
    let (a1, b1) =
        find_base_pair(g, cfg.alpha).ok_or((None, "no sparse base pair found".to_string()))?;
    let lab = classify(g, &a1, &b1, cfg).map_err(|e| (None, e.to_string()))?;
    let (res, case) = if k.is_multiple_of(2) {
        (
            tile_even(g, &lab, s, t),
            format!("even/{}", kebab(&even_case(&lab))),
        )
    } else {
        (
            tile_odd(g, &lab, s, t),
            format!("odd/{}", kebab(&odd_case(&lab, s, t))),
        )
    };
    match res {
        Ok(f) => Ok((f, case)),
        Err(e) => Err((Some(case), e.to_string())),
    }
}

fn kebab<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

/// Heuristic search for half-classes `A1, B1` with `d(A1, B1) < alpha`.
///
/// From a few seed vertices of low degree, starts with `B1` as the seed's
/// non-neighborhood and alternately re-picks each side as the half with the
/// fewest neighbors in the other.
pub fn find_base_pair(g: &BipartiteGraph, alpha: f64) -> Option<(VertexSet, VertexSet)> {
    let n = g.n_a();
    let h = n / 2;
    if h == 0 || !g.is_balanced() {
        return None;
    }
    let mut seeds: Vec<(usize, usize)> = (0..n)
        .map(|i| (g.degree(VertexRef::a(i)).unwrap_or(0), i))
        .collect();
    seeds.sort_unstable();
    let lowest_half = |side: Side, against: &VertexSet, prefer: Option<&VertexSet>| {
        let mut order: Vec<(usize, bool, usize)> = (0..n)
            .map(|i| {
                let v = VertexRef { side, index: i };
                let adj = prefer.is_some_and(|p| !p.contains(i));
                (g.degree_into(v, against.bits()), adj, i)
            })
            .collect();
        order.sort_unstable();
        VertexSet::from_indices(side, n, order[..h].iter().map(|&(_, _, i)| i))
    };
    for &(_, seed) in seeds.iter().take(6) {
        // Seed's non-neighbors first, ties by index.
        let mut b1 = lowest_half(Side::B, &VertexSet::from_indices(Side::A, n, [seed]), None);
        let mut a1 = lowest_half(Side::A, &b1, None);
        for _ in 0..4 {
            let nb = lowest_half(Side::B, &a1, Some(&b1));
            let na = lowest_half(Side::A, &nb, Some(&a1));
            let stable = nb == b1 && na == a1;
            b1 = nb;
            a1 = na;
            if stable {
                break;
            }
        }
        let e = g.edges_between(&a1, &b1).ok()?;
        if (e as f64) < alpha * (h * h) as f64 {
            return Some((a1, b1));
        }
    }
    None
}
