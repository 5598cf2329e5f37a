//! Splitting the vertex classes around a sparse base pair.

use serde::{Deserialize, Serialize};

use super::{TileError, TilerConfig};
use crate::bigraph::{BipartiteGraph, Side, VertexRef, VertexSet};

/// Six-way split of `A` and `B` relative to a sparse base pair `(A1, B1)`:
/// vertices with few neighbors in the base (`a1`, `b1`), with almost all
/// of it (`a2`, `b2`), and the rest (`a0`, `b0`, the special vertices).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalLabeling {
    pub a1: VertexSet,
    pub a2: VertexSet,
    pub a0: VertexSet,
    pub b1: VertexSet,
    pub b2: VertexSet,
    pub b0: VertexSet,
    pub alpha: f64,
    pub base_pair: (VertexSet, VertexSet),
}

impl ExtremalLabeling {
    pub fn is_partition(&self, g: &BipartiteGraph) -> bool {
        let part = |sets: [&VertexSet; 3], side: Side| {
            let n = g.class_size(side);
            sets.iter().all(|s| s.side() == side && s.universe() == n)
                && sets[0].is_disjoint(sets[1])
                && sets[0].is_disjoint(sets[2])
                && sets[1].is_disjoint(sets[2])
                && sets.iter().map(|s| s.len()).sum::<usize>() == n
        };
        part([&self.a1, &self.a2, &self.a0], Side::A)
            && part([&self.b1, &self.b2, &self.b0], Side::B)
    }

    pub fn specials(&self) -> usize {
        self.a0.len() + self.b0.len()
    }
}

/// Integer thresholds for the strict real inequalities of the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cuts {
    /// Low iff `deg < low`.
    pub low: usize,
    /// High iff `deg > high`.
    pub high: usize,
    /// Repaired blocks need every degree `< repair`.
    pub repair: usize,
}

fn snap(x: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() < 1e-9 {
        r
    } else {
        x
    }
}

impl Cuts {
    /// `deg < α^{1/3} n/2`, `deg > (1 - α^{1/3}) n/2` and `deg < α^{1/9} n`,
    /// each evaluated exactly on integers.
    pub fn new(n: usize, alpha: f64) -> Cuts {
        let a3 = alpha.cbrt();
        let a9 = a3.cbrt();
        let half = n as f64 / 2.0;
        Cuts {
            low: snap(a3 * half).ceil() as usize,
            high: snap((1.0 - a3) * half).floor() as usize,
            repair: snap(a9 * n as f64).ceil() as usize,
        }
    }
}

/// Labels every vertex by its degree into the base pair, then repairs.
pub fn classify(
    g: &BipartiteGraph,
    base_a1: &VertexSet,
    base_b1: &VertexSet,
    cfg: &TilerConfig,
) -> Result<ExtremalLabeling, TileError> {
    Ok(repair_labeling(
        g,
        label_by_degree(g, base_a1, base_b1, cfg)?,
    ))
}

/// The degree labeling alone, before any repair.
pub fn label_by_degree(
    g: &BipartiteGraph,
    base_a1: &VertexSet,
    base_b1: &VertexSet,
    cfg: &TilerConfig,
) -> Result<ExtremalLabeling, TileError> {
    g.check_set(base_a1)?;
    g.check_set(base_b1)?;
    if base_a1.side() != Side::A || base_b1.side() != Side::B {
        return Err(TileError::Precondition(
            "base pair must be (A-set, B-set)".into(),
        ));
    }
    if !g.is_balanced() {
        return Err(TileError::Precondition("graph is not balanced".into()));
    }
    let n = g.n_a();
    if base_a1.len() != n / 2 || base_b1.len() != n / 2 {
        return Err(TileError::Precondition(format!(
            "base pair sets must have size {} (got {} and {})",
            n / 2,
            base_a1.len(),
            base_b1.len()
        )));
    }
    let cuts = Cuts::new(n, cfg.alpha);
    let split = |side: Side, base: &VertexSet| {
        let mut low = VertexSet::empty(side, n);
        let mut high = VertexSet::empty(side, n);
        let mut mid = VertexSet::empty(side, n);
        for i in 0..n {
            let d = g.degree_into(VertexRef { side, index: i }, base.bits());
            if d < cuts.low {
                low.insert(i);
            } else if d > cuts.high {
                high.insert(i);
            } else {
                mid.insert(i);
            }
        }
        (low, high, mid)
    };
    let (a1, a2, a0) = split(Side::A, base_b1);
    let (b1, b2, b0) = split(Side::B, base_a1);
    Ok(ExtremalLabeling {
        a1,
        a2,
        a0,
        b1,
        b2,
        b0,
        alpha: cfg.alpha,
        base_pair: (base_a1.clone(), base_b1.clone()),
    })
}

/// Moves vertices with too many neighbors inside `G[a1, b1]` or `G[a2, b2]`
/// to the special sets, one at a time, highest degree first, until both
/// blocks have maximum degree below `α^{1/9} n`.
pub fn repair_labeling(g: &BipartiteGraph, mut lab: ExtremalLabeling) -> ExtremalLabeling {
    let cut = Cuts::new(g.n_a(), lab.alpha).repair;
    loop {
        let mut worst: Option<(usize, VertexRef)> = None;
        let blocks = [
            (&lab.a1, &lab.b1),
            (&lab.b1, &lab.a1),
            (&lab.a2, &lab.b2),
            (&lab.b2, &lab.a2),
        ];
        for (from, into) in blocks {
            for i in from.iter() {
                let v = VertexRef {
                    side: from.side(),
                    index: i,
                };
                let d = g.degree_into(v, into.bits());
                let better = match worst {
                    None => true,
                    Some((wd, wv)) => d > wd || (d == wd && v < wv),
                };
                if d >= cut && better {
                    worst = Some((d, v));
                }
            }
        }
        let Some((_, v)) = worst else {
            return lab;
        };
        match v.side {
            Side::A => {
                lab.a1.remove(v.index);
                lab.a2.remove(v.index);
                lab.a0.insert(v.index);
            }
            Side::B => {
                lab.b1.remove(v.index);
                lab.b2.remove(v.index);
                lab.b0.insert(v.index);
            }
        }
    }
}
