//! Vertex-disjoint `h`-stars in sparse bipartite graphs.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::TileError;
use crate::bigraph::{BipartiteGraph, Side, VertexRef, VertexSet};
use crate::bitset::BitSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Star {
    pub center: VertexRef,
    pub leaves: VertexSet,
}

impl Star {
    pub fn is_valid_in(&self, g: &BipartiteGraph) -> bool {
        self.leaves.side() == self.center.side.other()
            && g.check_vertex(self.center).is_ok()
            && g.check_set(&self.leaves).is_ok()
            && self.leaves.bits().is_subset(g.neighbors(self.center))
    }
}

/// The quantities behind the star lemma for one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarBounds {
    /// Minimum degree from `u1` into `u2`.
    pub delta: usize,
    /// Maximum degree from `u2` into `u1`.
    pub max_back: usize,
    /// The best scale `M`, a half-integer, stored doubled.
    pub m_doubled: usize,
    /// Smallest `c` with `||U_i| - M|, δ, Δ <= cM` over all `M`.
    pub c: Ratio<u64>,
    /// Stars guaranteed per side, `2(δ - h + 1)`.
    pub per_side: usize,
}

/// Computes the lemma's parameters and checks `h <= δ` and `c < 1/(6h+7)`.
pub fn star_bounds(
    h: usize,
    u1: &VertexSet,
    u2: &VertexSet,
    g: &BipartiteGraph,
) -> Result<StarBounds, TileError> {
    g.check_set(u1)?;
    g.check_set(u2)?;
    if u1.side() == u2.side() {
        return Err(TileError::StarHypothesis(
            "u1 and u2 must lie on opposite sides".into(),
        ));
    }
    if h == 0 || u1.is_empty() || u2.is_empty() {
        return Err(TileError::StarHypothesis(
            "need h >= 1 and nonempty sets".into(),
        ));
    }
    let delta = g.delta_between(u1, u2)?;
    let max_back = g.max_degree_between(u2, u1)?;
    if h > delta {
        return Err(TileError::StarHypothesis(format!(
            "h = {h} exceeds δ = {delta}"
        )));
    }
    // The optimum of max(|n1 - M|, |n2 - M|, δ, Δ) / M sits at an integer or
    // half-integer breakpoint, so scanning 2M covers it.
    let (n1, n2) = (2 * u1.len() as u64, 2 * u2.len() as u64);
    let floor = 2 * delta.max(max_back) as u64;
    let mut best: Option<(Ratio<u64>, u64)> = None;
    for m2 in 1..=(n1.max(n2) + floor + 2) {
        let num = n1.abs_diff(m2).max(n2.abs_diff(m2)).max(floor);
        let c = Ratio::new(num, m2);
        if best.as_ref().is_none_or(|(b, _)| c < *b) {
            best = Some((c, m2));
        }
    }
    let (c, m2) = best.expect("scan is nonempty");
    let limit = Ratio::new(1, 6 * h as u64 + 7);
    if c >= limit {
        return Err(TileError::StarHypothesis(format!(
            "best c = {c} is not below 1/{}",
            6 * h + 7
        )));
    }
    Ok(StarBounds {
        delta,
        max_back,
        m_doubled: m2 as usize,
        c,
        per_side: 2 * (delta - h + 1),
    })
}

/// Vertex-disjoint `h`-stars, `2(δ-h+1)` centered in `u1` and as many in
/// `u2`, after checking the lemma's hypotheses.
pub fn find_stars(
    h: usize,
    u1: &VertexSet,
    u2: &VertexSet,
    g: &BipartiteGraph,
) -> Result<(Vec<Star>, Vec<Star>), TileError> {
    let bounds = star_bounds(h, u1, u2, g)?;
    let want = bounds.per_side;
    let mut avail = Avail::new(g);
    let (mut s1, mut s2) = (Vec::with_capacity(want), Vec::with_capacity(want));
    while s1.len() < want || s2.len() < want {
        for (list, from, into) in [(&mut s1, u1, u2), (&mut s2, u2, u1)] {
            if list.len() >= want {
                continue;
            }
            let star = avail
                .pick(g, from, into, h)
                .ok_or(TileError::StarBug {
                    h,
                    found: list.len(),
                    wanted: want,
                })?;
            list.push(star);
        }
    }
    Ok((s1, s2))
}

/// Vertices not yet claimed by a star or copy.
#[derive(Debug, Clone)]
pub(crate) struct Avail {
    a: BitSet,
    b: BitSet,
}

impl Avail {
    pub(crate) fn new(g: &BipartiteGraph) -> Self {
        Avail {
            a: BitSet::full(g.n_a()),
            b: BitSet::full(g.n_b()),
        }
    }

    pub(crate) fn side(&self, side: Side) -> &BitSet {
        match side {
            Side::A => &self.a,
            Side::B => &self.b,
        }
    }

    pub(crate) fn take(&mut self, side: Side, i: usize) {
        match side {
            Side::A => self.a.remove(i),
            Side::B => self.b.remove(i),
        };
    }

    pub(crate) fn take_set(&mut self, set: &VertexSet) {
        match set.side() {
            Side::A => self.a.difference_with(set.bits()),
            Side::B => self.b.difference_with(set.bits()),
        }
    }

    /// Greedy step: the available center in `from` with the fewest (but at
    /// least `h`) available neighbors in `into`, with its `h` available
    /// neighbors of lowest back-degree. Ties go to the lower index.
    pub(crate) fn pick(
        &mut self,
        g: &BipartiteGraph,
        from: &VertexSet,
        into: &VertexSet,
        h: usize,
    ) -> Option<Star> {
        let centers = from.bits().intersection(self.side(from.side()));
        let leaves = into.bits().intersection(self.side(into.side()));
        let (_, c) = centers
            .iter()
            .map(|i| {
                let v = VertexRef {
                    side: from.side(),
                    index: i,
                };
                (g.degree_into(v, &leaves), i)
            })
            .filter(|&(d, _)| d >= h)
            .min()?;
        let center = VertexRef {
            side: from.side(),
            index: c,
        };
        let mut cand: Vec<(usize, usize)> = g
            .neighbors(center)
            .intersection(&leaves)
            .iter()
            .map(|j| {
                let w = VertexRef {
                    side: into.side(),
                    index: j,
                };
                (g.degree_into(w, &centers), j)
            })
            .collect();
        cand.sort_unstable();
        let chosen = VertexSet::from_indices(
            into.side(),
            into.universe(),
            cand[..h].iter().map(|&(_, j)| j),
        );
        self.take(from.side(), c);
        self.take_set(&chosen);
        Some(Star {
            center,
            leaves: chosen,
        })
    }
}
