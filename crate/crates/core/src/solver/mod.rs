//! Exact `K_{s,t}`-factor search.
//!
//! The search always branches on the lowest-index uncovered vertex. Because
//! vertices of `A` are ordered first and the orientation counts are forced by
//! the class sizes, that vertex is always in `A` until the factor is complete.
//! Candidate copies are generated with bitset common-neighborhood
//! intersections; dead states are memoized by their uncovered sets.

mod brute;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bigraph::{BipartiteGraph, GraphError, Side, VertexRef, VertexSet};
use crate::bitset::BitSet;
use crate::extremal::orientation_counts;

pub use brute::{brute_force_has_factor, BRUTE_FORCE_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("brute force is capped at {cap} vertices, graph has {got}")]
    TooLarge { cap: usize, got: usize },
    #[error("need 1 <= s <= t, got s={s}, t={t}")]
    BadShape { s: usize, t: usize },
    #[error("input is not a valid factor of K_{{{0},{0}}} copies")]
    InvalidFactor(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    /// The `t`-side lies in class `A`.
    TsideInA,
    /// The `t`-side lies in class `B`.
    TsideInB,
}

impl Orientation {
    pub fn t_side(self) -> Side {
        match self {
            Orientation::TsideInA => Side::A,
            Orientation::TsideInB => Side::B,
        }
    }

    fn index(self) -> usize {
        match self {
            Orientation::TsideInA => 0,
            Orientation::TsideInB => 1,
        }
    }
}

/// One placed copy of `K_{s,t}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KstCopy {
    pub orientation: Orientation,
    pub s_side: VertexSet,
    pub t_side: VertexSet,
}

impl KstCopy {
    /// Builds a copy from its two parts; the larger part is the `t`-side.
    /// For `s = t` the `A` part is taken as the `t`-side.
    pub fn from_parts(g: &BipartiteGraph, a_part: &[usize], b_part: &[usize]) -> KstCopy {
        let a = VertexSet::from_indices(Side::A, g.n_a(), a_part.iter().copied());
        let b = VertexSet::from_indices(Side::B, g.n_b(), b_part.iter().copied());
        if a_part.len() >= b_part.len() {
            KstCopy {
                orientation: Orientation::TsideInA,
                s_side: b,
                t_side: a,
            }
        } else {
            KstCopy {
                orientation: Orientation::TsideInB,
                s_side: a,
                t_side: b,
            }
        }
    }

    pub fn a_part(&self) -> &VertexSet {
        match self.orientation {
            Orientation::TsideInA => &self.t_side,
            Orientation::TsideInB => &self.s_side,
        }
    }

    pub fn b_part(&self) -> &VertexSet {
        match self.orientation {
            Orientation::TsideInA => &self.s_side,
            Orientation::TsideInB => &self.t_side,
        }
    }

    /// Sizes, sides and completeness against `g`.
    pub fn is_valid_in(&self, g: &BipartiteGraph, s: usize, t: usize) -> bool {
        let t_side = self.orientation.t_side();
        if self.t_side.side() != t_side || self.s_side.side() != t_side.other() {
            return false;
        }
        if self.s_side.len() != s || self.t_side.len() != t {
            return false;
        }
        let (a, b) = (self.a_part(), self.b_part());
        if g.check_set(a).is_err() || g.check_set(b).is_err() {
            return false;
        }
        a.iter()
            .all(|x| b.bits().is_subset(g.neighbors(VertexRef::a(x))))
    }
}

/// Vertex-disjoint copies covering the whole graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factor {
    pub copies: Vec<KstCopy>,
}

impl Factor {
    pub fn len(&self) -> usize {
        self.copies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.copies.is_empty()
    }

    pub fn count(&self, o: Orientation) -> usize {
        self.copies.iter().filter(|c| c.orientation == o).count()
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget::default()
    }

    pub fn nodes(limit: u64) -> Self {
        SearchBudget {
            node_limit: Some(limit),
            time_limit: None,
        }
    }

    pub fn with_time(mut self, limit: Duration) -> Self {
        self.time_limit = Some(limit);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Factor),
    NoFactor,
    BudgetExceeded,
}

impl SearchOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            SearchOutcome::Found(_) => "Found",
            SearchOutcome::NoFactor => "NoFactor",
            SearchOutcome::BudgetExceeded => "BudgetExceeded",
        }
    }

    pub fn factor(&self) -> Option<&Factor> {
        match self {
            SearchOutcome::Found(f) => Some(f),
            _ => None,
        }
    }
}

/// Node count of the last search, for reports.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
    pub memo_hits: u64,
}

/// All copies containing `v` that avoid the given `A`- and `B`-sets, both
/// orientations. Ordered by orientation (`TsideInA` first), then by `A` part,
/// then by `B` part, each lexicographically.
pub fn copies_covering(
    g: &BipartiteGraph,
    s: usize,
    t: usize,
    v: VertexRef,
    avoid: (&VertexSet, &VertexSet),
) -> Result<Vec<KstCopy>, SolverError> {
    check_shape(s, t)?;
    g.check_vertex(v)?;
    let (avoid_a, avoid_b) = match avoid.0.side() {
        Side::A => (avoid.0, avoid.1),
        Side::B => (avoid.1, avoid.0),
    };
    g.check_set(avoid_a)?;
    g.check_set(avoid_b)?;
    if avoid_a.side() == avoid_b.side() {
        return Err(GraphError::SameSide(avoid_a.side()).into());
    }
    let mut free_a = BitSet::full(g.n_a());
    free_a.difference_with(avoid_a.bits());
    let mut free_b = BitSet::full(g.n_b());
    free_b.difference_with(avoid_b.bits());
    let mut out = Vec::new();
    if !match v.side {
        Side::A => free_a.contains(v.index),
        Side::B => free_b.contains(v.index),
    } {
        return Ok(out);
    }
    let gen = CopyGen { g, s, t };
    for o in [Orientation::TsideInA, Orientation::TsideInB] {
        gen.for_each(v, o, &free_a, &free_b, false, &mut |a, b| {
            out.push(KstCopy::from_oriented(g, o, a, b));
            true
        });
    }
    Ok(out)
}

impl KstCopy {
    pub(crate) fn from_oriented(
        g: &BipartiteGraph,
        o: Orientation,
        a: &[usize],
        b: &[usize],
    ) -> KstCopy {
        let av = VertexSet::from_indices(Side::A, g.n_a(), a.iter().copied());
        let bv = VertexSet::from_indices(Side::B, g.n_b(), b.iter().copied());
        match o {
            Orientation::TsideInA => KstCopy {
                orientation: o,
                s_side: bv,
                t_side: av,
            },
            Orientation::TsideInB => KstCopy {
                orientation: o,
                s_side: av,
                t_side: bv,
            },
        }
    }
}

fn check_shape(s: usize, t: usize) -> Result<(), SolverError> {
    if s == 0 || t < s {
        return Err(SolverError::BadShape { s, t });
    }
    Ok(())
}

/// Enumerates copies through one vertex.
struct CopyGen<'g> {
    g: &'g BipartiteGraph,
    s: usize,
    t: usize,
}

impl CopyGen<'_> {
    /// Calls `f(a_part, b_part)` for every copy containing `v` with the given
    /// orientation inside the free sets. With `only_above`, other members of
    /// `v`'s own part must have larger index. `f` returns `false` to stop.
    /// Returns `false` if stopped.
    fn for_each(
        &self,
        v: VertexRef,
        o: Orientation,
        free_a: &BitSet,
        free_b: &BitSet,
        only_above: bool,
        f: &mut dyn FnMut(&[usize], &[usize]) -> bool,
    ) -> bool {
        let (own_free, other_free) = match v.side {
            Side::A => (free_a, free_b),
            Side::B => (free_b, free_a),
        };
        let own_size = if o.t_side() == v.side { self.t } else { self.s };
        let other_size = self.s + self.t - own_size;
        let common = self.g.neighbors(v).intersection(other_free);
        if common.count() < other_size {
            return true;
        }
        let mut own: Vec<usize> = own_free
            .iter()
            .filter(|&u| u != v.index && (!only_above || u > v.index))
            .collect();
        own.retain(|&u| {
            self.g
                .neighbors(VertexRef {
                    side: v.side,
                    index: u,
                })
                .intersection_count(&common)
                >= other_size
        });
        let mut chosen = vec![v.index];
        self.grow(
            v.side,
            &own,
            0,
            own_size,
            other_size,
            &mut chosen,
            &common,
            f,
        )
    }

    #[allow(clippy::too_many_arguments)]
    fn grow(
        &self,
        side: Side,
        cands: &[usize],
        from: usize,
        own_size: usize,
        other_size: usize,
        chosen: &mut Vec<usize>,
        common: &BitSet,
        f: &mut dyn FnMut(&[usize], &[usize]) -> bool,
    ) -> bool {
        if chosen.len() == own_size {
            let mut own = chosen.clone();
            own.sort_unstable();
            let pool: Vec<usize> = common.iter().collect();
            return for_each_combination(&pool, other_size, &mut |other| match side {
                Side::A => f(&own, other),
                Side::B => f(other, &own),
            });
        }
        let need = own_size - chosen.len();
        for i in from..cands.len() {
            if cands.len() - i < need {
                break;
            }
            let u = cands[i];
            let next = self
                .g
                .neighbors(VertexRef { side, index: u })
                .intersection(common);
            if next.count() < other_size {
                continue;
            }
            chosen.push(u);
            let go = self.grow(side, cands, i + 1, own_size, other_size, chosen, &next, f);
            chosen.pop();
            if !go {
                return false;
            }
        }
        true
    }
}

/// Lexicographic `k`-combinations of `pool`; stops when `f` returns `false`.
pub(crate) fn for_each_combination(
    pool: &[usize],
    k: usize,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let n = pool.len();
    if k > n {
        return true;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    let mut buf = vec![0; k];
    loop {
        for (b, &i) in buf.iter_mut().zip(&idx) {
            *b = pool[i];
        }
        if !f(&buf) {
            return false;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return true;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

const MEMO_CAP: usize = 1 << 21;

struct Search<'g> {
    g: &'g BipartiteGraph,
    gen: CopyGen<'g>,
    s: usize,
    t: usize,
    budget: SearchBudget,
    started: Instant,
    stats: SearchStats,
    out_of_budget: bool,
    dead: HashSet<(BitSet, BitSet)>,
    stack: Vec<(Orientation, Vec<usize>, Vec<usize>)>,
}

impl Search<'_> {
    fn tick(&mut self) -> bool {
        self.stats.nodes += 1;
        if let Some(limit) = self.budget.node_limit {
            if self.stats.nodes > limit {
                self.out_of_budget = true;
            }
        }
        if let Some(limit) = self.budget.time_limit {
            if self.stats.nodes.is_multiple_of(512) && self.started.elapsed() > limit {
                self.out_of_budget = true;
            }
        }
        !self.out_of_budget
    }

    /// Every free vertex still has enough free neighbors for some role.
    fn degrees_ok(&self, free_a: &BitSet, free_b: &BitSet, rem: [usize; 2]) -> bool {
        let need = |own: Side| -> Option<usize> {
            let mut best = None;
            for o in [Orientation::TsideInA, Orientation::TsideInB] {
                if rem[o.index()] > 0 {
                    let other = if o.t_side() == own { self.s } else { self.t };
                    best = Some(best.map_or(other, |b: usize| b.min(other)));
                }
            }
            best
        };
        for (side, own, other) in [(Side::A, free_a, free_b), (Side::B, free_b, free_a)] {
            if own.is_empty() {
                continue;
            }
            let Some(need) = need(side) else {
                return false;
            };
            for v in own.iter() {
                if self.g.degree_into(VertexRef { side, index: v }, other) < need {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, free_a: &mut BitSet, free_b: &mut BitSet, rem: [usize; 2]) -> bool {
        if !self.tick() {
            return false;
        }
        let Some(v) = free_a.first() else {
            return free_b.is_empty();
        };
        if self.dead.contains(&(free_a.clone(), free_b.clone())) {
            self.stats.memo_hits += 1;
            return false;
        }
        if !self.degrees_ok(free_a, free_b, rem) {
            return false;
        }
        let v = VertexRef::a(v);
        let mut candidates = Vec::new();
        for o in [Orientation::TsideInA, Orientation::TsideInB] {
            if rem[o.index()] == 0 {
                continue;
            }
            self.gen.for_each(v, o, free_a, free_b, true, &mut |a, b| {
                candidates.push((o, a.to_vec(), b.to_vec()));
                true
            });
        }
        for (o, a, b) in candidates {
            for &x in &a {
                free_a.remove(x);
            }
            for &y in &b {
                free_b.remove(y);
            }
            let mut r = rem;
            r[o.index()] -= 1;
            self.stack.push((o, a, b));
            if self.run(free_a, free_b, r) {
                return true;
            }
            let (_, a, b) = self.stack.pop().expect("pushed above");
            for &x in &a {
                free_a.insert(x);
            }
            for &y in &b {
                free_b.insert(y);
            }
            if self.out_of_budget {
                return false;
            }
        }
        if !self.out_of_budget && self.dead.len() < MEMO_CAP {
            self.dead.insert((free_a.clone(), free_b.clone()));
        }
        false
    }
}

/// Decides whether `g` has a `K_{s,t}`-factor, within `budget`.
pub fn has_factor(g: &BipartiteGraph, s: usize, t: usize, budget: SearchBudget) -> SearchOutcome {
    has_factor_with_stats(g, s, t, budget).0
}

pub fn has_factor_with_stats(
    g: &BipartiteGraph,
    s: usize,
    t: usize,
    budget: SearchBudget,
) -> (SearchOutcome, SearchStats) {
    if s == 0 || t < s {
        return (SearchOutcome::NoFactor, SearchStats::default());
    }
    let Some((x, y)) = orientation_counts(g.n_a(), g.n_b(), s, t) else {
        return (SearchOutcome::NoFactor, SearchStats::default());
    };
    let mut search = Search {
        g,
        gen: CopyGen { g, s, t },
        s,
        t,
        budget,
        started: Instant::now(),
        stats: SearchStats::default(),
        out_of_budget: false,
        dead: HashSet::new(),
        stack: Vec::new(),
    };
    let mut free_a = BitSet::full(g.n_a());
    let mut free_b = BitSet::full(g.n_b());
    let found = search.run(&mut free_a, &mut free_b, [x, y]);
    let outcome = if found {
        let copies = search
            .stack
            .iter()
            .map(|(o, a, b)| KstCopy::from_oriented(g, *o, a, b))
            .collect();
        let f = Factor { copies };
        debug_assert!(verify_factor(g, s, t, &f));
        SearchOutcome::Found(f)
    } else if search.out_of_budget {
        SearchOutcome::BudgetExceeded
    } else {
        SearchOutcome::NoFactor
    };
    (outcome, search.stats)
}

/// Checks sizes, completeness, disjointness and coverage of `f` against `g`.
pub fn verify_factor(g: &BipartiteGraph, s: usize, t: usize, f: &Factor) -> bool {
    if s == 0 || t < s {
        return false;
    }
    let total = g.n_a() + g.n_b();
    if !total.is_multiple_of(s + t) || f.copies.len() != total / (s + t) {
        return false;
    }
    let mut seen_a = BitSet::new(g.n_a());
    let mut seen_b = BitSet::new(g.n_b());
    for c in &f.copies {
        if !c.is_valid_in(g, s, t) {
            return false;
        }
        if !seen_a.is_disjoint(c.a_part().bits()) || !seen_b.is_disjoint(c.b_part().bits()) {
            return false;
        }
        seen_a.union_with(c.a_part().bits());
        seen_b.union_with(c.b_part().bits());
    }
    seen_a.count() == g.n_a() && seen_b.count() == g.n_b()
}

/// Splits every `K_{s+t,s+t}` of `big` into two `K_{s,t}` copies of opposite
/// orientation: the first `s` of its `A` part with the first `t` of its `B`
/// part, and the remaining `t` with the remaining `s`.
pub fn split_stst(
    g: &BipartiteGraph,
    s: usize,
    t: usize,
    big: &Factor,
) -> Result<Factor, SolverError> {
    check_shape(s, t)?;
    if s == t || !verify_factor(g, s + t, s + t, big) {
        return Err(SolverError::InvalidFactor(s + t));
    }
    let mut copies = Vec::with_capacity(2 * big.len());
    for c in &big.copies {
        let xs = c.a_part().to_vec();
        let ys = c.b_part().to_vec();
        copies.push(KstCopy::from_oriented(
            g,
            Orientation::TsideInB,
            &xs[..s],
            &ys[..t],
        ));
        copies.push(KstCopy::from_oriented(
            g,
            Orientation::TsideInA,
            &xs[s..],
            &ys[t..],
        ));
    }
    Ok(Factor { copies })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{build_even, ConstructionParams};

    fn matching(n: usize) -> BipartiteGraph {
        BipartiteGraph::from_edges(n, n, (0..n).map(|i| (i, i))).unwrap()
    }

    fn none(g: &BipartiteGraph) -> (VertexSet, VertexSet) {
        (g.empty_set(Side::A), g.empty_set(Side::B))
    }

    /// Every (A-part, B-part) pair containing `a0`, by direct subset scan.
    fn copies_through_a0_oracle(g: &BipartiteGraph, s: usize, t: usize) -> usize {
        let mut count = 0;
        for amask in 0u32..(1 << g.n_a()) {
            if amask & 1 == 0 {
                continue;
            }
            for bmask in 0u32..(1 << g.n_b()) {
                let (ca, cb) = (amask.count_ones() as usize, bmask.count_ones() as usize);
                if !((ca == s && cb == t) || (ca == t && cb == s)) {
                    continue;
                }
                let complete = (0..g.n_a()).filter(|a| amask >> a & 1 == 1).all(|a| {
                    (0..g.n_b())
                        .filter(|b| bmask >> b & 1 == 1)
                        .all(|b| g.has_edge(a, b))
                });
                count += complete as usize;
            }
        }
        count
    }

    #[test]
    fn copies_through_vertex_in_k33() {
        let g = BipartiteGraph::complete(3, 3);
        let (ea, eb) = none(&g);
        let cs = copies_covering(&g, 1, 2, VertexRef::a(0), (&ea, &eb)).unwrap();
        assert_eq!(cs.len(), 9);
        assert_eq!(cs.len(), copies_through_a0_oracle(&g, 1, 2));
        let in_t = cs
            .iter()
            .filter(|c| c.orientation == Orientation::TsideInA)
            .count();
        assert_eq!(in_t, 6);
        let unique: HashSet<_> = cs.iter().cloned().collect();
        assert_eq!(unique.len(), cs.len());
        assert!(cs
            .iter()
            .all(|c| c.is_valid_in(&g, 1, 2) && c.a_part().contains(0)));
    }

    #[test]
    fn copies_through_vertex_degenerate() {
        let e = BipartiteGraph::empty(3, 3);
        let (ea, eb) = none(&e);
        assert!(copies_covering(&e, 1, 2, VertexRef::b(1), (&ea, &eb))
            .unwrap()
            .is_empty());
        let m = matching(3);
        assert!(copies_covering(&m, 1, 2, VertexRef::a(2), (&ea, &eb))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn copies_respect_avoid_sets() {
        let g = BipartiteGraph::complete(3, 3);
        let avoid_b = VertexSet::from_indices(Side::B, 3, [0]);
        let ea = g.empty_set(Side::A);
        let cs = copies_covering(&g, 1, 2, VertexRef::a(0), (&ea, &avoid_b)).unwrap();
        // s-side {a0} with {b1,b2}, or t-side {a0,a_i} with b1 or b2.
        assert_eq!(cs.len(), 1 + 2 * 2);
        assert!(cs.iter().all(|c| !c.b_part().contains(0)));
    }

    #[test]
    fn k33_factor() {
        let g = BipartiteGraph::complete(3, 3);
        let SearchOutcome::Found(f) = has_factor(&g, 1, 2, SearchBudget::unlimited()) else {
            panic!("K33 tiles")
        };
        assert_eq!(f.len(), 2);
        assert!(verify_factor(&g, 1, 2, &f));
        assert_eq!(f.count(Orientation::TsideInA), 1);
        let g = BipartiteGraph::complete(6, 6);
        let SearchOutcome::Found(f) = has_factor(&g, 1, 2, SearchBudget::unlimited()) else {
            panic!()
        };
        assert_eq!(f.len(), 4);
        assert_eq!(f.count(Orientation::TsideInA), 2);
    }

    #[test]
    fn no_factor_cases() {
        let c = build_even(ConstructionParams::new(1, 2, 2).unwrap()).unwrap();
        assert_eq!(
            has_factor(&c.graph, 1, 2, SearchBudget::unlimited()),
            SearchOutcome::NoFactor
        );
        assert_eq!(
            has_factor(&matching(3), 1, 2, SearchBudget::unlimited()),
            SearchOutcome::NoFactor
        );
        // 4 is not a multiple of 3.
        let k44 = BipartiteGraph::complete(4, 4);
        assert_eq!(
            has_factor(&k44, 1, 2, SearchBudget::unlimited()),
            SearchOutcome::NoFactor
        );
    }

    #[test]
    fn budget_exhaustion_is_not_no_factor() {
        let g = BipartiteGraph::complete(30, 30);
        let out = has_factor(&matching(30), 1, 2, SearchBudget::nodes(1));
        assert_ne!(
            out,
            SearchOutcome::BudgetExceeded,
            "matching fails before the budget"
        );
        let c = build_even(ConstructionParams::new(1, 2, 4).unwrap()).unwrap();
        assert_eq!(
            has_factor(&c.graph, 1, 2, SearchBudget::nodes(3)),
            SearchOutcome::BudgetExceeded
        );
        assert!(matches!(
            has_factor(&g, 1, 2, SearchBudget::nodes(1000)),
            SearchOutcome::Found(_)
        ));
    }

    #[test]
    fn unbalanced_factor() {
        // One K_{1,2} with its t-side in A.
        let g = BipartiteGraph::complete(2, 1);
        let out = has_factor(&g, 1, 2, SearchBudget::unlimited());
        let f = out.factor().unwrap();
        assert_eq!(f.copies[0].orientation, Orientation::TsideInA);
    }

    #[test]
    fn verify_rejects_broken_factors() {
        let g = BipartiteGraph::complete(3, 3);
        let f = has_factor(&g, 1, 2, SearchBudget::unlimited())
            .factor()
            .unwrap()
            .clone();
        assert!(verify_factor(&g, 1, 2, &f));
        let c = &f.copies[0];
        let (a, b) = (c.a_part().to_vec()[0], c.b_part().to_vec()[0]);
        let mut builder = crate::bigraph::GraphBuilder::from_graph(&g);
        builder.remove_edge(a, b);
        assert!(!verify_factor(&builder.build(), 1, 2, &f));
        assert!(!verify_factor(&g, 1, 2, &Factor::default()));
        let mut dup = f.clone();
        dup.copies[1] = dup.copies[0].clone();
        assert!(!verify_factor(&g, 1, 2, &dup));
    }

    #[test]
    fn split_big_copies() {
        let g = BipartiteGraph::complete(3, 3);
        let big = Factor {
            copies: vec![KstCopy::from_parts(&g, &[0, 1, 2], &[0, 1, 2])],
        };
        let f = split_stst(&g, 1, 2, &big).unwrap();
        assert_eq!(f.len(), 2);
        assert_ne!(f.copies[0].orientation, f.copies[1].orientation);
        assert!(verify_factor(&g, 1, 2, &f));

        let g = BipartiteGraph::complete(6, 6);
        let big = Factor {
            copies: vec![KstCopy::from_parts(
                &g,
                &[0, 1, 2, 3, 4, 5],
                &[0, 1, 2, 3, 4, 5],
            )],
        };
        let f = split_stst(&g, 2, 4, &big).unwrap();
        assert_eq!(f.len(), 2);
        assert!(verify_factor(&g, 2, 4, &f));

        assert!(split_stst(&g, 2, 4, &Factor::default()).is_err());
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(&[1, 3, 5, 7], 2, &mut |c| {
            seen.push(c.to_vec());
            true
        });
        assert_eq!(
            seen,
            vec![
                vec![1, 3],
                vec![1, 5],
                vec![1, 7],
                vec![3, 5],
                vec![3, 7],
                vec![5, 7]
            ]
        );
        let mut n = 0;
        for_each_combination(&[1, 2], 0, &mut |c| {
            assert!(c.is_empty());
            n += 1;
            true
        });
        assert_eq!(n, 1);
    }
}
