//! Lower-bound constructions: balanced bipartite graphs whose minimum degree
//! sits exactly one below the `K_{s,t}`-factor threshold yet have no
//! `K_{s,t}`-factor, together with certificates that can be checked without
//! searching for factors.
//!
//! All three constructions glue two complete blocks `G[A1, B1]` and
//! `G[A2, B2]` with sparse `K_{2,2}`-free gadgets across them. Vertices are
//! laid out block by block: `A1` first, then `A2`, then `A*` (same for `B`).

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bigraph::{BipartiteGraph, GraphBuilder, Side, VertexRef, VertexSet};
use crate::c4free::{self, GadgetError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("need 1 <= s < t and k >= 1, got s={s}, t={t}, k={k}")]
    InvalidParams { s: usize, t: usize, k: usize },
    #[error("{case:?} construction needs k {expected}, got k={k}")]
    WrongParity {
        case: ConstructionCase,
        expected: &'static str,
        k: usize,
    },
    #[error("{case:?} construction needs {expected}, got s={s}, t={t}")]
    OutOfRange {
        case: ConstructionCase,
        expected: &'static str,
        s: usize,
        t: usize,
    },
    #[error("no construction for k odd and t > 2s+1 (s={s}, t={t})")]
    Untight { s: usize, t: usize },
    #[error("gadget: {0}")]
    Gadget(#[from] GadgetError),
    #[error("internal: claimed minimum degree {claimed} but scan found {scanned}")]
    ClaimMismatch { claimed: usize, scanned: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConstructionParams {
    pub s: usize,
    pub t: usize,
    pub k: usize,
}

impl ConstructionParams {
    pub fn new(s: usize, t: usize, k: usize) -> Result<Self, ConstructionError> {
        let p = ConstructionParams { s, t, k };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), ConstructionError> {
        if self.s == 0 || self.t <= self.s || self.k == 0 {
            return Err(ConstructionError::InvalidParams {
                s: self.s,
                t: self.t,
                k: self.k,
            });
        }
        Ok(())
    }

    /// Class size `n = k(s+t)`.
    pub fn n(&self) -> usize {
        self.k * (self.s + self.t)
    }

    /// `l` with `k = 2l + 1`, for odd `k`.
    pub fn l(&self) -> Option<usize> {
        (self.k % 2 == 1).then_some(self.k / 2)
    }

    /// Which construction applies, if any.
    pub fn case(&self) -> Option<ConstructionCase> {
        let (s, t) = (self.s, self.t);
        if self.k.is_multiple_of(2) {
            Some(ConstructionCase::Even)
        } else if t == s + 1 {
            Some(ConstructionCase::OddSucc)
        } else if t <= 2 * s + 1 {
            Some(ConstructionCase::OddMid)
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionCase {
    Even,
    OddMid,
    OddSucc,
}

/// The named blocks of a construction. `a_star`/`b_star` are empty except in
/// the odd-mid case.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Blocks {
    pub a1: VertexSet,
    pub a2: VertexSet,
    pub a_star: VertexSet,
    pub b1: VertexSet,
    pub b2: VertexSet,
    pub b_star: VertexSet,
}

impl Blocks {
    fn layout(n: usize, sizes_a: [usize; 3], sizes_b: [usize; 3]) -> Blocks {
        let cut = |side, sz: [usize; 3], i: usize| {
            let start: usize = sz[..i].iter().sum();
            VertexSet::range(side, n, start..start + sz[i])
        };
        Blocks {
            a1: cut(Side::A, sizes_a, 0),
            a2: cut(Side::A, sizes_a, 1),
            a_star: cut(Side::A, sizes_a, 2),
            b1: cut(Side::B, sizes_b, 0),
            b2: cut(Side::B, sizes_b, 1),
            b_star: cut(Side::B, sizes_b, 2),
        }
    }

    pub fn named(&self) -> [(&'static str, &VertexSet); 6] {
        [
            ("A1", &self.a1),
            ("A2", &self.a2),
            ("A*", &self.a_star),
            ("B1", &self.b1),
            ("B2", &self.b2),
            ("B*", &self.b_star),
        ]
    }

    pub fn sizes(&self) -> BlockSizes {
        BlockSizes {
            a1: self.a1.len(),
            a2: self.a2.len(),
            a_star: self.a_star.len(),
            b1: self.b1.len(),
            b2: self.b2.len(),
            b_star: self.b_star.len(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockSizes {
    pub a1: usize,
    pub a2: usize,
    pub a_star: usize,
    pub b1: usize,
    pub b2: usize,
    pub b_star: usize,
}

#[derive(Debug, Clone)]
pub struct LabeledConstruction {
    pub params: ConstructionParams,
    pub case: ConstructionCase,
    pub graph: BipartiteGraph,
    pub blocks: Blocks,
    pub claimed_min_degree: usize,
}

/// Minimum degree that forces a `K_{s,t}`-factor for large `k`:
/// `n/2 + s - 1` for even `k`, `(n+t+s)/2 - 1` for odd `k`.
pub fn threshold(s: usize, t: usize, k: usize) -> usize {
    let n = k * (s + t);
    if k.is_multiple_of(2) {
        n / 2 + s - 1
    } else {
        (n + t + s) / 2 - 1
    }
}

/// Places `gadget` between `rows` (its first class) and `cols` (its second).
fn embed(
    b: &mut GraphBuilder,
    gadget: &BipartiteGraph,
    rows: &[usize],
    cols: &[usize],
    rows_on_a: bool,
) {
    for (r, c) in gadget.edges() {
        if rows_on_a {
            b.add_edge_unchecked(rows[r], cols[c]);
        } else {
            b.add_edge_unchecked(cols[c], rows[r]);
        }
    }
}

fn finish(
    params: ConstructionParams,
    case: ConstructionCase,
    builder: GraphBuilder,
    blocks: Blocks,
    claimed: usize,
) -> Result<LabeledConstruction, ConstructionError> {
    let graph = builder.build();
    let scanned = graph.min_degree().unwrap_or(0);
    if scanned != claimed {
        return Err(ConstructionError::ClaimMismatch { claimed, scanned });
    }
    Ok(LabeledConstruction {
        params,
        case,
        graph,
        blocks,
        claimed_min_degree: claimed,
    })
}

/// Even `k`: `|A1| = |B1| = n/2 + 1`, `|A2| = |B2| = n/2 - 1`, complete
/// diagonal blocks, and `Q(n/2+1, s-1)` across in both directions.
pub fn build_even(params: ConstructionParams) -> Result<LabeledConstruction, ConstructionError> {
    params.validate()?;
    let case = ConstructionCase::Even;
    if !params.k.is_multiple_of(2) {
        return Err(ConstructionError::WrongParity {
            case,
            expected: "even",
            k: params.k,
        });
    }
    let (n, s) = (params.n(), params.s);
    let big = n / 2 + 1;
    let small = n / 2 - 1;
    let blocks = Blocks::layout(n, [big, small, 0], [big, small, 0]);
    let q = c4free::build_q(big, s - 1)?;

    let (a1, a2, b1, b2) = (
        blocks.a1.to_vec(),
        blocks.a2.to_vec(),
        blocks.b1.to_vec(),
        blocks.b2.to_vec(),
    );
    let mut b = GraphBuilder::new(n, n);
    b.join(a1.iter().copied(), &b1);
    b.join(a2.iter().copied(), &b2);
    embed(&mut b, &q, &a1, &b2, true);
    embed(&mut b, &q, &b1, &a2, false);
    finish(params, case, b, blocks, n / 2 + s - 2)
}

/// Odd `k`, `s+1 < t <= 2s+1`: four blocks of size `(n-t+s+2)/2`, two
/// padding sets of size `t-s-2` joined to everything but each other, and
/// `P((n-t+s+2)/2, s-1)` across.
pub fn build_odd_mid(params: ConstructionParams) -> Result<LabeledConstruction, ConstructionError> {
    params.validate()?;
    let case = ConstructionCase::OddMid;
    let (s, t) = (params.s, params.t);
    if params.k % 2 != 1 {
        return Err(ConstructionError::WrongParity {
            case,
            expected: "odd",
            k: params.k,
        });
    }
    if !(t > s + 1 && t <= 2 * s + 1) {
        return Err(ConstructionError::OutOfRange {
            case,
            expected: "s+1 < t <= 2s+1",
            s,
            t,
        });
    }
    let n = params.n();
    let m = (n + s + 2 - t) / 2;
    let pad = t - s - 2;
    let blocks = Blocks::layout(n, [m, m, pad], [m, m, pad]);
    let p = c4free::build_p(m, s - 1)?;

    let [a1, a2, a_star, b1, b2, b_star] = blocks.named().map(|(_, v)| v.to_vec());
    let mut b = GraphBuilder::new(n, n);
    b.join(a1.iter().copied(), &b1);
    b.join(a2.iter().copied(), &b2);
    b.join(a_star.iter().copied(), &b1);
    b.join(a_star.iter().copied(), &b2);
    b.join(a1.iter().copied(), &b_star);
    b.join(a2.iter().copied(), &b_star);
    embed(&mut b, &p, &a1, &b2, true);
    embed(&mut b, &p, &a2, &b1, true);
    finish(params, case, b, blocks, (n + t + s) / 2 - 2)
}

/// Odd `k`, `t = s+1`: `|A1| = |B1| = l(s+t)+s`, `|A2| = |B2| = l(s+t)+s+1`,
/// and `R((n+1)/2, s-1)` across with its larger class in the larger block.
pub fn build_odd_succ(
    params: ConstructionParams,
) -> Result<LabeledConstruction, ConstructionError> {
    params.validate()?;
    let case = ConstructionCase::OddSucc;
    let (s, t) = (params.s, params.t);
    let Some(l) = params.l() else {
        return Err(ConstructionError::WrongParity {
            case,
            expected: "odd",
            k: params.k,
        });
    };
    if t != s + 1 {
        return Err(ConstructionError::OutOfRange {
            case,
            expected: "t = s+1",
            s,
            t,
        });
    }
    let n = params.n();
    let small = l * (s + t) + s;
    let big = small + 1;
    let blocks = Blocks::layout(n, [small, big, 0], [small, big, 0]);
    let r = c4free::build_r(n.div_ceil(2), s - 1)?;

    let (a1, a2, b1, b2) = (
        blocks.a1.to_vec(),
        blocks.a2.to_vec(),
        blocks.b1.to_vec(),
        blocks.b2.to_vec(),
    );
    let mut b = GraphBuilder::new(n, n);
    b.join(a1.iter().copied(), &b1);
    b.join(a2.iter().copied(), &b2);
    // G[B2, A1] and G[A2, B1] are both copies of R with R1 in the big block.
    embed(&mut b, &r, &b2, &a1, false);
    embed(&mut b, &r, &a2, &b1, true);
    finish(params, case, b, blocks, (n + t + s) / 2 - 2)
}

/// Builds whichever construction applies to `params`.
pub fn build(params: ConstructionParams) -> Result<LabeledConstruction, ConstructionError> {
    params.validate()?;
    match params.case() {
        Some(ConstructionCase::Even) => build_even(params),
        Some(ConstructionCase::OddMid) => build_odd_mid(params),
        Some(ConstructionCase::OddSucc) => build_odd_succ(params),
        None => Err(ConstructionError::Untight {
            s: params.s,
            t: params.t,
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObstructionKind {
    /// No copy uses a forbidden cross edge, so each half must be tiled on
    /// its own, and one half has sizes no tiling can match.
    DivisibilityAfterUnmixing,
    /// No copy uses a forbidden cross edge, so the number of copies inside
    /// the first half is pinned to an interval that contains no integer.
    CountingIntegrality,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockData {
    pub sizes: BlockSizes,
    /// `(|A1|+|B1|) mod (s+t)` and `(|A2|+|B2|) mod (s+t)`.
    pub residues: [usize; 2],
}

/// No-factor certificate. `forbidden_pairs` is `[(A1, B2), (A2, B1)]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub forbidden_pairs: Vec<(VertexSet, VertexSet)>,
    pub block_data: BlockData,
    /// Closed interval for the copy count `r1`, present for
    /// [`ObstructionKind::CountingIntegrality`].
    pub r1_bounds: Option<(Ratio<u64>, Ratio<u64>)>,
}

fn residues(sz: &BlockSizes, s: usize, t: usize) -> [usize; 2] {
    [(sz.a1 + sz.b1) % (s + t), (sz.a2 + sz.b2) % (s + t)]
}

/// Certificate matching the argument for `c`'s case.
pub fn obstruction_for(c: &LabeledConstruction) -> Obstruction {
    let ConstructionParams { s, t, .. } = c.params;
    let sizes = c.blocks.sizes();
    let forbidden_pairs = vec![
        (c.blocks.a1.clone(), c.blocks.b2.clone()),
        (c.blocks.a2.clone(), c.blocks.b1.clone()),
    ];
    let block_data = BlockData {
        sizes,
        residues: residues(&sizes, s, t),
    };
    match c.case {
        ConstructionCase::Even | ConstructionCase::OddSucc => Obstruction {
            kind: ObstructionKind::DivisibilityAfterUnmixing,
            forbidden_pairs,
            block_data,
            r1_bounds: None,
        },
        ConstructionCase::OddMid => {
            let l = c.params.l().expect("odd-mid has odd k") as u64;
            let (s, t) = (s as u64, t as u64);
            let lo = Ratio::new(l * (s + t) + s + 1, s + t);
            let hi = Ratio::new(l * (s + t) + t - 1, s + t);
            Obstruction {
                kind: ObstructionKind::CountingIntegrality,
                forbidden_pairs,
                block_data,
                r1_bounds: Some((lo, hi)),
            }
        }
    }
}

/// Whether an `a + b` bipartite graph can possibly be split into copies of
/// `K_{s,t}`: some `x, y >= 0` with `xt + ys = a` and `xs + yt = b`.
pub fn counts_admit_tiling(a: usize, b: usize, s: usize, t: usize) -> bool {
    orientation_counts(a, b, s, t).is_some()
}

/// The unique `(x, y)`: `x` copies with the `t`-side in the first class and
/// `y` with it in the second. `None` when no nonnegative integer solution exists.
pub fn orientation_counts(a: usize, b: usize, s: usize, t: usize) -> Option<(usize, usize)> {
    if s == t {
        return (a == b && a.is_multiple_of(s)).then_some((a / s, 0));
    }
    let (a, b, s, t) = (a as i64, b as i64, s as i64, t as i64);
    let den = t * t - s * s;
    let xn = t * a - s * b;
    let yn = t * b - s * a;
    if xn < 0 || yn < 0 || xn % den != 0 || yn % den != 0 {
        return None;
    }
    Some(((xn / den) as usize, (yn / den) as usize))
}

/// The cross block `G[x, y]` cannot carry an edge of any `K_{s,t}` copy,
/// given that the two cross blocks together split both classes.
fn cross_block_inert(g: &BipartiteGraph, x: &VertexSet, y: &VertexSet, s: usize) -> bool {
    let cap = s - 1;
    let (Ok(dx), Ok(dy)) = (g.max_degree_between(x, y), g.max_degree_between(y, x)) else {
        return false;
    };
    if dx > cap || dy > cap {
        return false;
    }
    let rows: Vec<_> = x
        .iter()
        .map(|i| {
            g.neighbors(VertexRef {
                side: x.side(),
                index: i,
            })
            .intersection(y.bits())
        })
        .collect();
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            if rows[i].intersection_count(&rows[j]) >= 2 {
                return false;
            }
        }
    }
    true
}

/// Checks a no-factor certificate against `g` without searching for factors.
///
/// Unmixing: the forbidden pairs `(A1, B2)` and `(A2, B1)` must split `A`
/// and `B`, and each cross block must be `K_{2,2}`-free with every degree at
/// most `s-1` in both directions (empty when `s = 1`). Under these
/// conditions a copy with an edge in a cross block would need more than `t`
/// vertices on one side, so every copy lies inside `A1 ∪ B1` or `A2 ∪ B2`.
/// The arithmetic then has to rule out every distribution of copies. Any
/// inconsistency between the certificate's claims and `g` yields `false`.
pub fn check_obstruction(g: &BipartiteGraph, o: &Obstruction, s: usize, t: usize) -> bool {
    if s == 0 || t <= s || o.forbidden_pairs.len() != 2 {
        return false;
    }
    let orient = |(x, y): &(VertexSet, VertexSet)| -> Option<(VertexSet, VertexSet)> {
        match (x.side(), y.side()) {
            (Side::A, Side::B) => Some((x.clone(), y.clone())),
            (Side::B, Side::A) => Some((y.clone(), x.clone())),
            _ => None,
        }
    };
    let (Some((a1, b2)), Some((a2, b1))) =
        (orient(&o.forbidden_pairs[0]), orient(&o.forbidden_pairs[1]))
    else {
        return false;
    };
    for v in [&a1, &a2, &b1, &b2] {
        if g.check_set(v).is_err() {
            return false;
        }
    }
    if !a1.is_disjoint(&a2) || !b1.is_disjoint(&b2) {
        return false;
    }
    if a1.len() + a2.len() != g.n_a() || b1.len() + b2.len() != g.n_b() {
        return false;
    }
    let sizes = BlockSizes {
        a1: a1.len(),
        a2: a2.len(),
        a_star: 0,
        b1: b1.len(),
        b2: b2.len(),
        b_star: 0,
    };
    if o.block_data.sizes != sizes || o.block_data.residues != residues(&sizes, s, t) {
        return false;
    }
    if !cross_block_inert(g, &a1, &b2, s) || !cross_block_inert(g, &a2, &b1, s) {
        return false;
    }
    match o.kind {
        ObstructionKind::DivisibilityAfterUnmixing => {
            o.r1_bounds.is_none()
                && (!counts_admit_tiling(sizes.a1, sizes.b1, s, t)
                    || !counts_admit_tiling(sizes.a2, sizes.b2, s, t))
        }
        ObstructionKind::CountingIntegrality => {
            // Unmixed, the copies covering A1 ∪ B1 number r1 (t-side in A1)
            // and r2 (t-side in B1); equal halves force r1 = r2.
            let Some((lo, hi)) = o.r1_bounds else {
                return false;
            };
            if sizes.a1 != sizes.b1 {
                return false;
            }
            let st = (s + t) as u64;
            let want_lo = Ratio::new(sizes.a1 as u64, st);
            let want_hi = Ratio::new((sizes.a1 + sizes.a_star) as u64, st);
            lo == want_lo && hi == want_hi && lo.ceil() > hi
        }
    }
}
