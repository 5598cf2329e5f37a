//! Balancing the two dense pairs and tiling them.
//!
//! The dense pairs are `X1 x Y2` (grown from `a1 x b2`) and `X2 x Y1` (grown
//! from `a2 x b1`). A regular block that is too large sheds vertices: each
//! shed vertex is the center of an `s`-star inside its own sparse block, and
//! joins the other pair together with `t-1` partners from there, so that
//! its star becomes a `K_{s,t}` copy. Specials then fill the remaining room
//! on the side they are better connected to.

use serde::{Deserialize, Serialize};

use super::stars::Avail;
use super::{tile_dense_pair, ExtremalLabeling, TileError};
use crate::bigraph::{BipartiteGraph, Side, VertexRef, VertexSet};
use crate::bitset::BitSet;
use crate::extremal::{orientation_counts, threshold};
use crate::solver::{verify_factor, Factor, KstCopy, Orientation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EvenCase {
    /// No regular block exceeds `n/2`.
    Balanced,
    /// Exactly one does.
    OneOversized,
    /// `a_i` and `b_i` for the same `i`.
    Diagonal,
    /// `a_i` and `b_j` with `i != j`.
    NonDiagonal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OddCase {
    BothSmall,
    ASmallBBig,
    ABigBSmall,
    BothBig,
}

pub fn even_case(lab: &ExtremalLabeling) -> EvenCase {
    let h = lab.a1.universe() / 2;
    let big = |s: &VertexSet| s.len() > h;
    match (big(&lab.a1), big(&lab.a2), big(&lab.b1), big(&lab.b2)) {
        (false, false, false, false) => EvenCase::Balanced,
        (true, _, true, _) | (_, true, _, true) => EvenCase::Diagonal,
        (true, _, _, true) | (_, true, true, _) => EvenCase::NonDiagonal,
        _ => EvenCase::OneOversized,
    }
}

/// Special sets are small below `t - s` vertices.
pub fn odd_case(lab: &ExtremalLabeling, s: usize, t: usize) -> OddCase {
    let small = |x: &VertexSet| x.len() < t - s;
    match (small(&lab.a0), small(&lab.b0)) {
        (true, true) => OddCase::BothSmall,
        (true, false) => OddCase::ASmallBBig,
        (false, true) => OddCase::ABigBSmall,
        (false, false) => OddCase::BothBig,
    }
}

fn check_common(
    g: &BipartiteGraph,
    lab: &ExtremalLabeling,
    s: usize,
    t: usize,
) -> Result<usize, TileError> {
    if s == 0 || t < s {
        return Err(TileError::Precondition(format!(
            "need 1 <= s <= t, got ({s}, {t})"
        )));
    }
    if !g.is_balanced() || !g.n_a().is_multiple_of(s + t) {
        return Err(TileError::Precondition(
            "need a balanced graph with n divisible by s + t".into(),
        ));
    }
    if !lab.is_partition(g) {
        return Err(TileError::Precondition(
            "labeling does not partition the classes".into(),
        ));
    }
    let k = g.n_a() / (s + t);
    let need = threshold(s, t, k);
    let got = g.min_degree()?;
    if got < need {
        return Err(TileError::Precondition(format!(
            "minimum degree {got} is below {need}"
        )));
    }
    Ok(k)
}

/// Tiles a graph with `k` even from its labeling: every block is brought to
/// `n/2` vertices.
pub fn tile_even(
    g: &BipartiteGraph,
    lab: &ExtremalLabeling,
    s: usize,
    t: usize,
) -> Result<Factor, TileError> {
    let k = check_common(g, lab, s, t)?;
    if k % 2 != 0 {
        return Err(TileError::Precondition(format!("k = {k} is odd")));
    }
    let h = g.n_a() / 2;
    tile_with_targets(g, lab, s, t, h, h)
}

/// Tiles a graph with `k = 2l + 1` odd: the pairs get class sizes
/// `l(s+t) + s` and `l(s+t) + t`, in whichever arrangement needs fewer
/// relocations; the other one is tried if the first fails.
pub fn tile_odd(
    g: &BipartiteGraph,
    lab: &ExtremalLabeling,
    s: usize,
    t: usize,
) -> Result<Factor, TileError> {
    let k = check_common(g, lab, s, t)?;
    if k % 2 == 0 {
        return Err(TileError::Precondition(format!("k = {k} is even")));
    }
    let l = k / 2;
    let (p, q) = (l * (s + t) + s, l * (s + t) + t);
    let mut targets = vec![(p, q)];
    if p != q {
        targets.push((q, p));
    }
    targets.sort_by_key(|&(x1, y2)| relocations(lab, x1, y2));
    let mut last = None;
    for (x1, y2) in targets {
        match tile_with_targets(g, lab, s, t, x1, y2) {
            Ok(f) => return Ok(f),
            Err(e) => last = Some(e),
        }
    }
    Err(last.expect("at least one arrangement"))
}

fn relocations(lab: &ExtremalLabeling, x1: usize, y2: usize) -> usize {
    let n = lab.a1.universe();
    lab.a1.len().saturating_sub(x1)
        + lab.a2.len().saturating_sub(n - x1)
        + lab.b2.len().saturating_sub(y2)
        + lab.b1.len().saturating_sub(n - y2)
}

/// One relocation: centers leave `from`, keep their leaves in `leaf_block`,
/// and take partners from `mates` on their own side.
struct Move<'a> {
    from: &'a VertexSet,
    leaf_block: &'a VertexSet,
    mates: &'a VertexSet,
    count: usize,
    /// Copy lands in the `X1 x Y2` pair.
    first_pair: bool,
}

/// Builds `X1, X2, Y1, Y2` with `|X1| = x1`, `|Y2| = y2`, places the star
/// copies and tiles both pairs.
pub fn tile_with_targets(
    g: &BipartiteGraph,
    lab: &ExtremalLabeling,
    s: usize,
    t: usize,
    x1: usize,
    y2: usize,
) -> Result<Factor, TileError> {
    let n = g.n_a();
    let (x2, y1) = (n - x1, n - y2);
    let moves = [
        Move {
            from: &lab.a2,
            leaf_block: &lab.b2,
            mates: &lab.a1,
            count: lab.a2.len().saturating_sub(x2),
            first_pair: true,
        },
        Move {
            from: &lab.b1,
            leaf_block: &lab.a1,
            mates: &lab.b2,
            count: lab.b1.len().saturating_sub(y1),
            first_pair: true,
        },
        Move {
            from: &lab.a1,
            leaf_block: &lab.b1,
            mates: &lab.a2,
            count: lab.a1.len().saturating_sub(x1),
            first_pair: false,
        },
        Move {
            from: &lab.b2,
            leaf_block: &lab.a2,
            mates: &lab.b1,
            count: lab.b2.len().saturating_sub(y2),
            first_pair: false,
        },
    ];

    // Stars, picked round-robin so no block is starved of leaves.
    let mut avail = Avail::new(g);
    avail.take_set(&lab.a0);
    avail.take_set(&lab.b0);
    let mut stars: Vec<Vec<super::Star>> = vec![Vec::new(); 4];
    loop {
        let mut progressed = false;
        for (i, m) in moves.iter().enumerate() {
            if stars[i].len() < m.count {
                let st = avail
                    .pick(g, m.from, m.leaf_block, s)
                    .ok_or(TileError::NoStars {
                        block: block_name(i),
                        found: stars[i].len(),
                        wanted: m.count,
                    })?;
                stars[i].push(st);
                progressed = true;
            }
        }
        if !progressed {
            break;
        }
    }

    let mut pre = [Vec::new(), Vec::new()];
    let mut moved_a = BitSet::new(n);
    let mut moved_b = BitSet::new(n);
    for (i, m) in moves.iter().enumerate() {
        for st in &stars[i] {
            let side = st.center.side;
            let mut common = m.mates.bits().intersection(avail.side(side));
            for j in st.leaves.iter() {
                common.intersect_with(g.neighbors(VertexRef {
                    side: side.other(),
                    index: j,
                }));
            }
            let partners: Vec<usize> = common.iter().take(t - 1).collect();
            if partners.len() < t - 1 {
                return Err(TileError::Extension {
                    block: block_name(i),
                });
            }
            for &p in &partners {
                avail.take(side, p);
            }
            let mut own = partners;
            own.push(st.center.index);
            own.sort_unstable();
            let leaves = st.leaves.to_vec();
            let copy = match side {
                Side::A => {
                    moved_a.insert(st.center.index);
                    KstCopy::from_oriented(g, Orientation::TsideInA, &own, &leaves)
                }
                Side::B => {
                    moved_b.insert(st.center.index);
                    KstCopy::from_oriented(g, Orientation::TsideInB, &leaves, &own)
                }
            };
            pre[usize::from(!m.first_pair)].push(copy);
        }
    }

    // Regular vertices by final pair, then specials into the remaining room.
    let union = |keep: &VertexSet, incoming: &VertexSet, moved: &BitSet| {
        let mut bits = keep.bits().clone();
        bits.difference_with(moved);
        bits.union_with(&incoming.bits().intersection(moved));
        VertexSet::from_bits(keep.side(), bits)
    };
    let mut sx1 = union(&lab.a1, &lab.a2, &moved_a);
    let mut sx2 = union(&lab.a2, &lab.a1, &moved_a);
    let mut sy2 = union(&lab.b2, &lab.b1, &moved_b);
    let mut sy1 = union(&lab.b1, &lab.b2, &moved_b);
    place_specials(g, &lab.a0, x1, (&mut sx1, &sy2), (&mut sx2, &sy1))?;
    place_specials(g, &lab.b0, y2, (&mut sy2, &sx1), (&mut sy1, &sx2))?;

    let quota = |xa: &VertexSet, yb: &VertexSet| {
        orientation_counts(xa.len(), yb.len(), s, t)
            .map(|(x, _)| x)
            .ok_or_else(|| {
                TileError::Quota(format!(
                    "pair {} x {} has no orientation split",
                    xa.len(),
                    yb.len()
                ))
            })
    };
    let q1 = quota(&sx1, &sy2)?;
    let q2 = quota(&sx2, &sy1)?;
    let [pre1, pre2] = pre;
    let mut copies = tile_dense_pair(g, &sx1, &sy2, s, t, q1, &pre1)?;
    copies.extend(tile_dense_pair(g, &sx2, &sy1, s, t, q2, &pre2)?);
    let f = Factor { copies };
    if !verify_factor(g, s, t, &f) {
        return Err(TileError::Internal(
            "assembled tiling failed verification".into(),
        ));
    }
    Ok(f)
}

fn block_name(i: usize) -> &'static str {
    ["a2", "b1", "a1", "b2"][i]
}

/// Sends specials to the first set until it has `target` members, best
/// connected to `first.1` (relative to `second.1`) first.
fn place_specials(
    g: &BipartiteGraph,
    specials: &VertexSet,
    target: usize,
    first: (&mut VertexSet, &VertexSet),
    second: (&mut VertexSet, &VertexSet),
) -> Result<(), TileError> {
    let room = target
        .checked_sub(first.0.len())
        .filter(|&r| r <= specials.len())
        .ok_or_else(|| {
            TileError::Quota(format!(
                "{} regular vertices and {} specials cannot fill a block of {target}",
                first.0.len(),
                specials.len()
            ))
        })?;
    let mut order: Vec<(i64, usize)> = specials
        .iter()
        .map(|i| {
            let v = VertexRef {
                side: specials.side(),
                index: i,
            };
            let gain =
                g.degree_into(v, first.1.bits()) as i64 - g.degree_into(v, second.1.bits()) as i64;
            (-gain, i)
        })
        .collect();
    order.sort_unstable();
    for (rank, &(_, i)) in order.iter().enumerate() {
        if rank < room {
            first.0.insert(i);
        } else {
            second.0.insert(i);
        }
    }
    Ok(())
}
