//! Completing a tiling inside one near-complete pair.

use super::TileError;
use crate::bigraph::{BipartiteGraph, Side, VertexRef, VertexSet};
use crate::bitset::BitSet;
use crate::extremal::orientation_counts;
use crate::solver::{
    for_each_combination, has_factor, KstCopy, Orientation, SearchBudget, SearchOutcome,
};

/// Remaining vertices, at or below which the exact solver finishes the pair.
const ENDGAME: usize = 24;
const ENDGAME_NODES: u64 = 2_000_000;
/// Neighbor candidates examined per placement attempt.
const WIDTH: usize = 8;

/// Tiles `G[x, y]` around `pre_placed`, with exactly `quota_ts_in_x` copies
/// having their `t`-side in `x`. Returns all copies, `pre_placed` first.
///
/// Vertices are covered in increasing order of their current degree inside
/// the pair, so special vertices are embedded while their neighborhoods are
/// still free. The last few copies are found by exact search.
pub fn tile_dense_pair(
    g: &BipartiteGraph,
    x: &VertexSet,
    y: &VertexSet,
    s: usize,
    t: usize,
    quota_ts_in_x: usize,
    pre_placed: &[KstCopy],
) -> Result<Vec<KstCopy>, TileError> {
    g.check_set(x)?;
    g.check_set(y)?;
    if x.side() == y.side() {
        return Err(TileError::Precondition(
            "pair sets must lie on opposite sides".into(),
        ));
    }
    if s == 0 || t < s {
        return Err(TileError::Precondition(format!(
            "need 1 <= s <= t, got ({s}, {t})"
        )));
    }
    let (pa, pb) = if x.side() == Side::A { (x, y) } else { (y, x) };
    let total = (pa.len() + pb.len()) / (s + t);
    if (pa.len() + pb.len()) % (s + t) != 0 || quota_ts_in_x > total {
        return Err(TileError::Quota(format!(
            "{} + {} vertices cannot hold {quota_ts_in_x} of {total} copies",
            x.len(),
            y.len()
        )));
    }
    let quota_ts_in_a = if x.side() == Side::A {
        quota_ts_in_x
    } else {
        total - quota_ts_in_x
    };
    if s != t {
        let forced = orientation_counts(pa.len(), pb.len(), s, t);
        if forced != Some((quota_ts_in_a, total - quota_ts_in_a)) {
            return Err(TileError::Quota(format!(
                "class sizes {} and {} force orientation counts {forced:?}",
                pa.len(),
                pb.len()
            )));
        }
    }

    let mut st = State {
        g,
        s,
        t,
        free_a: pa.bits().clone(),
        free_b: pb.bits().clone(),
        need: [quota_ts_in_a, total - quota_ts_in_a],
        out: Vec::with_capacity(total),
    };
    for c in pre_placed {
        let (ca, cb) = (c.a_part().bits(), c.b_part().bits());
        let inside = c.a_part().universe() == g.n_a() && c.b_part().universe() == g.n_b();
        if !inside
            || !c.is_valid_in(g, s, t)
            || !ca.is_subset(&st.free_a)
            || !cb.is_subset(&st.free_b)
        {
            return Err(TileError::Precondition(
                "pre-placed copies must be disjoint valid copies inside the pair".into(),
            ));
        }
        let o = label(s, t, c.orientation, &st.need);
        if st.need[o] == 0 {
            return Err(TileError::Quota(
                "pre-placed copies exceed the orientation quota".into(),
            ));
        }
        st.need[o] -= 1;
        st.free_a.difference_with(ca);
        st.free_b.difference_with(cb);
        st.out.push(c.clone());
    }

    while st.free_a.count() + st.free_b.count() > ENDGAME {
        let v = st.hardest().expect("free vertices remain");
        if !st.place_through(v) {
            break;
        }
    }
    st.endgame()?;
    Ok(st.out)
}

/// Quota slot of a copy: its orientation, except that for `s = t` either
/// slot may take it.
fn label(s: usize, t: usize, o: Orientation, need: &[usize; 2]) -> usize {
    let i = match o {
        Orientation::TsideInA => 0,
        Orientation::TsideInB => 1,
    };
    if s == t && need[i] == 0 {
        1 - i
    } else {
        i
    }
}

struct State<'g> {
    g: &'g BipartiteGraph,
    s: usize,
    t: usize,
    free_a: BitSet,
    free_b: BitSet,
    /// Copies still to place with the `t`-side in `A`, resp. `B`.
    need: [usize; 2],
    out: Vec<KstCopy>,
}

impl State<'_> {
    fn free(&self, side: Side) -> &BitSet {
        match side {
            Side::A => &self.free_a,
            Side::B => &self.free_b,
        }
    }

    fn free_degree(&self, v: VertexRef) -> usize {
        self.g.degree_into(v, self.free(v.side.other()))
    }

    /// Free vertex with the fewest free neighbors; `A` before `B`, then index.
    fn hardest(&self) -> Option<VertexRef> {
        [Side::A, Side::B]
            .into_iter()
            .flat_map(|side| {
                self.free(side)
                    .iter()
                    .map(move |i| VertexRef { side, index: i })
            })
            .min_by_key(|&v| (self.free_degree(v), v))
    }

    fn place_through(&mut self, v: VertexRef) -> bool {
        // Slot 0 puts the t-side in A. For v in A that makes v a t-side vertex.
        let own_t = |slot: usize| (slot == 0) == (v.side == Side::A);
        let mut slots: Vec<usize> = (0..2).filter(|&i| self.need[i] > 0).collect();
        slots.sort_by_key(|&i| (std::cmp::Reverse(self.need[i]), !own_t(i)));
        for slot in slots {
            let (own, other) = if own_t(slot) {
                (self.t, self.s)
            } else {
                (self.s, self.t)
            };
            if let Some((mine, theirs)) = self.copy_through(v, own, other) {
                let (a, b) = if v.side == Side::A {
                    (mine, theirs)
                } else {
                    (theirs, mine)
                };
                self.commit(slot, &a, &b);
                return true;
            }
        }
        false
    }

    /// A copy with `own` vertices on `v`'s side (including `v`) and `other`
    /// on the opposite side. Opposite partners are taken from the free
    /// neighbors of highest free degree, own partners from the common
    /// neighborhood with lowest free degree.
    fn copy_through(
        &self,
        v: VertexRef,
        own: usize,
        other: usize,
    ) -> Option<(Vec<usize>, Vec<usize>)> {
        let opp = v.side.other();
        let mut cands: Vec<(usize, usize)> = self
            .g
            .neighbors(v)
            .intersection(self.free(opp))
            .iter()
            .map(|j| {
                (
                    self.free_degree(VertexRef {
                        side: opp,
                        index: j,
                    }),
                    j,
                )
            })
            .collect();
        if cands.len() < other {
            return None;
        }
        cands.sort_by_key(|&(d, j)| (std::cmp::Reverse(d), j));
        cands.truncate((other + WIDTH).min(cands.len()));
        let pool: Vec<usize> = cands.iter().map(|&(_, j)| j).collect();
        let mut found = None;
        for_each_combination(&pool, other, &mut |pick: &[usize]| {
            let mut common = self.free(v.side).clone();
            common.remove(v.index);
            for &j in pick {
                common.intersect_with(self.g.neighbors(VertexRef {
                    side: opp,
                    index: j,
                }));
            }
            if common.count() + 1 < own {
                return true;
            }
            let mut mates: Vec<(usize, usize)> = common
                .iter()
                .map(|i| {
                    (
                        self.free_degree(VertexRef {
                            side: v.side,
                            index: i,
                        }),
                        i,
                    )
                })
                .collect();
            mates.sort_unstable();
            let mut mine: Vec<usize> = mates[..own - 1].iter().map(|&(_, i)| i).collect();
            mine.push(v.index);
            mine.sort_unstable();
            let mut theirs = pick.to_vec();
            theirs.sort_unstable();
            found = Some((mine, theirs));
            false
        });
        found
    }

    fn commit(&mut self, slot: usize, a: &[usize], b: &[usize]) {
        let o = if slot == 0 {
            Orientation::TsideInA
        } else {
            Orientation::TsideInB
        };
        for &i in a {
            self.free_a.remove(i);
        }
        for &j in b {
            self.free_b.remove(j);
        }
        self.need[slot] -= 1;
        self.out.push(KstCopy::from_oriented(self.g, o, a, b));
    }

    /// Exact search on whatever is left.
    fn endgame(&mut self) -> Result<(), TileError> {
        let left = self.free_a.count() + self.free_b.count();
        if left == 0 {
            return Ok(());
        }
        if left > ENDGAME {
            return Err(TileError::Stuck { remaining: left });
        }
        let xa = VertexSet::from_bits(Side::A, self.free_a.clone());
        let xb = VertexSet::from_bits(Side::B, self.free_b.clone());
        let sub = self.g.induced(&xa, &xb)?;
        let SearchOutcome::Found(f) = has_factor(
            &sub.graph,
            self.s,
            self.t,
            SearchBudget::nodes(ENDGAME_NODES),
        ) else {
            return Err(TileError::Stuck { remaining: left });
        };
        for c in &f.copies {
            let a: Vec<usize> = c.a_part().iter().map(|i| sub.a_map[i]).collect();
            let b: Vec<usize> = c.b_part().iter().map(|j| sub.b_map[j]).collect();
            let slot = label(self.s, self.t, c.orientation, &self.need);
            if self.need[slot] == 0 {
                return Err(TileError::Quota(
                    "remaining vertices force a different split".into(),
                ));
            }
            self.commit(slot, &a, &b);
        }
        Ok(())
    }
}
