//! Seeded instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bigraph::{BipartiteGraph, GraphBuilder, Side, VertexRef, VertexSet};
use crate::extremal::threshold;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenerateError {
    #[error("density must lie in [0, 1], got {0}")]
    Density(f64),
    #[error("minimum degree floor {floor} exceeds class size {n}")]
    Floor { floor: usize, n: usize },
    #[error("block sizes {got:?} do not sum to n = {n} on side {side:?}")]
    Sizes {
        side: Side,
        n: usize,
        got: [usize; 3],
    },
    #[error("cannot raise vertex {0:?} to the target degree inside its sparse block")]
    Saturated(VertexRef),
    #[error("need 1 <= s <= t and k >= 1")]
    Shape,
}

/// `n + n` graph with independent edges of probability `density`, then
/// edges from the lowest-degree vertex to a uniformly chosen non-neighbor
/// until every degree reaches `floor`.
pub fn random_graph(
    n: usize,
    density: f64,
    floor: usize,
    seed: u64,
) -> Result<BipartiteGraph, GenerateError> {
    if !(0.0..=1.0).contains(&density) {
        return Err(GenerateError::Density(density));
    }
    if floor > n {
        return Err(GenerateError::Floor { floor, n });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = GraphBuilder::new(n, n);
    for a in 0..n {
        for j in 0..n {
            if rng.gen_bool(density) {
                b.add_edge_unchecked(a, j);
            }
        }
    }
    let mut deg = [vec![0usize; n], vec![0usize; n]];
    for a in 0..n {
        for j in 0..n {
            if b.has_edge(a, j) {
                deg[0][a] += 1;
                deg[1][j] += 1;
            }
        }
    }
    loop {
        let low = (0..2)
            .flat_map(|s| (0..n).map(move |i| (s, i)))
            .filter(|&(s, i)| deg[s][i] < floor)
            .min_by_key(|&(s, i)| (deg[s][i], s, i));
        let Some((side, v)) = low else { break };
        let non: Vec<usize> = (0..n)
            .filter(|&u| {
                if side == 0 {
                    !b.has_edge(v, u)
                } else {
                    !b.has_edge(u, v)
                }
            })
            .collect();
        let u = non[rng.gen_range(0..non.len())];
        let (a, j) = if side == 0 { (v, u) } else { (u, v) };
        b.add_edge_unchecked(a, j);
        deg[0][a] += 1;
        deg[1][j] += 1;
    }
    Ok(b.build())
}

/// Near-extremal graph with known structure: `A1 x B2` and `A2 x B1`
/// complete apart from `holes` removed edges each, special vertices joined
/// to a third of `B1` and the rest of their degree in `B2` (resp. `A1`, `A2`), and sparse
/// `G[A1, B1]`, `G[A2, B2]` edges added until the minimum degree reaches
/// the threshold. Vertex labels are shuffled by `seed`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalInstance {
    pub s: usize,
    pub t: usize,
    pub k: usize,
    /// `[|A1|, |A2|, |A0|]`.
    pub a: [usize; 3],
    /// `[|B1|, |B2|, |B0|]`.
    pub b: [usize; 3],
    pub holes: usize,
    pub seed: u64,
}

/// The generated graph with its planted blocks.
#[derive(Debug, Clone)]
pub struct Planted {
    pub graph: BipartiteGraph,
    /// `[A1, A2, A0]` and `[B1, B2, B0]`.
    pub a: [VertexSet; 3],
    pub b: [VertexSet; 3],
}

impl ExtremalInstance {
    /// Balanced blocks: `n/2` each for even `k`; for `k = 2l + 1` the pairs
    /// get sizes `|A1| = |B1| = l(s+t) + s` and `|A2| = |B2| = l(s+t) + t`.
    pub fn balanced(s: usize, t: usize, k: usize, seed: u64) -> Self {
        let n = k * (s + t);
        let (x, y) = if k.is_multiple_of(2) {
            (n / 2, n / 2)
        } else {
            let l = k / 2;
            (l * (s + t) + s, l * (s + t) + t)
        };
        ExtremalInstance {
            s,
            t,
            k,
            a: [x, y, 0],
            b: [x, y, 0],
            holes: 0,
            seed,
        }
    }

    pub fn n(&self) -> usize {
        self.k * (self.s + self.t)
    }

    pub fn build(&self) -> Result<Planted, GenerateError> {
        let (s, t, k) = (self.s, self.t, self.k);
        if s == 0 || t < s || k == 0 {
            return Err(GenerateError::Shape);
        }
        let n = self.n();
        for (side, sz) in [(Side::A, self.a), (Side::B, self.b)] {
            if sz.iter().sum::<usize>() != n {
                return Err(GenerateError::Sizes { side, n, got: sz });
            }
        }
        let need = threshold(s, t, k);
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let mut perm_a: Vec<usize> = (0..n).collect();
        let mut perm_b: Vec<usize> = (0..n).collect();
        perm_a.shuffle(&mut rng);
        perm_b.shuffle(&mut rng);
        let blocks = |perm: &[usize], sz: [usize; 3]| -> [Vec<usize>; 3] {
            let (x, rest) = perm.split_at(sz[0]);
            let (y, z) = rest.split_at(sz[1]);
            [x.to_vec(), y.to_vec(), z.to_vec()]
        };
        let ab = blocks(&perm_a, self.a);
        let bb = blocks(&perm_b, self.b);

        let mut g = GraphBuilder::new(n, n);
        // Dense pairs.
        for (xs, ys) in [(&ab[0], &bb[1]), (&ab[1], &bb[0])] {
            g.join(xs.iter().copied(), ys);
            let m = self.holes.min(xs.len()).min(ys.len());
            let mut xs = xs.clone();
            let mut ys = ys.clone();
            xs.shuffle(&mut rng);
            ys.shuffle(&mut rng);
            for i in 0..m {
                g.remove_edge(xs[i], ys[i]);
            }
        }
        // Specials: a third of the target degree into the base-side block
        // (B1 for A0, A1 for B0), the rest into the other one. A third of
        // n/2 sits well inside the band between the low and high cuts.
        let third = need.div_ceil(3);
        let shares = [third, need - third];
        for &a in &ab[2] {
            for (blk, want) in [&bb[0], &bb[1]].into_iter().zip(shares) {
                for &j in blk.choose_multiple(&mut rng, want.min(blk.len())) {
                    g.add_edge_unchecked(a, j);
                }
            }
        }
        for &j in &bb[2] {
            for (blk, want) in [&ab[0], &ab[1]].into_iter().zip(shares) {
                for &a in blk.choose_multiple(&mut rng, want.min(blk.len())) {
                    g.add_edge_unchecked(a, j);
                }
            }
        }

        // Lift degrees with sparse-block edges, never touching the dense pairs.
        let mut block_of = [vec![0usize; n], vec![0usize; n]];
        for (i, blk) in ab.iter().enumerate() {
            for &v in blk {
                block_of[0][v] = i;
            }
        }
        for (i, blk) in bb.iter().enumerate() {
            for &v in blk {
                block_of[1][v] = i;
            }
        }
        let graph = lift(g, need, &block_of)?;
        let set = |side, v: &Vec<usize>| VertexSet::from_indices(side, n, v.iter().copied());
        Ok(Planted {
            a: [
                set(Side::A, &ab[0]),
                set(Side::A, &ab[1]),
                set(Side::A, &ab[2]),
            ],
            b: [
                set(Side::B, &bb[0]),
                set(Side::B, &bb[1]),
                set(Side::B, &bb[2]),
            ],
            graph,
        })
    }
}

/// Raises every degree to `need`, each time joining the lowest-degree
/// deficient vertex to the lowest-degree admissible non-neighbor: a vertex
/// of block `i` on the other side for regular blocks `i`, anything for
/// specials.
fn lift(
    mut g: GraphBuilder,
    need: usize,
    block_of: &[Vec<usize>; 2],
) -> Result<BipartiteGraph, GenerateError> {
    let n = g.n_a();
    let mut deg = [vec![0usize; n], vec![0usize; n]];
    for a in 0..n {
        for j in 0..n {
            if g.has_edge(a, j) {
                deg[0][a] += 1;
                deg[1][j] += 1;
            }
        }
    }
    let admissible = |mine: usize, theirs: usize| mine == 2 || theirs == 2 || mine == theirs;
    loop {
        let low = (0..2)
            .flat_map(|s| (0..n).map(move |i| (s, i)))
            .filter(|&(s, i)| deg[s][i] < need)
            .min_by_key(|&(s, i)| (deg[s][i], s, i));
        let Some((side, v)) = low else { break };
        let other = 1 - side;
        let pick = (0..n)
            .filter(|&u| {
                let edge = if side == 0 {
                    g.has_edge(v, u)
                } else {
                    g.has_edge(u, v)
                };
                !edge && admissible(block_of[side][v], block_of[other][u])
            })
            .min_by_key(|&u| (deg[other][u], u));
        let Some(u) = pick else {
            let side = if side == 0 { Side::A } else { Side::B };
            return Err(GenerateError::Saturated(VertexRef { side, index: v }));
        };
        let (a, j) = if side == 0 { (v, u) } else { (u, v) };
        g.add_edge_unchecked(a, j);
        deg[0][a] += 1;
        deg[1][j] += 1;
    }
    Ok(g.build())
}
