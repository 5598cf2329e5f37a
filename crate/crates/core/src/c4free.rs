//! C4-free regular bipartite gadgets.
//!
//! `P(m, p)` is realized as a circulant: vertex `i` of the first class is
//! joined to `i + d (mod m)` in the second class for every `d` in a Sidon set
//! of size `p` modulo `m`. Distinct differences mean two vertices on one side
//! share at most one neighbor, so the graph has no `K_{2,2}`. `Q(m, q)` and
//! `R(m, q)` delete two (resp. one) vertices of the second class.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bigraph::{BipartiteGraph, GraphBuilder};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error(
        "no Sidon set of size {size} modulo {modulus}: need modulus >= size^2 - size + 1 = {bound}"
    )]
    BelowCountingBound {
        size: usize,
        modulus: usize,
        bound: usize,
    },
    #[error(
        "greedy Sidon search stopped at {found} of {size} elements modulo {modulus} \
         (modulus >= size^2 + size + 1 = {bound} is always enough)"
    )]
    GreedyExhausted {
        size: usize,
        modulus: usize,
        found: usize,
        bound: usize,
    },
    #[error("{kind:?}({m}, {deg}) needs m >= {min_m}")]
    TooSmall {
        kind: GadgetKind,
        m: usize,
        deg: usize,
        min_m: usize,
    },
    #[error("P({m}, {q}) has no two second-class vertices with disjoint neighborhoods")]
    NoDisjointPair { m: usize, q: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GadgetKind {
    P,
    Q,
    R,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GadgetSpec {
    pub kind: GadgetKind,
    pub m: usize,
    pub deg: usize,
}

impl GadgetSpec {
    pub fn build(&self) -> Result<BipartiteGraph, GadgetError> {
        match self.kind {
            GadgetKind::P => build_p(self.m, self.deg),
            GadgetKind::Q => build_q(self.m, self.deg),
            GadgetKind::R => build_r(self.m, self.deg),
        }
    }
}

/// Greedy Sidon set: scans `0..modulus` and keeps each element whose
/// differences with the kept ones are all new.
pub fn sidon_set(size: usize, modulus: usize) -> Result<Vec<usize>, GadgetError> {
    if modulus == 0 {
        return Err(GadgetError::ZeroModulus);
    }
    if size == 0 {
        return Ok(Vec::new());
    }
    // size(size-1) nonzero differences must be distinct residues.
    let counting = size * size - size + 1;
    if modulus < counting {
        return Err(GadgetError::BelowCountingBound {
            size,
            modulus,
            bound: counting,
        });
    }
    let mut set = Vec::with_capacity(size);
    let mut used = vec![false; modulus];
    let mut fresh = Vec::with_capacity(2 * size);
    for c in 0..modulus {
        fresh.clear();
        let mut ok = true;
        for &d in &set {
            let fwd = (c + modulus - d) % modulus;
            let back = (d + modulus - c) % modulus;
            if used[fwd]
                || used[back]
                || fresh.contains(&fwd)
                || fresh.contains(&back)
                || fwd == back
            {
                ok = false;
                break;
            }
            fresh.push(fwd);
            fresh.push(back);
        }
        if !ok {
            continue;
        }
        for &x in &fresh {
            used[x] = true;
        }
        set.push(c);
        if set.len() == size {
            return Ok(set);
        }
    }
    Err(GadgetError::GreedyExhausted {
        size,
        modulus,
        found: set.len(),
        bound: size * size + size + 1,
    })
}

/// `p`-regular `K_{2,2}`-free bipartite graph on `m + m` vertices.
pub fn build_p(m: usize, p: usize) -> Result<BipartiteGraph, GadgetError> {
    let shifts = sidon_set(p, m)?;
    let mut b = GraphBuilder::new(m, m);
    for i in 0..m {
        for &d in &shifts {
            b.add_edge_unchecked(i, (i + d) % m);
        }
    }
    Ok(b.build())
}

/// `P(m, q)` minus the two lexicographically smallest second-class vertices
/// with disjoint neighborhoods. Classes have sizes `m` and `m - 2`.
pub fn build_q(m: usize, q: usize) -> Result<BipartiteGraph, GadgetError> {
    if m < 2 {
        return Err(GadgetError::TooSmall {
            kind: GadgetKind::Q,
            m,
            deg: q,
            min_m: 2,
        });
    }
    let p = build_p(m, q)?;
    let cols: Vec<_> = (0..m)
        .map(|j| p.neighbors(crate::bigraph::VertexRef::b(j)).clone())
        .collect();
    let pair = (0..m)
        .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
        .find(|&(i, j)| cols[i].is_disjoint(&cols[j]))
        .ok_or(GadgetError::NoDisjointPair { m, q })?;
    Ok(delete_b(&p, &[pair.0, pair.1]))
}

/// `P(m, q)` minus second-class vertex 0. Classes have sizes `m` and `m - 1`.
pub fn build_r(m: usize, q: usize) -> Result<BipartiteGraph, GadgetError> {
    if m < 1 {
        return Err(GadgetError::TooSmall {
            kind: GadgetKind::R,
            m,
            deg: q,
            min_m: 1,
        });
    }
    let p = build_p(m, q)?;
    Ok(delete_b(&p, &[0]))
}

fn delete_b(g: &BipartiteGraph, drop: &[usize]) -> BipartiteGraph {
    let keep: Vec<usize> = (0..g.n_b()).filter(|j| !drop.contains(j)).collect();
    let mut b = GraphBuilder::new(g.n_a(), keep.len());
    for (new, &old) in keep.iter().enumerate() {
        for a in g.neighbors(crate::bigraph::VertexRef::b(old)).iter() {
            b.add_edge_unchecked(a, new);
        }
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigraph::{Side, VertexRef};

    fn is_sidon(set: &[usize], m: usize) -> bool {
        let mut seen = std::collections::HashSet::new();
        for &x in set {
            for &y in set {
                if x != y && !seen.insert((x + m - y) % m) {
                    return false;
                }
            }
        }
        true
    }

    fn degrees(g: &BipartiteGraph, side: Side) -> Vec<usize> {
        (0..g.class_size(side))
            .map(|i| g.degree(VertexRef { side, index: i }).unwrap())
            .collect()
    }

    #[test]
    fn sidon_examples() {
        assert_eq!(sidon_set(3, 7).unwrap(), vec![0, 1, 3]);
        assert!(is_sidon(&[0, 1, 3], 7));
        assert_eq!(sidon_set(1, 5).unwrap(), vec![0]);
        assert_eq!(sidon_set(0, 4).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn sidon_infeasible() {
        assert!(matches!(
            sidon_set(3, 6),
            Err(GadgetError::BelowCountingBound { bound: 7, .. })
        ));
        assert_eq!(sidon_set(2, 0), Err(GadgetError::ZeroModulus));
        // Even modulus: the difference m/2 is its own negative.
        let s = sidon_set(2, 4).unwrap();
        assert!(is_sidon(&s, 4), "{s:?}");
    }

    #[test]
    fn sidon_sets_valid_over_range() {
        for size in 0..=6 {
            for m in (size * size + size + 1).max(1)..60 {
                let s = sidon_set(size, m).unwrap();
                assert_eq!(s.len(), size);
                assert!(is_sidon(&s, m), "size {size} mod {m}: {s:?}");
            }
        }
    }

    #[test]
    fn p_examples() {
        let p73 = build_p(7, 3).unwrap();
        assert_eq!(p73.edge_count(), 21);
        assert!(degrees(&p73, Side::A).iter().all(|&d| d == 3));
        assert!(degrees(&p73, Side::B).iter().all(|&d| d == 3));
        assert!(p73.is_k22_free());
        let p50 = build_p(5, 0).unwrap();
        assert_eq!((p50.n_a(), p50.n_b(), p50.edge_count()), (5, 5, 0));
        let p41 = build_p(4, 1).unwrap();
        assert_eq!(
            p41.edges().collect::<Vec<_>>(),
            (0..4).map(|i| (i, i)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn p_pairs_share_at_most_one_neighbor() {
        let g = build_p(7, 3).unwrap();
        for side in [Side::A, Side::B] {
            for i in 0..7 {
                for j in i + 1..7 {
                    let c = g
                        .common_neighbors(
                            VertexRef { side, index: i },
                            VertexRef { side, index: j },
                        )
                        .unwrap();
                    assert!(c.len() <= 1);
                }
            }
        }
    }

    #[test]
    fn q_examples() {
        let q40 = build_q(4, 0).unwrap();
        assert_eq!((q40.n_a(), q40.n_b(), q40.edge_count()), (4, 2, 0));

        let q72 = build_q(7, 2).unwrap();
        assert_eq!(q72.n_b(), 5);
        assert!(degrees(&q72, Side::A).iter().all(|d| (1..=2).contains(d)));
        assert!(degrees(&q72, Side::B).iter().all(|&d| d == 2));
        assert_eq!(
            degrees(&q72, Side::A).iter().filter(|&&d| d == 1).count(),
            4
        );
        assert!(q72.is_k22_free());

        let q91 = build_q(9, 1).unwrap();
        let da = degrees(&q91, Side::A);
        assert_eq!(da.iter().filter(|&&d| d == 0).count(), 2);
        assert_eq!(da.iter().filter(|&&d| d == 1).count(), 7);
        assert!(build_q(1, 0).is_err());
    }

    #[test]
    fn r_examples() {
        let r50 = build_r(5, 0).unwrap();
        assert_eq!((r50.n_a(), r50.n_b(), r50.edge_count()), (5, 4, 0));

        let r72 = build_r(7, 2).unwrap();
        let da = degrees(&r72, Side::A);
        assert_eq!(da.iter().filter(|&&d| d == 1).count(), 2);
        assert_eq!(da.iter().filter(|&&d| d == 2).count(), 5);
        assert!(degrees(&r72, Side::B).iter().all(|&d| d == 2));

        let r41 = build_r(4, 1).unwrap();
        assert_eq!(r41.edge_count(), 3);
        assert_eq!(degrees(&r41, Side::A), vec![0, 1, 1, 1]);
    }

    #[test]
    fn spec_dispatch() {
        let g = GadgetSpec {
            kind: GadgetKind::Q,
            m: 7,
            deg: 2,
        }
        .build()
        .unwrap();
        assert_eq!(g, build_q(7, 2).unwrap());
    }
}
