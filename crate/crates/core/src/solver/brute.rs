//! Exhaustive oracle for tiny graphs.
//!
//! Lists every `K_{s,t}` copy by scanning all vertex subsets with
//! `has_edge`, then runs an exact-cover recursion over vertex masks with a
//! table of dead masks. It shares no code with the main search.

use super::{Factor, KstCopy, SearchOutcome, SolverError};
use crate::bigraph::BipartiteGraph;

/// Maximum `n_a + n_b` accepted by [`brute_force_has_factor`].
pub const BRUTE_FORCE_CAP: usize = 24;

/// Exhaustive factor decision. Errors above [`BRUTE_FORCE_CAP`] vertices.
pub fn brute_force_has_factor(
    g: &BipartiteGraph,
    s: usize,
    t: usize,
) -> Result<SearchOutcome, SolverError> {
    let (na, nb) = (g.n_a(), g.n_b());
    let total = na + nb;
    if total > BRUTE_FORCE_CAP {
        return Err(SolverError::TooLarge {
            cap: BRUTE_FORCE_CAP,
            got: total,
        });
    }
    if s == 0 || t < s {
        return Err(SolverError::BadShape { s, t });
    }
    if total == 0 {
        return Ok(SearchOutcome::Found(Factor::default()));
    }

    // Vertex a is bit a, vertex b is bit na + b.
    let mut copies: Vec<(u32, Vec<usize>, Vec<usize>)> = Vec::new();
    let sizes: Vec<(usize, usize)> = if s == t {
        vec![(s, s)]
    } else {
        vec![(s, t), (t, s)]
    };
    for amask in 1u32..(1u32 << na) {
        let ca = amask.count_ones() as usize;
        let Some(&(_, cb)) = sizes.iter().find(|(x, _)| *x == ca) else {
            continue;
        };
        let a_part: Vec<usize> = (0..na).filter(|i| amask >> i & 1 == 1).collect();
        let common: Vec<usize> = (0..nb)
            .filter(|&b| a_part.iter().all(|&a| g.has_edge(a, b)))
            .collect();
        for bsel in subsets_of_size(common.len(), cb) {
            let b_part: Vec<usize> = (0..common.len())
                .filter(|i| bsel >> i & 1 == 1)
                .map(|i| common[i])
                .collect();
            let mask = b_part.iter().fold(amask, |m, &b| m | 1 << (na + b));
            copies.push((mask, a_part.clone(), b_part));
        }
    }

    let mut by_low: Vec<Vec<usize>> = vec![Vec::new(); total];
    for (i, (mask, _, _)) in copies.iter().enumerate() {
        by_low[mask.trailing_zeros() as usize].push(i);
    }

    let full: u32 = if total == 32 { !0 } else { (1u32 << total) - 1 };
    let mut dead = vec![0u64; (1usize << total).div_ceil(64)];
    let mut chosen = Vec::new();
    if cover(0, full, &copies, &by_low, &mut dead, &mut chosen) {
        let f = Factor {
            copies: chosen
                .iter()
                .map(|&i| {
                    let (_, a, b) = &copies[i];
                    KstCopy::from_parts(g, a, b)
                })
                .collect(),
        };
        Ok(SearchOutcome::Found(f))
    } else {
        Ok(SearchOutcome::NoFactor)
    }
}

fn cover(
    covered: u32,
    full: u32,
    copies: &[(u32, Vec<usize>, Vec<usize>)],
    by_low: &[Vec<usize>],
    dead: &mut [u64],
    chosen: &mut Vec<usize>,
) -> bool {
    if covered == full {
        return true;
    }
    let key = covered as usize;
    if dead[key / 64] >> (key % 64) & 1 == 1 {
        return false;
    }
    // The lowest uncovered vertex must be the lowest vertex of its copy.
    let v = (!covered).trailing_zeros() as usize;
    for &ci in &by_low[v] {
        let m = copies[ci].0;
        if m & covered != 0 {
            continue;
        }
        chosen.push(ci);
        if cover(covered | m, full, copies, by_low, dead, chosen) {
            return true;
        }
        chosen.pop();
    }
    dead[key / 64] |= 1 << (key % 64);
    false
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u32> {
    (0u32..(1u32 << n)).filter(move |m| m.count_ones() as usize == k)
}
