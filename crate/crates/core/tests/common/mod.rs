//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's search, verification or certificate code.
#![allow(dead_code)]

use std::collections::HashSet;

use bitile::{BipartiteGraph, Factor};

/// Adjacency as bitmasks: `rows[a]` has bit `b` set for each edge `(a, b)`.
pub fn rows(g: &BipartiteGraph) -> Vec<u64> {
    assert!(g.n_b() <= 64);
    let mut r = vec![0u64; g.n_a()];
    for (a, b) in g.edges() {
        r[a] |= 1 << b;
    }
    r
}

pub fn degrees(g: &BipartiteGraph) -> (Vec<usize>, Vec<usize>) {
    let mut da = vec![0; g.n_a()];
    let mut db = vec![0; g.n_b()];
    for (a, b) in g.edges() {
        da[a] += 1;
        db[b] += 1;
    }
    (da, db)
}

/// Two first-class vertices with two common neighbors.
pub fn has_k22(g: &BipartiteGraph) -> bool {
    let r = rows(g);
    (0..r.len()).any(|i| (i + 1..r.len()).any(|j| (r[i] & r[j]).count_ones() >= 2))
}

/// Checks a factor against `g` straight from the edge list.
pub fn check_factor(g: &BipartiteGraph, s: usize, t: usize, f: &Factor) -> Result<(), String> {
    let edges: HashSet<(usize, usize)> = g.edges().collect();
    let (mut used_a, mut used_b) = (vec![false; g.n_a()], vec![false; g.n_b()]);
    for (i, c) in f.copies.iter().enumerate() {
        let a: Vec<usize> = c.a_part().iter().collect();
        let b: Vec<usize> = c.b_part().iter().collect();
        let sizes = (a.len(), b.len());
        if sizes != (s, t) && sizes != (t, s) {
            return Err(format!("copy {i} has parts {sizes:?}"));
        }
        if let Some(e) = a
            .iter()
            .flat_map(|&x| b.iter().map(move |&y| (x, y)))
            .find(|e| !edges.contains(e))
        {
            return Err(format!("copy {i} misses edge {e:?}"));
        }
        for (used, part, tag) in [(&mut used_a, &a, 'a'), (&mut used_b, &b, 'b')] {
            for &v in part {
                if std::mem::replace(&mut used[v], true) {
                    return Err(format!("{tag}{v} covered twice"));
                }
            }
        }
    }
    if used_a.iter().chain(&used_b).any(|&u| !u) {
        return Err("not every vertex is covered".into());
    }
    Ok(())
}

/// Plain exhaustive search: cover the lowest uncovered vertex with every
/// copy through it, recurse. Exponential; meant for small graphs only.
pub fn exact_has_factor(g: &BipartiteGraph, s: usize, t: usize) -> bool {
    let (na, nb) = (g.n_a(), g.n_b());
    if (na + nb) % (s + t) != 0 {
        return false;
    }
    let r = rows(g);
    let mut cols = vec![0u64; nb];
    for (a, b) in g.edges() {
        cols[b] |= 1 << a;
    }
    let full = |n: usize| if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    go(&r, &cols, full(na), full(nb), s, t)
}

fn subsets_of(mask: u64, k: usize, out: &mut Vec<u64>) {
    fn rec(mask: u64, k: usize, acc: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        if (mask.count_ones() as usize) < k {
            return;
        }
        let low = mask & mask.wrapping_neg();
        rec(mask & !low, k - 1, acc | low, out);
        rec(mask & !low, k, acc, out);
    }
    rec(mask, k, 0, out);
}

fn common(adj: &[u64], set: u64, within: u64) -> u64 {
    let mut m = within;
    let mut x = set;
    while x != 0 {
        let i = x.trailing_zeros() as usize;
        m &= adj[i];
        x &= x - 1;
    }
    m
}

fn go(r: &[u64], c: &[u64], free_a: u64, free_b: u64, s: usize, t: usize) -> bool {
    if free_a == 0 && free_b == 0 {
        return true;
    }
    // Branch on a vertex of A when one is left, else on B.
    let (own, adj, other, adj_other, on_a) = if free_a != 0 {
        (free_a, r, free_b, c, true)
    } else {
        (free_b, c, free_a, r, false)
    };
    let v = own.trailing_zeros() as usize;
    let sizes: &[(usize, usize)] = if s == t { &[(s, t)] } else { &[(s, t), (t, s)] };
    for &(mine, theirs) in sizes {
        let mut firsts = Vec::new();
        subsets_of(adj[v] & other, theirs, &mut firsts);
        for far in firsts {
            let mates = common(adj_other, far, own & !(1 << v));
            let mut rest = Vec::new();
            subsets_of(mates, mine - 1, &mut rest);
            for near in rest {
                let near = near | 1 << v;
                let ok = if on_a {
                    go(r, c, free_a & !near, free_b & !far, s, t)
                } else {
                    go(r, c, free_a & !far, free_b & !near, s, t)
                };
                if ok {
                    return true;
                }
            }
        }
    }
    false
}
