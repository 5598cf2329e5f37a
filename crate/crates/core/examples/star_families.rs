//! Disjoint stars in a sparse bipartite graph.
//!
//! Run with `cargo run --example star_families`.

use bitile::c4free::build_p;
use bitile::tiler::{find_stars, star_bounds};
use bitile::{Side, VertexSet};

fn main() {
    // 3-regular on 120 + 120: sparse enough for stars with two leaves.
    let g = build_p(120, 3).unwrap();
    let (u1, u2) = (VertexSet::full(Side::A, 120), VertexSet::full(Side::B, 120));
    for h in 1..=3 {
        match star_bounds(h, &u1, &u2, &g) {
            Ok(b) => {
                let (s1, s2) = find_stars(h, &u1, &u2, &g).unwrap();
                println!(
                    "h = {h}: δ = {}, Δ = {}, c = {} at M = {}, wanted {} per side, found {} + {}",
                    b.delta,
                    b.max_back,
                    b.c,
                    b.m_doubled as f64 / 2.0,
                    b.per_side,
                    s1.len(),
                    s2.len()
                );
                let st = &s1[0];
                println!("  first star: {:?} -> {:?}", st.center, st.leaves.to_vec());
            }
            Err(e) => println!("h = {h}: {e}"),
        }
    }
}
