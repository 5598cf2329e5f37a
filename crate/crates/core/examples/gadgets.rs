//! Sidon sets and the C4-free gadgets built from them.
//!
//! Run with `cargo run --example gadgets`.

use bitile::c4free::{build_p, build_q, build_r, sidon_set};
use bitile::{BipartiteGraph, VertexRef};

fn degree_profile(g: &BipartiteGraph) -> (Vec<usize>, Vec<usize>) {
    let a = (0..g.n_a())
        .map(|i| g.degree(VertexRef::a(i)).unwrap())
        .collect();
    let b = (0..g.n_b())
        .map(|j| g.degree(VertexRef::b(j)).unwrap())
        .collect();
    (a, b)
}

fn main() {
    for (p, m) in [(2, 7), (3, 13), (4, 21), (4, 40)] {
        println!(
            "Sidon set of size {p} mod {m}: {:?}",
            sidon_set(p, m).unwrap()
        );
    }

    let p = build_p(13, 3).unwrap();
    println!(
        "\nP(13, 3): {} edges, K_2,2-free: {}",
        p.edge_count(),
        p.is_k22_free()
    );

    for (name, g) in [
        ("Q(13, 3)", build_q(13, 3).unwrap()),
        ("R(13, 3)", build_r(13, 3).unwrap()),
    ] {
        let (a, b) = degree_profile(&g);
        println!("{name}: classes {} + {}", g.n_a(), g.n_b());
        println!("  first-class degrees  {a:?}");
        println!("  second-class degrees {b:?}");
    }

    // Below the counting bound no Sidon set exists.
    println!("\n{}", sidon_set(4, 12).unwrap_err());
}
