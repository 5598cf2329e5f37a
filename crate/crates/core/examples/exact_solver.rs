//! Exact factor search on small graphs, cross-checked against brute force.
//!
//! Run with `cargo run --release --example exact_solver`.

use bitile::cli::random_graph;
use bitile::solver::{brute_force_has_factor, has_factor_with_stats, verify_factor};
use bitile::{threshold, BipartiteGraph, SearchBudget, SearchOutcome};

fn main() {
    let g = BipartiteGraph::complete(6, 6);
    let (out, stats) = has_factor_with_stats(&g, 1, 2, SearchBudget::unlimited());
    if let SearchOutcome::Found(f) = &out {
        println!(
            "K_6,6 into K_1,2: {} copies after {} nodes",
            f.len(),
            stats.nodes
        );
        for c in &f.copies {
            println!("  A{:?} B{:?}", c.a_part().to_vec(), c.b_part().to_vec());
        }
    }

    let (s, t) = (2, 3);
    let mut agree = 0;
    for seed in 0..40 {
        let g = random_graph(10, 0.6, 0, seed).unwrap();
        let (fast, stats) = has_factor_with_stats(&g, s, t, SearchBudget::nodes(1_000_000));
        let slow = brute_force_has_factor(&g, s, t).unwrap();
        assert_eq!(fast.label(), slow.label(), "seed {seed}");
        if let Some(f) = fast.factor() {
            assert!(verify_factor(&g, s, t, f));
        }
        agree += 1;
        if seed < 5 {
            println!(
                "seed {seed}: {} ({} nodes, {} memo hits)",
                fast.label(),
                stats.nodes,
                stats.memo_hits
            );
        }
    }
    println!("{agree} random 10 + 10 graphs: search and brute force agree");

    let floor = threshold(s, t, 4);
    let g = random_graph(20, 0.3, floor, 1).unwrap();
    let (out, stats) = has_factor_with_stats(&g, s, t, SearchBudget::nodes(2_000_000));
    println!(
        "20 + 20 at min degree {floor}: {} after {} nodes",
        out.label(),
        stats.nodes
    );
}
