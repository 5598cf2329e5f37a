//! Graphs one degree short of the threshold that have no factor, and the
//! certificates that prove it without search.
//!
//! Run with `cargo run --example lower_bounds`.

use bitile::extremal::{build, check_obstruction, obstruction_for, ConstructionParams};
use bitile::solver::has_factor;
use bitile::{threshold, SearchBudget};

fn main() {
    for (s, t, k) in [
        (1, 2, 4),
        (2, 3, 2),
        (1, 2, 3),
        (1, 3, 3),
        (2, 4, 3),
        (2, 5, 5),
    ] {
        let c = build(ConstructionParams::new(s, t, k).unwrap()).unwrap();
        let o = obstruction_for(&c);
        let n = c.params.n();
        print!(
            "K_{{{s},{t}}}, k = {k}, n = {n}: {:?}, min degree {} (threshold {}), {:?}",
            c.case,
            c.graph.min_degree().unwrap(),
            threshold(s, t, k),
            o.kind,
        );
        if let Some((lo, hi)) = o.r1_bounds {
            print!(" r1 in [{lo}, {hi}]");
        }
        // Padding blocks are outside what the checker certifies.
        if c.blocks.a_star.is_empty() {
            print!(
                ", certificate {}",
                if check_obstruction(&c.graph, &o, s, t) {
                    "holds"
                } else {
                    "FAILS"
                }
            );
        }
        if n <= 12 {
            print!(
                ", exact search: {}",
                has_factor(&c.graph, s, t, SearchBudget::unlimited()).label()
            );
        }
        println!();
    }
}
