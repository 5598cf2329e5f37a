//! The threshold from both sides: constructions just below it, random graphs
//! at it.
//!
//! Run with `cargo run --release --example threshold_sweep`.

use bitile::cli::{cmd_sweep, SweepArgs};
use bitile::tiler::TilerConfig;
use bitile::SearchBudget;

fn main() {
    for (s, t) in [(1, 2), (1, 3)] {
        let args = SweepArgs {
            s,
            t,
            ks: vec![2, 3, 4],
            trials: 4,
            seed: 2024,
            density: 0.5,
            budget: SearchBudget::nodes(20_000_000),
            tiler: TilerConfig::default(),
            timing: true,
        };
        print!("{}", cmd_sweep(&args).unwrap());
    }
}
