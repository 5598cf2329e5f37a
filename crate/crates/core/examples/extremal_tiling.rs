//! Tiling near-extremal graphs with a few hundred vertices per side.
//!
//! Run with `cargo run --release --example extremal_tiling`.

use std::time::Instant;

use bitile::cli::ExtremalInstance;
use bitile::solver::verify_factor;
use bitile::tiler::{find_base_pair, tile, TileVerdict, TilerConfig};
use bitile::Orientation;

fn main() {
    let cfg = TilerConfig::default();
    let (k, h) = (100, 150);
    let b = ExtremalInstance::balanced(1, 2, k, 7);
    let odd = ExtremalInstance::balanced(1, 2, 99, 7);
    let cases = [
        ("balanced", b),
        ("missing edges", ExtremalInstance { holes: 5, ..b }),
        (
            "one oversized class",
            ExtremalInstance {
                a: [h - 1, h + 1, 0],
                ..b
            },
        ),
        (
            "special vertices",
            ExtremalInstance {
                a: [h - 1, h, 1],
                b: [h, h - 1, 1],
                ..b
            },
        ),
        ("odd k", odd),
        (
            "odd k, special vertex",
            ExtremalInstance {
                a: [odd.a[0] - 1, odd.a[1], 1],
                ..odd
            },
        ),
    ];
    for (name, inst) in cases {
        let g = inst.build().unwrap().graph;
        let (x, y) = find_base_pair(&g, cfg.alpha).expect("sparse pair");
        let d = g.density(&x, &y).unwrap();
        let density = *d.numer() as f64 / *d.denom() as f64;
        let start = Instant::now();
        let out = tile(&g, inst.s, inst.t, &cfg).unwrap();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let TileVerdict::Found(f) = &out.verdict else {
            println!("{name}: {} ({:?})", out.verdict.label(), out.note);
            continue;
        };
        assert!(verify_factor(&g, inst.s, inst.t, f));
        println!(
            "{name:>22}: n = {}, base pair density {:.4}, case {}, {} + {} copies, {ms:.1} ms",
            inst.n(),
            density,
            out.case.as_deref().unwrap_or("-"),
            f.count(Orientation::TsideInA),
            f.count(Orientation::TsideInB),
        );
    }
}
