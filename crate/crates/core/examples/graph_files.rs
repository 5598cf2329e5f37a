//! Reading and writing graph files, and summary statistics.
//!
//! Run with `cargo run --example graph_files`.

use bitile::cli::{cmd_stats, parse_graph, random_graph, write_graph, Format};

fn main() {
    let g = random_graph(4, 0.5, 2, 11).unwrap();
    let text = write_graph(&g, Format::Bge);
    print!("{text}");
    println!("{}", write_graph(&g, Format::Json).trim_end());
    assert_eq!(parse_graph(&text).unwrap(), g);

    let annotated = "# two disjoint edges\nbge 2 2 2\n\ne 0 0\ne 1 1\n";
    let h = parse_graph(annotated).unwrap();
    println!(
        "{}",
        serde_json::to_string(&cmd_stats(&h, Some((1, 1)))).unwrap()
    );

    for bad in ["bge 2 2 1\ne 0 9\n", "bge 2 2 3\ne 0 0\n", "{\"n_a\": 1}"] {
        println!("{:?}: {}", bad, parse_graph(bad).unwrap_err());
    }
}
