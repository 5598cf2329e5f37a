//! `K_{s,t}`-factors of balanced bipartite graphs.
//!
//! - [`bigraph`]: bitset bipartite graphs and degree/density statistics.
//! - [`c4free`]: `K_{2,2}`-free regular gadgets `P`, `Q`, `R`.
//! - [`extremal`]: graphs one below the minimum-degree threshold with no
//!   factor, and checkable certificates for them.
//! - [`solver`]: exact factor search and a brute-force oracle.
//! - [`tiler`]: the constructive tiling procedure for near-extremal graphs.
//! - [`cli`]: file formats, instance generators, and the commands behind the
//!   `bitile` binary.

pub mod bigraph;
pub mod bitset;
pub mod c4free;
pub mod cli;
pub mod extremal;
pub mod solver;
pub mod tiler;

pub use bigraph::{BipartiteGraph, GraphBuilder, GraphError, Side, VertexRef, VertexSet};
pub use extremal::threshold;
pub use solver::{Factor, KstCopy, Orientation, SearchBudget, SearchOutcome};
