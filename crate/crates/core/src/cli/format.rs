//! Graph files: a line-oriented text format and a JSON equivalent.
//!
//! ```text
//! bge 3 3 2
//! e 0 0
//! e 1 2
//! ```
//!
//! The header gives class sizes and edge count; edges are 0-based `(a, b)`
//! pairs in sorted order. Blank lines and lines starting with `#` are
//! ignored on input.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bigraph::BipartiteGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("invalid JSON graph: {0}")]
    Json(String),
    #[error("empty input")]
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Bge,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n_a: usize,
    pub n_b: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphFile {
    pub fn from_graph(g: &BipartiteGraph) -> Self {
        GraphFile {
            n_a: g.n_a(),
            n_b: g.n_b(),
            edges: g.edges().collect(),
        }
    }

    /// Checks ranges and duplicates, which serde alone does not.
    pub fn to_graph(&self) -> Result<BipartiteGraph, ParseError> {
        let mut seen = BTreeSet::new();
        for &(a, b) in &self.edges {
            if a >= self.n_a || b >= self.n_b {
                return Err(ParseError::Json(format!("edge ({a}, {b}) out of range")));
            }
            if !seen.insert((a, b)) {
                return Err(ParseError::Json(format!("duplicate edge ({a}, {b})")));
            }
        }
        BipartiteGraph::from_edges(self.n_a, self.n_b, self.edges.iter().copied())
            .map_err(|e| ParseError::Json(e.to_string()))
    }
}

pub fn write_graph(g: &BipartiteGraph, format: Format) -> String {
    match format {
        Format::Bge => {
            let mut out = format!("bge {} {} {}\n", g.n_a(), g.n_b(), g.edge_count());
            for (a, b) in g.edges() {
                writeln!(out, "e {a} {b}").expect("writing to a String");
            }
            out
        }
        Format::Json => {
            let mut s =
                serde_json::to_string(&GraphFile::from_graph(g)).expect("plain data serializes");
            s.push('\n');
            s
        }
    }
}

/// Reads either format, chosen by the first non-blank character.
pub fn parse_graph(text: &str) -> Result<BipartiteGraph, ParseError> {
    match text.trim_start().chars().next() {
        None => Err(ParseError::Empty),
        Some('{') => serde_json::from_str::<GraphFile>(text)
            .map_err(|e| ParseError::Json(e.to_string()))?
            .to_graph(),
        Some(_) => parse_bge(text),
    }
}

fn parse_bge(text: &str) -> Result<BipartiteGraph, ParseError> {
    let err = |line: usize, msg: String| ParseError::Line { line, msg };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or(ParseError::Empty)?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [tag, na, nb, m] = fields[..] else {
        return Err(err(
            hl,
            format!("expected `bge <n_a> <n_b> <m>`, found `{header}`"),
        ));
    };
    if tag != "bge" {
        return Err(err(hl, format!("expected header tag `bge`, found `{tag}`")));
    }
    let num = |s: &str, what: &str| {
        s.parse::<usize>()
            .map_err(|_| err(hl, format!("{what} `{s}` is not a nonnegative integer")))
    };
    let (n_a, n_b, m) = (num(na, "n_a")?, num(nb, "n_b")?, num(m, "edge count")?);

    let mut edges = BTreeSet::new();
    for (ln, line) in lines {
        let f: Vec<&str> = line.split_whitespace().collect();
        let ["e", a, b] = f[..] else {
            return Err(err(ln, format!("expected `e <a> <b>`, found `{line}`")));
        };
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| err(ln, format!("`{s}` is not a vertex index")))
        };
        let (a, b) = (parse(a)?, parse(b)?);
        if a >= n_a || b >= n_b {
            return Err(err(
                ln,
                format!("edge ({a}, {b}) out of range for {n_a} + {n_b} vertices"),
            ));
        }
        if !edges.insert((a, b)) {
            return Err(err(ln, format!("duplicate edge ({a}, {b})")));
        }
    }
    if edges.len() != m {
        return Err(err(
            hl,
            format!("header promises {m} edges, file has {}", edges.len()),
        ));
    }
    BipartiteGraph::from_edges(n_a, n_b, edges).map_err(|e| err(hl, e.to_string()))
}
