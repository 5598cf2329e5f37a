//! Bipartite graphs with bitset adjacency and the degree and density
//! statistics used by the constructions and the tiler.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;

/// Returned by [`BipartiteGraph::delta_between`] when the source set is empty.
pub const UNBOUNDED: usize = usize::MAX;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {side:?}{index} out of range (class has {len} vertices)")]
    InvalidVertex {
        side: Side,
        index: usize,
        len: usize,
    },
    #[error("vertex set on side {side:?} has universe {got}, class has {expected} vertices")]
    UniverseMismatch {
        side: Side,
        expected: usize,
        got: usize,
    },
    #[error("expected sets on opposite sides, both are on {0:?}")]
    SameSide(Side),
    #[error("expected vertices on the same side")]
    DifferentSides,
    #[error("vertices must be distinct")]
    SameVertex,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("density undefined on an empty vertex set")]
    EmptySet,
    #[error("edge ({0}, {1}) out of range")]
    EdgeOutOfRange(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexRef {
    pub side: Side,
    pub index: usize,
}

impl VertexRef {
    pub fn a(index: usize) -> Self {
        VertexRef {
            side: Side::A,
            index,
        }
    }

    pub fn b(index: usize) -> Self {
        VertexRef {
            side: Side::B,
            index,
        }
    }
}

/// A subset of one color class. `universe` is the size of that class.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "RawVertexSet", try_from = "RawVertexSet")]
pub struct VertexSet {
    side: Side,
    bits: BitSet,
}

#[derive(Serialize, Deserialize)]
struct RawVertexSet {
    side: Side,
    universe: usize,
    members: Vec<usize>,
}

impl From<VertexSet> for RawVertexSet {
    fn from(v: VertexSet) -> Self {
        RawVertexSet {
            side: v.side,
            universe: v.universe(),
            members: v.to_vec(),
        }
    }
}

impl TryFrom<RawVertexSet> for VertexSet {
    type Error = GraphError;

    fn try_from(raw: RawVertexSet) -> Result<Self, GraphError> {
        VertexSet::try_from_indices(raw.side, raw.universe, raw.members)
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}{:?}", self.side, self.bits)
    }
}

impl VertexSet {
    pub fn empty(side: Side, universe: usize) -> Self {
        VertexSet {
            side,
            bits: BitSet::new(universe),
        }
    }

    pub fn full(side: Side, universe: usize) -> Self {
        VertexSet {
            side,
            bits: BitSet::full(universe),
        }
    }

    /// Panics on an out-of-range member; see [`VertexSet::try_from_indices`].
    pub fn from_indices<I: IntoIterator<Item = usize>>(side: Side, universe: usize, it: I) -> Self {
        VertexSet {
            side,
            bits: BitSet::from_indices(universe, it),
        }
    }

    pub fn try_from_indices<I: IntoIterator<Item = usize>>(
        side: Side,
        universe: usize,
        it: I,
    ) -> Result<Self, GraphError> {
        let mut bits = BitSet::new(universe);
        for i in it {
            if i >= universe {
                return Err(GraphError::InvalidVertex {
                    side,
                    index: i,
                    len: universe,
                });
            }
            bits.insert(i);
        }
        Ok(VertexSet { side, bits })
    }

    pub fn from_bits(side: Side, bits: BitSet) -> Self {
        VertexSet { side, bits }
    }

    pub fn range(side: Side, universe: usize, r: std::ops::Range<usize>) -> Self {
        Self::from_indices(side, universe, r)
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn universe(&self) -> usize {
        self.bits.capacity()
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn insert(&mut self, i: usize) -> bool {
        self.bits.insert(i)
    }

    pub fn remove(&mut self, i: usize) -> bool {
        self.bits.remove(i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.bits.iter().collect()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.side != other.side || self.bits.is_disjoint(&other.bits)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.side, other.side);
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        VertexSet {
            side: self.side,
            bits,
        }
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        assert_eq!(self.side, other.side);
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        VertexSet {
            side: self.side,
            bits,
        }
    }
}

/// A simple bipartite graph `(A, B; E)` stored as adjacency bitsets in both
/// directions. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    n_a: usize,
    n_b: usize,
    adj_a: Vec<BitSet>,
    adj_b: Vec<BitSet>,
}

impl std::fmt::Debug for BipartiteGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "BipartiteGraph({}+{}, {} edges)",
            self.n_a,
            self.n_b,
            self.edge_count()
        )
    }
}

/// Result of [`BipartiteGraph::induced`]: the subgraph plus maps from new to
/// old indices.
#[derive(Debug, Clone)]
pub struct Induced {
    pub graph: BipartiteGraph,
    pub a_map: Vec<usize>,
    pub b_map: Vec<usize>,
}

impl BipartiteGraph {
    pub fn empty(n_a: usize, n_b: usize) -> Self {
        BipartiteGraph {
            n_a,
            n_b,
            adj_a: vec![BitSet::new(n_b); n_a],
            adj_b: vec![BitSet::new(n_a); n_b],
        }
    }

    pub fn complete(n_a: usize, n_b: usize) -> Self {
        BipartiteGraph {
            n_a,
            n_b,
            adj_a: vec![BitSet::full(n_b); n_a],
            adj_b: vec![BitSet::full(n_a); n_b],
        }
    }

    /// Duplicate edges are merged.
    pub fn from_edges<I>(n_a: usize, n_b: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut b = GraphBuilder::new(n_a, n_b);
        for (x, y) in edges {
            b.add_edge(x, y)?;
        }
        Ok(b.build())
    }

    pub fn n_a(&self) -> usize {
        self.n_a
    }

    pub fn n_b(&self) -> usize {
        self.n_b
    }

    pub fn class_size(&self, side: Side) -> usize {
        match side {
            Side::A => self.n_a,
            Side::B => self.n_b,
        }
    }

    pub fn is_balanced(&self) -> bool {
        self.n_a == self.n_b
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n_a && self.adj_a[a].contains(b)
    }

    pub fn edge_count(&self) -> usize {
        self.adj_a.iter().map(BitSet::count).sum()
    }

    /// Edges `(a, b)` in ascending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj_a
            .iter()
            .enumerate()
            .flat_map(|(a, row)| row.iter().map(move |b| (a, b)))
    }

    /// Neighborhood bitset of `v`; the universe is the opposite class.
    pub fn neighbors(&self, v: VertexRef) -> &BitSet {
        match v.side {
            Side::A => &self.adj_a[v.index],
            Side::B => &self.adj_b[v.index],
        }
    }

    pub fn neighbor_set(&self, v: VertexRef) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(VertexSet::from_bits(
            v.side.other(),
            self.neighbors(v).clone(),
        ))
    }

    pub fn full_set(&self, side: Side) -> VertexSet {
        VertexSet::full(side, self.class_size(side))
    }

    pub fn empty_set(&self, side: Side) -> VertexSet {
        VertexSet::empty(side, self.class_size(side))
    }

    pub fn check_vertex(&self, v: VertexRef) -> Result<(), GraphError> {
        let len = self.class_size(v.side);
        if v.index >= len {
            return Err(GraphError::InvalidVertex {
                side: v.side,
                index: v.index,
                len,
            });
        }
        Ok(())
    }

    pub fn check_set(&self, s: &VertexSet) -> Result<(), GraphError> {
        let expected = self.class_size(s.side());
        if s.universe() != expected {
            return Err(GraphError::UniverseMismatch {
                side: s.side(),
                expected,
                got: s.universe(),
            });
        }
        Ok(())
    }

    fn check_opposite(&self, x: &VertexSet, y: &VertexSet) -> Result<(), GraphError> {
        self.check_set(x)?;
        self.check_set(y)?;
        if x.side() == y.side() {
            return Err(GraphError::SameSide(x.side()));
        }
        Ok(())
    }

    pub fn degree(&self, v: VertexRef) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.neighbors(v).count())
    }

    /// `|N(v) ∩ s|`; `s` must lie on the side opposite `v`.
    pub fn degree_to(&self, v: VertexRef, s: &VertexSet) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        self.check_set(s)?;
        if s.side() == v.side {
            return Err(GraphError::SameSide(v.side));
        }
        Ok(self.neighbors(v).intersection_count(s.bits()))
    }

    /// Unchecked `|N(v) ∩ s|` for hot loops.
    #[inline]
    pub(crate) fn degree_into(&self, v: VertexRef, s: &BitSet) -> usize {
        self.neighbors(v).intersection_count(s)
    }

    /// Minimum degree over both classes.
    pub fn min_degree(&self) -> Result<usize, GraphError> {
        if self.n_a + self.n_b == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let a = self.adj_a.iter().map(BitSet::count);
        let b = self.adj_b.iter().map(BitSet::count);
        Ok(a.chain(b).min().unwrap_or(0))
    }

    pub fn max_degree(&self) -> usize {
        let a = self.adj_a.iter().map(BitSet::count);
        let b = self.adj_b.iter().map(BitSet::count);
        a.chain(b).max().unwrap_or(0)
    }

    /// `δ(x, y) = min_{v ∈ x} deg(v, y)`, or [`UNBOUNDED`] when `x` is empty.
    pub fn delta_between(&self, x: &VertexSet, y: &VertexSet) -> Result<usize, GraphError> {
        self.check_opposite(x, y)?;
        let side = x.side();
        Ok(x.iter()
            .map(|i| self.degree_into(VertexRef { side, index: i }, y.bits()))
            .min()
            .unwrap_or(UNBOUNDED))
    }

    /// `Δ(x, y) = max_{v ∈ x} deg(v, y)`, or 0 when `x` is empty.
    pub fn max_degree_between(&self, x: &VertexSet, y: &VertexSet) -> Result<usize, GraphError> {
        self.check_opposite(x, y)?;
        let side = x.side();
        Ok(x.iter()
            .map(|i| self.degree_into(VertexRef { side, index: i }, y.bits()))
            .max()
            .unwrap_or(0))
    }

    /// Number of edges between `x` and `y`.
    pub fn edges_between(&self, x: &VertexSet, y: &VertexSet) -> Result<usize, GraphError> {
        self.check_opposite(x, y)?;
        let side = x.side();
        Ok(x.iter()
            .map(|i| self.degree_into(VertexRef { side, index: i }, y.bits()))
            .sum())
    }

    /// `d(x, y) = e(x, y) / (|x||y|)` as an exact rational.
    pub fn density(&self, x: &VertexSet, y: &VertexSet) -> Result<Ratio<u64>, GraphError> {
        let e = self.edges_between(x, y)?;
        if x.is_empty() || y.is_empty() {
            return Err(GraphError::EmptySet);
        }
        Ok(Ratio::new(e as u64, (x.len() * y.len()) as u64))
    }

    pub fn common_neighbors(&self, u: VertexRef, v: VertexRef) -> Result<VertexSet, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u.side != v.side {
            return Err(GraphError::DifferentSides);
        }
        if u.index == v.index {
            return Err(GraphError::SameVertex);
        }
        let bits = self.neighbors(u).intersection(self.neighbors(v));
        Ok(VertexSet::from_bits(u.side.other(), bits))
    }

    /// True iff no two vertices of one class share two neighbors.
    pub fn is_k22_free(&self) -> bool {
        // Checking one class suffices: a K_{2,2} has two vertices on each side.
        let rows = &self.adj_a;
        for i in 0..rows.len() {
            for j in i + 1..rows.len() {
                if rows[i].intersection_count(&rows[j]) >= 2 {
                    return false;
                }
            }
        }
        true
    }

    /// `G[x, y]` with vertices renumbered in ascending order.
    pub fn induced(&self, x: &VertexSet, y: &VertexSet) -> Result<Induced, GraphError> {
        self.check_set(x)?;
        self.check_set(y)?;
        if x.side() != Side::A {
            return Err(GraphError::SameSide(Side::B));
        }
        if y.side() != Side::B {
            return Err(GraphError::SameSide(Side::A));
        }
        let a_map = x.to_vec();
        let b_map = y.to_vec();
        let mut inv_b = vec![usize::MAX; self.n_b];
        for (new, &old) in b_map.iter().enumerate() {
            inv_b[old] = new;
        }
        let mut builder = GraphBuilder::new(a_map.len(), b_map.len());
        for (na, &oa) in a_map.iter().enumerate() {
            for ob in self.adj_a[oa].intersection(y.bits()).iter() {
                builder.add_edge_unchecked(na, inv_b[ob]);
            }
        }
        Ok(Induced {
            graph: builder.build(),
            a_map,
            b_map,
        })
    }
}

/// Mutable staging area; graphs are frozen by [`GraphBuilder::build`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n_a: usize,
    n_b: usize,
    adj_a: Vec<BitSet>,
}

impl GraphBuilder {
    pub fn new(n_a: usize, n_b: usize) -> Self {
        GraphBuilder {
            n_a,
            n_b,
            adj_a: vec![BitSet::new(n_b); n_a],
        }
    }

    pub fn from_graph(g: &BipartiteGraph) -> Self {
        GraphBuilder {
            n_a: g.n_a,
            n_b: g.n_b,
            adj_a: g.adj_a.clone(),
        }
    }

    pub fn n_a(&self) -> usize {
        self.n_a
    }

    pub fn n_b(&self) -> usize {
        self.n_b
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<bool, GraphError> {
        if a >= self.n_a || b >= self.n_b {
            return Err(GraphError::EdgeOutOfRange(a, b));
        }
        Ok(self.adj_a[a].insert(b))
    }

    pub(crate) fn add_edge_unchecked(&mut self, a: usize, b: usize) -> bool {
        self.adj_a[a].insert(b)
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) -> bool {
        a < self.n_a && self.adj_a[a].remove(b)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n_a && self.adj_a[a].contains(b)
    }

    /// Joins every vertex of `xs` to every vertex of `ys`.
    pub fn join(&mut self, xs: impl IntoIterator<Item = usize>, ys: &[usize]) {
        for a in xs {
            for &b in ys {
                self.adj_a[a].insert(b);
            }
        }
    }

    pub fn build(self) -> BipartiteGraph {
        let mut adj_b = vec![BitSet::new(self.n_a); self.n_b];
        for (a, row) in self.adj_a.iter().enumerate() {
            for b in row.iter() {
                adj_b[b].insert(a);
            }
        }
        BipartiteGraph {
            n_a: self.n_a,
            n_b: self.n_b,
            adj_a: self.adj_a,
            adj_b,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matching(n: usize) -> BipartiteGraph {
        BipartiteGraph::from_edges(n, n, (0..n).map(|i| (i, i))).unwrap()
    }

    #[test]
    fn degrees_of_complete_and_empty() {
        let k33 = BipartiteGraph::complete(3, 3);
        for i in 0..3 {
            assert_eq!(k33.degree(VertexRef::a(i)).unwrap(), 3);
            assert_eq!(k33.degree(VertexRef::b(i)).unwrap(), 3);
        }
        let e = BipartiteGraph::empty(4, 4);
        assert_eq!(e.degree(VertexRef::b(2)).unwrap(), 0);
        assert_eq!(k33.min_degree().unwrap(), 3);
        assert!(matches!(
            k33.degree(VertexRef::a(3)),
            Err(GraphError::InvalidVertex { .. })
        ));
    }

    #[test]
    fn degree_to_subset() {
        let k33 = BipartiteGraph::complete(3, 3);
        let s = VertexSet::from_indices(Side::B, 3, [0, 2]);
        assert_eq!(k33.degree_to(VertexRef::a(1), &s).unwrap(), 2);
        let e = BipartiteGraph::empty(3, 3);
        assert_eq!(e.degree_to(VertexRef::a(1), &s).unwrap(), 0);
        let same = VertexSet::from_indices(Side::A, 3, [0]);
        assert_eq!(
            k33.degree_to(VertexRef::a(1), &same),
            Err(GraphError::SameSide(Side::A))
        );
    }

    #[test]
    fn min_degree_empty_graph_errors() {
        assert_eq!(
            BipartiteGraph::empty(0, 0).min_degree(),
            Err(GraphError::EmptyGraph)
        );
    }

    #[test]
    fn delta_and_max_between() {
        let k33 = BipartiteGraph::complete(3, 3);
        let a = k33.full_set(Side::A);
        let b = k33.full_set(Side::B);
        assert_eq!(k33.delta_between(&a, &b).unwrap(), 3);
        assert_eq!(k33.max_degree_between(&a, &b).unwrap(), 3);
        let m = matching(5);
        assert_eq!(
            m.delta_between(&m.full_set(Side::A), &m.full_set(Side::B))
                .unwrap(),
            1
        );
        let e = BipartiteGraph::empty(3, 3);
        assert_eq!(e.max_degree_between(&a, &b).unwrap(), 0);
        let none = VertexSet::empty(Side::A, 3);
        assert_eq!(k33.delta_between(&none, &b).unwrap(), UNBOUNDED);
        assert_eq!(k33.max_degree_between(&none, &b).unwrap(), 0);
        assert!(k33.delta_between(&a, &a).is_err());
    }

    #[test]
    fn density_exact() {
        let k33 = BipartiteGraph::complete(3, 3);
        let (a, b) = (k33.full_set(Side::A), k33.full_set(Side::B));
        assert_eq!(k33.density(&a, &b).unwrap(), Ratio::from_integer(1));
        let e = BipartiteGraph::empty(3, 3);
        assert_eq!(e.density(&a, &b).unwrap(), Ratio::from_integer(0));
        let none = VertexSet::empty(Side::A, 3);
        assert_eq!(k33.density(&none, &b), Err(GraphError::EmptySet));
    }

    #[test]
    fn common_neighbors_cases() {
        let k22 = BipartiteGraph::complete(2, 2);
        let c = k22
            .common_neighbors(VertexRef::a(0), VertexRef::a(1))
            .unwrap();
        assert_eq!(c.to_vec(), vec![0, 1]);
        assert_eq!(c.side(), Side::B);
        let m = matching(4);
        assert!(m
            .common_neighbors(VertexRef::b(0), VertexRef::b(3))
            .unwrap()
            .is_empty());
        assert_eq!(
            m.common_neighbors(VertexRef::a(0), VertexRef::b(0)),
            Err(GraphError::DifferentSides)
        );
    }

    #[test]
    fn k22_freeness() {
        assert!(!BipartiteGraph::complete(2, 2).is_k22_free());
        assert!(matching(6).is_k22_free());
        assert!(BipartiteGraph::complete(1, 9).is_k22_free());
    }

    #[test]
    fn induced_subgraphs() {
        let k33 = BipartiteGraph::complete(3, 3);
        let full = k33
            .induced(&k33.full_set(Side::A), &k33.full_set(Side::B))
            .unwrap();
        assert_eq!(full.graph, k33);
        let no_b = k33
            .induced(&k33.full_set(Side::A), &VertexSet::empty(Side::B, 3))
            .unwrap();
        assert_eq!(no_b.graph.n_b(), 0);
        assert_eq!(no_b.graph.n_a(), 3);
        let x = VertexSet::from_indices(Side::A, 3, [0, 2]);
        let y = VertexSet::from_indices(Side::B, 3, [1]);
        let sub = k33.induced(&x, &y).unwrap();
        assert_eq!(sub.graph, BipartiteGraph::complete(2, 1));
        assert_eq!(sub.a_map, vec![0, 2]);
        assert_eq!(sub.b_map, vec![1]);
    }

    #[test]
    fn vertex_set_serde_roundtrip() {
        let v = VertexSet::from_indices(Side::B, 10, [1, 4, 9]);
        let json = serde_json::to_string(&v).unwrap();
        assert_eq!(json, r#"{"side":"B","universe":10,"members":[1,4,9]}"#);
        let back: VertexSet = serde_json::from_str(&json).unwrap();
        assert_eq!(back, v);
        let bad = r#"{"side":"B","universe":3,"members":[5]}"#;
        assert!(serde_json::from_str::<VertexSet>(bad).is_err());
    }
}
