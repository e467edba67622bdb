//! The fan graph `F_n`, its edges, spanning trees and pivot moves.
//!
//! `F_n` is the path `v_2 - v_3 - ... - v_n` with an extra hub vertex `v_inf`
//! joined to every path vertex. It has `2n - 3` edges: `n - 2` path edges
//! `v_i v_{i+1}` and `n - 1` spokes `v_i v_inf`.
//!
//! Every edge is keyed by its smaller endpoint, so a finite vertex owns at most
//! two edges (the path edge to its successor and its spoke) and the hub owns
//! none. A [`SpanningTree`] stores one bit per edge in the canonical layout
//! shared with the bit-string format: path edges `i = 2..n-1` at positions
//! `0..n-3`, then spokes `i = 2..n` at positions `n-2..2n-4`.
//!
//! Two text formats are supported:
//!
//! * edge list: comma-separated `i-j` / `i-inf` tokens in universe order,
//!   e.g. `2-3,3-4,2-inf,5-inf`;
//! * bit string: `2n - 3` characters `0`/`1` in the layout above, e.g. `110`
//!   for the path tree of `F_3`.

use std::fmt;
use std::str::FromStr;

use crate::error::{EdgeText, Error, Result};

/// A vertex of `F_n`: a path vertex `v_i` (`2 <= i <= n`) or the hub `v_inf`.
///
/// The derived order puts every finite label below the hub.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Finite(usize),
    Infinity,
}

impl Vertex {
    /// Dense index used by union-find: hub is 0, `v_i` is `i - 1`.
    fn slot(self) -> usize {
        match self {
            Vertex::Infinity => 0,
            Vertex::Finite(i) => i - 1,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Finite(i) => write!(f, "{i}"),
            Vertex::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "inf" {
            return Ok(Vertex::Infinity);
        }
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::MalformedToken(s.to_string()));
        }
        s.parse::<usize>()
            .map(Vertex::Finite)
            .map_err(|_| Error::MalformedToken(s.to_string()))
    }
}

/// An edge of some fan graph, normalized so that `lo < hi`.
///
/// The derived order is the universe order: path edges by `i`, then spokes by `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Edge {
    /// `v_i v_{i+1}`
    Path(usize),
    /// `v_i v_inf`
    Spoke(usize),
}

impl Edge {
    /// The edge joining `a` and `b`, if they are adjacent in a fan graph.
    pub fn between(a: Vertex, b: Vertex) -> Option<Edge> {
        match (a.min(b), a.max(b)) {
            (Vertex::Finite(i), Vertex::Finite(j)) if j == i + 1 => Some(Edge::Path(i)),
            (Vertex::Finite(i), Vertex::Infinity) => Some(Edge::Spoke(i)),
            _ => None,
        }
    }

    pub fn lo(self) -> Vertex {
        match self {
            Edge::Path(i) | Edge::Spoke(i) => Vertex::Finite(i),
        }
    }

    pub fn hi(self) -> Vertex {
        match self {
            Edge::Path(i) => Vertex::Finite(i + 1),
            Edge::Spoke(_) => Vertex::Infinity,
        }
    }

    /// The endpoint other than `v`, if `v` is an endpoint.
    pub fn other(self, v: Vertex) -> Option<Vertex> {
        if v == self.lo() {
            Some(self.hi())
        } else if v == self.hi() {
            Some(self.lo())
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.lo(), self.hi())
    }
}

/// The order `n >= 2` of a fan graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FanDims {
    n: usize,
}

impl FanDims {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewVertices(n));
        }
        Ok(FanDims { n })
    }

    pub fn n(self) -> usize {
        self.n
    }

    /// Number of edges, `2n - 3`.
    pub fn edge_count(self) -> usize {
        2 * self.n - 3
    }

    /// Number of edges in a spanning tree, `n - 1`.
    pub fn tree_size(self) -> usize {
        self.n - 1
    }

    pub fn contains_vertex(self, v: Vertex) -> bool {
        match v {
            Vertex::Finite(i) => (2..=self.n).contains(&i),
            Vertex::Infinity => true,
        }
    }

    pub fn contains(self, e: Edge) -> bool {
        match e {
            Edge::Path(i) => (2..self.n).contains(&i),
            Edge::Spoke(i) => (2..=self.n).contains(&i),
        }
    }

    /// Bit position of `e` in the canonical layout.
    pub fn position(self, e: Edge) -> Option<usize> {
        if !self.contains(e) {
            return None;
        }
        Some(self.position_unchecked(e))
    }

    #[inline]
    fn position_unchecked(self, e: Edge) -> usize {
        match e {
            Edge::Path(i) => i - 2,
            Edge::Spoke(i) => self.n + i - 4,
        }
    }

    /// Inverse of [`FanDims::position`].
    pub fn edge_at(self, pos: usize) -> Option<Edge> {
        if pos < self.n - 2 {
            Some(Edge::Path(pos + 2))
        } else if pos < self.edge_count() {
            Some(Edge::Spoke(pos + 4 - self.n))
        } else {
            None
        }
    }

    /// All edges: path edges by `i` ascending, then spokes by `i` ascending.
    pub fn edge_universe(self) -> Vec<Edge> {
        (2..self.n)
            .map(Edge::Path)
            .chain((2..=self.n).map(Edge::Spoke))
            .collect()
    }

    /// Vertices in ascending order, hub last.
    pub fn vertices(self) -> impl Iterator<Item = Vertex> {
        (2..=self.n)
            .map(Vertex::Finite)
            .chain(std::iter::once(Vertex::Infinity))
    }

    /// Neighbors of `v` in `F_n`, ascending.
    pub fn neighbors(self, v: Vertex) -> Vec<Vertex> {
        match v {
            Vertex::Infinity => (2..=self.n).map(Vertex::Finite).collect(),
            Vertex::Finite(i) => {
                let mut out = Vec::with_capacity(3);
                if i > 2 {
                    out.push(Vertex::Finite(i - 1));
                }
                if i < self.n {
                    out.push(Vertex::Finite(i + 1));
                }
                out.push(Vertex::Infinity);
                out
            }
        }
    }

    fn check_edge(self, e: Edge) -> Result<()> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(Error::EdgeNotInGraph(EdgeText(e.to_string()), self.n))
        }
    }
}

impl fmt::Display for FanDims {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.n)
    }
}

/// A single pivot transition: remove `pivot-removed`, add `pivot-added`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PivotMove {
    pub pivot: Vertex,
    pub removed: Vertex,
    pub added: Vertex,
}

impl PivotMove {
    pub fn new(pivot: Vertex, removed: Vertex, added: Vertex) -> Self {
        PivotMove {
            pivot,
            removed,
            added,
        }
    }

    pub(crate) const fn finite(pivot: usize, removed: usize, added: usize) -> Self {
        PivotMove {
            pivot: Vertex::Finite(pivot),
            removed: Vertex::Finite(removed),
            added: Vertex::Finite(added),
        }
    }

    pub(crate) const fn to_hub(pivot: usize, removed: usize) -> Self {
        PivotMove {
            pivot: Vertex::Finite(pivot),
            removed: Vertex::Finite(removed),
            added: Vertex::Infinity,
        }
    }

    pub(crate) const fn from_hub(pivot: usize, added: usize) -> Self {
        PivotMove {
            pivot: Vertex::Finite(pivot),
            removed: Vertex::Infinity,
            added: Vertex::Finite(added),
        }
    }

    /// The move undoing this one.
    pub fn inverse(self) -> Self {
        PivotMove {
            pivot: self.pivot,
            removed: self.added,
            added: self.removed,
        }
    }

    pub fn removed_edge(self) -> Option<Edge> {
        Edge::between(self.pivot, self.removed)
    }

    pub fn added_edge(self) -> Option<Edge> {
        Edge::between(self.pivot, self.added)
    }
}

impl fmt::Display for PivotMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pivot {}: -{} +{}", self.pivot, self.removed, self.added)
    }
}

impl FromStr for PivotMove {
    type Err = Error;

    /// Parses the delta line format `pivot u: -v +w`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedToken(s.to_string());
        let rest = s.trim().strip_prefix("pivot ").ok_or_else(bad)?;
        let (pivot, rest) = rest.split_once(':').ok_or_else(bad)?;
        let mut parts = rest.split_whitespace();
        let removed = parts.next().and_then(|p| p.strip_prefix('-')).ok_or_else(bad)?;
        let added = parts.next().and_then(|p| p.strip_prefix('+')).ok_or_else(bad)?;
        if parts.next().is_some() {
            return Err(bad());
        }
        Ok(PivotMove::new(pivot.parse()?, removed.parse()?, added.parse()?))
    }
}

/// A set of edges of `F_n`, normally a spanning tree.
///
/// Constructors that parse or collect edges validate the spanning-tree
/// invariant. The in-place mutators ([`SpanningTree::insert`],
/// [`SpanningTree::remove`]) do not; use [`SpanningTree::is_spanning_tree`]
/// afterwards when that matters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpanningTree {
    dims: FanDims,
    words: Vec<u64>,
}

impl SpanningTree {
    /// The edgeless subgraph; not a tree.
    pub fn empty(dims: FanDims) -> Self {
        SpanningTree {
            dims,
            words: vec![0; dims.edge_count().div_ceil(64)],
        }
    }

    /// The path `v_inf, v_2, v_3, ..., v_n`, first tree of the listing.
    pub fn path(dims: FanDims) -> Self {
        let mut t = Self::empty(dims);
        t.insert(Edge::Spoke(2));
        for i in 2..dims.n() {
            t.insert(Edge::Path(i));
        }
        t
    }

    /// The path `v_inf, v_n, v_{n-1}, ..., v_2`.
    pub fn reversed_path(dims: FanDims) -> Self {
        let mut t = Self::empty(dims);
        t.insert(Edge::Spoke(dims.n()));
        for i in 2..dims.n() {
            t.insert(Edge::Path(i));
        }
        t
    }

    /// All `n - 1` spokes.
    pub fn star(dims: FanDims) -> Self {
        let mut t = Self::empty(dims);
        for i in 2..=dims.n() {
            t.insert(Edge::Spoke(i));
        }
        t
    }

    /// Collects `edges` into a tree, rejecting foreign edges, duplicates and non-trees.
    pub fn from_edges<I: IntoIterator<Item = Edge>>(dims: FanDims, edges: I) -> Result<Self> {
        let mut t = Self::empty(dims);
        for e in edges {
            dims.check_edge(e)?;
            if !t.insert(e) {
                return Err(Error::DuplicateEdge(e));
            }
        }
        if !t.is_spanning_tree() {
            return Err(Error::NotATree(dims.n()));
        }
        Ok(t)
    }

    pub fn dims(&self) -> FanDims {
        self.dims
    }

    #[inline]
    fn bit(&self, pos: usize) -> bool {
        self.words[pos / 64] >> (pos % 64) & 1 == 1
    }

    #[inline]
    fn set_bit(&mut self, pos: usize, on: bool) {
        let mask = 1u64 << (pos % 64);
        if on {
            self.words[pos / 64] |= mask;
        } else {
            self.words[pos / 64] &= !mask;
        }
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.dims.position(e).is_some_and(|p| self.bit(p))
    }

    /// Adds `e`, returning `false` if it was already present.
    ///
    /// Panics if `e` is not an edge of this graph.
    pub fn insert(&mut self, e: Edge) -> bool {
        let p = self.dims.position(e).expect("edge outside the fan graph");
        let fresh = !self.bit(p);
        self.set_bit(p, true);
        fresh
    }

    /// Removes `e`, returning `false` if it was absent.
    ///
    /// Panics if `e` is not an edge of this graph.
    pub fn remove(&mut self, e: Edge) -> bool {
        let p = self.dims.position(e).expect("edge outside the fan graph");
        let had = self.bit(p);
        self.set_bit(p, false);
        had
    }

    #[inline]
    pub(crate) fn has_path(&self, i: usize) -> bool {
        self.bit(self.dims.position_unchecked(Edge::Path(i)))
    }

    #[inline]
    pub(crate) fn has_spoke(&self, i: usize) -> bool {
        self.bit(self.dims.position_unchecked(Edge::Spoke(i)))
    }

    /// Edges in universe order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.dims.edge_count())
            .filter(|&p| self.bit(p))
            .filter_map(|p| self.dims.edge_at(p))
    }

    pub fn edge_count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Whether the edges form a connected acyclic subgraph on all `n` vertices.
    pub fn is_spanning_tree(&self) -> bool {
        self.edge_count() == self.dims.tree_size() && connects_all(self.dims, self.edges())
    }

    /// Applies a move after checking its preconditions. The result may be a non-tree.
    pub fn pivot(&mut self, m: PivotMove) -> Result<()> {
        let (removed, added) = self.check_move(m)?;
        self.remove(removed);
        self.insert(added);
        Ok(())
    }

    fn check_move(&self, m: PivotMove) -> Result<(Edge, Edge)> {
        let edge_of = |a: Vertex, b: Vertex| {
            Edge::between(a, b)
                .filter(|&e| self.dims.contains(e))
                .ok_or_else(|| Error::EdgeNotInGraph(EdgeText(format!("{a}-{b}")), self.dims.n()))
        };
        let removed = edge_of(m.pivot, m.removed)?;
        let added = edge_of(m.pivot, m.added)?;
        if removed == added {
            return Err(Error::DegenerateMove(m));
        }
        if !self.contains(removed) {
            return Err(Error::RemovedEdgeAbsent(m, removed));
        }
        if self.contains(added) {
            return Err(Error::AddedEdgePresent(m, added));
        }
        Ok((removed, added))
    }

    /// Applies a move the caller guarantees to be well formed.
    #[inline]
    pub(crate) fn apply_unchecked(&mut self, m: PivotMove) {
        let removed = Edge::between(m.pivot, m.removed).unwrap();
        let added = Edge::between(m.pivot, m.added).unwrap();
        self.set_bit(self.dims.position_unchecked(removed), false);
        self.set_bit(self.dims.position_unchecked(added), true);
    }

    /// Comma-separated edge list in universe order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (k, e) in self.edges().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&e.to_string());
        }
        s
    }

    /// Parses an edge list such as `2-3,2-inf`. Endpoints may come in either order.
    pub fn parse_text(dims: FanDims, s: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (a, b) = token
                .split_once('-')
                .ok_or_else(|| Error::MalformedToken(token.to_string()))?;
            let a: Vertex = a.parse()?;
            let b: Vertex = b.parse()?;
            for v in [a, b] {
                if !dims.contains_vertex(v) {
                    return Err(Error::LabelOutOfRange {
                        label: v.to_string(),
                        n: dims.n(),
                    });
                }
            }
            let e = Edge::between(a, b)
                .ok_or_else(|| Error::EdgeNotInGraph(EdgeText(token.to_string()), dims.n()))?;
            edges.push(e);
        }
        Self::from_edges(dims, edges)
    }

    /// Bit string of length `2n - 3` in the canonical layout.
    pub fn to_bits(&self) -> String {
        (0..self.dims.edge_count())
            .map(|p| if self.bit(p) { '1' } else { '0' })
            .collect()
    }

    pub fn parse_bits(dims: FanDims, s: &str) -> Result<Self> {
        let s = s.trim();
        let len = s.chars().count();
        if len != dims.edge_count() {
            return Err(Error::WrongLength {
                expected: dims.edge_count(),
                found: len,
            });
        }
        let mut t = Self::empty(dims);
        for (p, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => t.set_bit(p, true),
                other => return Err(Error::InvalidBit(other)),
            }
        }
        if t.edge_count() != dims.tree_size() {
            return Err(Error::WrongPopcount {
                expected: dims.tree_size(),
                found: t.edge_count(),
            });
        }
        if !t.is_spanning_tree() {
            return Err(Error::NotATree(dims.n()));
        }
        Ok(t)
    }
}

impl fmt::Display for SpanningTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for SpanningTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpanningTree({}: {})", self.dims, self.to_text())
    }
}

/// Edge universe of `F_n`.
pub fn edge_universe(dims: FanDims) -> Vec<Edge> {
    dims.edge_universe()
}

/// The path tree `P_n`.
pub fn path_tree(dims: FanDims) -> SpanningTree {
    SpanningTree::path(dims)
}

/// Whether `edges` (all assumed to be edges of `F_n`) form a spanning tree.
pub fn is_spanning_tree(dims: FanDims, edges: &[Edge]) -> bool {
    let mut distinct = edges.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    distinct.len() == edges.len()
        && edges.len() == dims.tree_size()
        && edges.iter().all(|&e| dims.contains(e))
        && connects_all(dims, edges.iter().copied())
}

/// Returns `t` with `m` applied. The result may be a non-tree.
pub fn apply_move(t: &SpanningTree, m: PivotMove) -> Result<SpanningTree> {
    let mut out = t.clone();
    out.pivot(m)?;
    Ok(out)
}

/// Acyclic and connecting all `n` vertices; with `n - 1` edges either implies the other.
fn connects_all(dims: FanDims, edges: impl Iterator<Item = Edge>) -> bool {
    let mut uf = UnionFind::new(dims.n());
    let mut components = dims.n();
    for e in edges {
        if !uf.union(e.lo().slot(), e.hi().slot()) {
            return false;
        }
        components -= 1;
    }
    components == 1
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns `false` if `a` and `b` were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(n: usize) -> FanDims {
        FanDims::new(n).unwrap()
    }

    fn v(i: usize) -> Vertex {
        Vertex::Finite(i)
    }

    const INF: Vertex = Vertex::Infinity;

    #[test]
    fn vertex_order_puts_hub_last() {
        assert!(v(2) < v(3));
        assert!(v(1000) < INF);
    }

    #[test]
    fn universe_small_cases() {
        assert_eq!(edge_universe(dims(2)), vec![Edge::Spoke(2)]);
        assert_eq!(
            edge_universe(dims(3)),
            vec![Edge::Path(2), Edge::Spoke(2), Edge::Spoke(3)]
        );
        assert_eq!(edge_universe(dims(5)).len(), 7);
        for n in 2..40 {
            assert_eq!(edge_universe(dims(n)).len(), 2 * n - 3);
        }
        assert!(FanDims::new(1).is_err());
    }

    #[test]
    fn positions_round_trip() {
        for n in 2..20 {
            let d = dims(n);
            for (p, e) in d.edge_universe().into_iter().enumerate() {
                assert_eq!(d.position(e), Some(p));
                assert_eq!(d.edge_at(p), Some(e));
            }
            assert_eq!(d.edge_at(d.edge_count()), None);
        }
    }

    #[test]
    fn path_tree_small_cases() {
        assert_eq!(path_tree(dims(2)).to_text(), "2-inf");
        assert_eq!(path_tree(dims(3)).to_text(), "2-3,2-inf");
        assert_eq!(path_tree(dims(5)).to_text(), "2-3,3-4,4-5,2-inf");
        for n in 2..30 {
            assert!(path_tree(dims(n)).is_spanning_tree());
            assert!(SpanningTree::star(dims(n)).is_spanning_tree());
            assert!(SpanningTree::reversed_path(dims(n)).is_spanning_tree());
        }
    }

    #[test]
    fn spanning_tree_predicate() {
        use Edge::*;
        assert!(is_spanning_tree(dims(3), &[Spoke(2), Path(2)]));
        assert!(!is_spanning_tree(dims(3), &[Spoke(2), Path(2), Spoke(3)]));
        assert!(!is_spanning_tree(
            dims(5),
            &[Spoke(2), Path(2), Path(3), Spoke(3)]
        ));
        assert!(!is_spanning_tree(dims(3), &[Spoke(2), Spoke(2)]));
    }

    /// A subset of a fan with `n - 1` edges is a tree iff no two spokes are
    /// joined by an unbroken run of path edges.
    fn fan_acyclic_by_structure(d: FanDims, t: &SpanningTree) -> bool {
        let mut last_spoke = None;
        for i in 2..=d.n() {
            if t.has_spoke(i) {
                if last_spoke.is_some() {
                    return false;
                }
                last_spoke = Some(i);
            }
            if i < d.n() && !t.has_path(i) {
                last_spoke = None;
            }
        }
        true
    }

    #[test]
    fn predicate_matches_structural_characterization() {
        for n in 2..=9 {
            let d = dims(n);
            let m = d.edge_count();
            for mask in 0u32..(1 << m) {
                let mut t = SpanningTree::empty(d);
                for p in 0..m {
                    if mask >> p & 1 == 1 {
                        t.insert(d.edge_at(p).unwrap());
                    }
                }
                let expected =
                    mask.count_ones() as usize == n - 1 && fan_acyclic_by_structure(d, &t);
                assert_eq!(t.is_spanning_tree(), expected, "n={n} {t:?}");
            }
        }
    }

    fn sixteenth_tree_of_f5() -> SpanningTree {
        SpanningTree::parse_text(dims(5), "2-inf,2-3,3-4,5-inf").unwrap()
    }

    #[test]
    fn apply_move_walkthrough_example() {
        let t = sixteenth_tree_of_f5();
        let next = apply_move(&t, PivotMove::new(v(4), v(3), v(5))).unwrap();
        assert_eq!(next.to_text(), "2-3,4-5,2-inf,5-inf");
        assert!(next.is_spanning_tree());
        let back = apply_move(&next, PivotMove::new(v(4), v(3), v(5)).inverse()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn apply_move_base_case_trace() {
        let p3 = path_tree(dims(3));
        let t = apply_move(&p3, PivotMove::new(v(3), v(2), INF)).unwrap();
        assert_eq!(t.to_text(), "2-inf,3-inf");
    }

    #[test]
    fn apply_move_rejects_bad_moves() {
        let p5 = path_tree(dims(5));
        assert!(matches!(
            apply_move(&p5, PivotMove::new(v(3), v(4), v(4))),
            Err(Error::DegenerateMove(_))
        ));
        assert!(matches!(
            apply_move(&p5, PivotMove::new(v(3), INF, v(2))),
            Err(Error::RemovedEdgeAbsent(..))
        ));
        assert!(matches!(
            apply_move(&p5, PivotMove::new(v(3), v(2), v(4))),
            Err(Error::AddedEdgePresent(..))
        ));
        assert!(matches!(
            apply_move(&p5, PivotMove::new(v(3), v(2), v(5))),
            Err(Error::EdgeNotInGraph(..))
        ));
        assert!(matches!(
            apply_move(&p5, PivotMove::new(v(5), v(4), v(6))),
            Err(Error::EdgeNotInGraph(..))
        ));
    }

    #[test]
    fn apply_move_may_produce_non_tree() {
        let t = sixteenth_tree_of_f5();
        let out = apply_move(&t, PivotMove::new(v(3), v(4), INF)).unwrap();
        assert!(!out.is_spanning_tree());
    }

    #[test]
    fn text_format() {
        assert_eq!(path_tree(dims(3)).to_text(), "2-3,2-inf");
        let t = SpanningTree::parse_text(dims(3), " inf-3 , 3-2").unwrap();
        assert_eq!(t.to_text(), "2-3,3-inf");
        let d = dims(3);
        assert!(matches!(
            SpanningTree::parse_text(d, "2-3,2-3"),
            Err(Error::DuplicateEdge(Edge::Path(2)))
        ));
        assert!(matches!(
            SpanningTree::parse_text(d, "2-3,2-4"),
            Err(Error::LabelOutOfRange { .. })
        ));
        assert!(matches!(
            SpanningTree::parse_text(d, "1-2,2-inf"),
            Err(Error::LabelOutOfRange { .. })
        ));
        assert!(matches!(
            SpanningTree::parse_text(d, "2_3,2-inf"),
            Err(Error::MalformedToken(_))
        ));
        assert!(matches!(
            SpanningTree::parse_text(d, "2-x,2-inf"),
            Err(Error::MalformedToken(_))
        ));
        assert!(matches!(
            SpanningTree::parse_text(d, ""),
            Err(Error::MalformedToken(_))
        ));
        assert!(matches!(
            SpanningTree::parse_text(dims(5), "2-4,2-inf,3-inf,5-inf"),
            Err(Error::EdgeNotInGraph(..))
        ));
        assert!(matches!(
            SpanningTree::parse_text(d, "2-3,2-inf,3-inf"),
            Err(Error::NotATree(3))
        ));
        assert!(matches!(
            SpanningTree::parse_text(d, "inf-inf,2-3"),
            Err(Error::EdgeNotInGraph(..))
        ));
    }

    #[test]
    fn bit_format() {
        assert_eq!(path_tree(dims(3)).to_bits(), "110");
        assert_eq!(path_tree(dims(2)).to_bits(), "1");
        // path {2-3, 3-4} then spokes {2, 5}
        assert_eq!(sixteenth_tree_of_f5().to_bits(), "1101001");
        let d = dims(3);
        assert_eq!(SpanningTree::parse_bits(d, "101").unwrap().to_text(), "2-3,3-inf");
        assert!(matches!(
            SpanningTree::parse_bits(d, "10"),
            Err(Error::WrongLength { expected: 3, found: 2 })
        ));
        assert!(matches!(
            SpanningTree::parse_bits(d, "111"),
            Err(Error::WrongPopcount { expected: 2, found: 3 })
        ));
        assert!(matches!(
            SpanningTree::parse_bits(d, "1x0"),
            Err(Error::InvalidBit('x'))
        ));
        // two spokes joined by 3-4: cycle 3,4,inf; vertex 2 isolated
        assert!(matches!(
            SpanningTree::parse_bits(dims(4), "01011"),
            Err(Error::NotATree(4))
        ));
    }

    #[test]
    fn wide_trees_cross_word_boundaries() {
        let d = dims(100);
        let t = SpanningTree::star(d);
        assert_eq!(t.edge_count(), 99);
        assert!(t.contains(Edge::Spoke(100)));
        assert_eq!(SpanningTree::parse_bits(d, &t.to_bits()).unwrap(), t);
        assert_eq!(SpanningTree::parse_text(d, &t.to_text()).unwrap(), t);
    }

    #[test]
    fn delta_line_format() {
        let m = PivotMove::new(v(3), v(2), INF);
        assert_eq!(m.to_string(), "pivot 3: -2 +inf");
        assert_eq!("pivot 3: -2 +inf".parse::<PivotMove>().unwrap(), m);
        assert!("pivot 3 -2 +inf".parse::<PivotMove>().is_err());
        assert!("pivot 3: +2 -inf".parse::<PivotMove>().is_err());
    }

    #[test]
    fn neighbors_ascending() {
        let d = dims(5);
        assert_eq!(d.neighbors(v(2)), vec![v(3), INF]);
        assert_eq!(d.neighbors(v(4)), vec![v(3), v(5), INF]);
        assert_eq!(d.neighbors(v(5)), vec![v(4), INF]);
        assert_eq!(d.neighbors(INF), vec![v(2), v(3), v(4), v(5)]);
        assert_eq!(dims(2).neighbors(v(2)), vec![INF]);
    }
}
