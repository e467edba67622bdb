//! Greedy pivot listing.
//!
//! From a start tree, repeatedly take the highest-priority pivot move that
//! produces a spanning tree not generated yet, and stop when there is none.
//! Moves are prioritized by pivot `u` ascending, then by the endpoint `v` of
//! the removed edge `uv` ascending, then by the endpoint `w` of the added edge
//! `uw` ascending. The hub sorts after every path vertex, including as a pivot.
//!
//! The run remembers every tree it has produced, so memory grows with the
//! listing. Started from the path tree it produces the same listing as
//! [`crate::recursive`], which runs in constant amortized time and linear space.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::fan::{Edge, FanDims, PivotMove, SpanningTree};

/// Trees produced so far, keyed by their canonical bit layout.
#[derive(Debug, Default, Clone)]
pub struct VisitedSet {
    trees: HashSet<SpanningTree>,
}

impl VisitedSet {
    pub fn contains(&self, t: &SpanningTree) -> bool {
        self.trees.contains(t)
    }

    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    fn insert(&mut self, t: SpanningTree) -> bool {
        self.trees.insert(t)
    }
}

/// State of one greedy listing.
///
/// As an iterator it yields `(move, tree)` events: the start tree first with
/// no move, then one event per greedy step.
#[derive(Debug, Clone)]
pub struct GreedyRun {
    dims: FanDims,
    current: SpanningTree,
    visited: VisitedSet,
    started: bool,
}

impl GreedyRun {
    pub fn new(start: SpanningTree) -> Result<Self> {
        if !start.is_spanning_tree() {
            return Err(Error::NotATree(start.dims().n()));
        }
        let mut visited = VisitedSet::default();
        visited.insert(start.clone());
        Ok(GreedyRun {
            dims: start.dims(),
            current: start,
            visited,
            started: false,
        })
    }

    /// Overrides the visited set, e.g. to resume a listing mid-way.
    ///
    /// `current` is added to `visited` if missing.
    pub fn resume(current: SpanningTree, visited: impl IntoIterator<Item = SpanningTree>) -> Result<Self> {
        let mut run = Self::new(current)?;
        for t in visited {
            if t.dims() != run.dims {
                return Err(Error::DimensionMismatch {
                    expected: run.dims.n(),
                    found: t.dims().n(),
                });
            }
            run.visited.insert(t);
        }
        run.started = true;
        Ok(run)
    }

    pub fn dims(&self) -> FanDims {
        self.dims
    }

    pub fn current(&self) -> &SpanningTree {
        &self.current
    }

    pub fn visited(&self) -> &VisitedSet {
        &self.visited
    }

    pub fn emitted_count(&self) -> usize {
        self.visited.len()
    }

    /// The highest-priority move leading to a new spanning tree, if any.
    pub fn next_move(&self) -> Option<PivotMove> {
        let mut candidate = self.current.clone();
        for pivot in self.dims.vertices() {
            let neighbors = self.dims.neighbors(pivot);
            let edge = |w| Edge::between(pivot, w).expect("neighbor");
            for &removed in neighbors.iter().filter(|&&w| self.current.contains(edge(w))) {
                for &added in neighbors.iter().filter(|&&w| !self.current.contains(edge(w))) {
                    let m = PivotMove::new(pivot, removed, added);
                    candidate.apply_unchecked(m);
                    let fresh = candidate.is_spanning_tree() && !self.visited.contains(&candidate);
                    candidate.apply_unchecked(m.inverse());
                    if fresh {
                        return Some(m);
                    }
                }
            }
        }
        None
    }

    /// Takes one greedy step, returning the move made.
    pub fn step(&mut self) -> Option<PivotMove> {
        let m = self.next_move()?;
        self.current.apply_unchecked(m);
        self.visited.insert(self.current.clone());
        Some(m)
    }
}

impl Iterator for GreedyRun {
    type Item = (Option<PivotMove>, SpanningTree);

    fn next(&mut self) -> Option<Self::Item> {
        if !self.started {
            self.started = true;
            return Some((None, self.current.clone()));
        }
        let m = self.step()?;
        Some((Some(m), self.current.clone()))
    }
}

/// The full greedy listing from `start`. Not necessarily exhaustive.
pub fn greedy_listing(start: &SpanningTree) -> Result<Vec<SpanningTree>> {
    Ok(GreedyRun::new(start.clone())?.map(|(_, t)| t).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::Vertex;

    fn dims(n: usize) -> FanDims {
        FanDims::new(n).unwrap()
    }

    fn tree(n: usize, s: &str) -> SpanningTree {
        SpanningTree::parse_text(dims(n), s).unwrap()
    }

    #[test]
    fn n3_listing_from_path() {
        let listing = greedy_listing(&SpanningTree::path(dims(3))).unwrap();
        let text: Vec<_> = listing.iter().map(|t| t.to_text()).collect();
        assert_eq!(text, ["2-3,2-inf", "2-inf,3-inf", "2-3,3-inf"]);
    }

    #[test]
    fn n3_first_move() {
        let run = GreedyRun::new(SpanningTree::path(dims(3))).unwrap();
        assert_eq!(
            run.next_move(),
            Some(PivotMove::new(Vertex::Finite(3), Vertex::Finite(2), Vertex::Infinity))
        );
    }

    #[test]
    fn n3_exhausted() {
        let d = dims(3);
        let all = ["2-3,2-inf", "2-inf,3-inf", "2-3,3-inf"].map(|s| tree(3, s));
        let run = GreedyRun::resume(all[2].clone(), all.clone()).unwrap();
        assert_eq!(run.next_move(), None);
        assert_eq!(run.dims(), d);
    }

    #[test]
    fn n5_listing_length_and_sixteenth_tree() {
        let listing = greedy_listing(&SpanningTree::path(dims(5))).unwrap();
        assert_eq!(listing.len(), 21);
        assert_eq!(listing[15], tree(5, "2-inf,2-3,3-4,5-inf"));
    }

    #[test]
    fn n5_walkthrough_move_from_sixteenth_tree() {
        let listing = greedy_listing(&SpanningTree::path(dims(5))).unwrap();
        let run = GreedyRun::resume(listing[15].clone(), listing[..16].iter().cloned()).unwrap();
        let v = Vertex::Finite;
        assert_eq!(run.next_move(), Some(PivotMove::new(v(4), v(3), v(5))));
    }

    #[test]
    fn rejects_non_tree_start() {
        let d = dims(4);
        assert!(GreedyRun::new(SpanningTree::empty(d)).is_err());
    }

    #[test]
    fn deterministic_and_distinct() {
        let start = SpanningTree::path(dims(7));
        let a = greedy_listing(&start).unwrap();
        let b = greedy_listing(&start).unwrap();
        assert_eq!(a, b);
        let set: HashSet<_> = a.iter().collect();
        assert_eq!(set.len(), a.len());
    }

    #[test]
    fn n2_singleton() {
        let listing = greedy_listing(&SpanningTree::path(dims(2))).unwrap();
        assert_eq!(listing.len(), 1);
    }
}
