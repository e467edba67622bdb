//! Brute-force ground truth and listing checks.
//!
//! [`brute_force_trees`] filters every `(n-1)`-subset of the edges through the
//! spanning-tree predicate and never touches either engine. The remaining
//! checks compare engine output against it, against each other, or against
//! the pivot Gray code property.

use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::fan::{self, Edge, FanDims, PivotMove, SpanningTree};
use crate::greedy::GreedyRun;
use crate::rank::{self, Ranker, BASE_LISTINGS};
use crate::recursive::{list_stream, Direction};

/// Largest `n` the exponential checks accept by default.
pub const DEFAULT_CAP: usize = 14;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListingReport {
    pub length: usize,
    pub is_gray: bool,
    /// Index of the first tree that is invalid or not one pivot away from its predecessor.
    pub first_violation: Option<usize>,
    /// Only evaluated by [`check_exhaustive`]; `false` otherwise.
    pub is_exhaustive: bool,
    /// Indices of trees equal to an earlier one.
    pub duplicates: Vec<usize>,
}

fn check_cap(dims: FanDims, cap: usize) -> Result<()> {
    if dims.n() > cap {
        return Err(Error::CapExceeded { n: dims.n(), cap });
    }
    Ok(())
}

/// Every spanning tree of `F_n`, by subset enumeration. `n` must not exceed [`DEFAULT_CAP`].
pub fn brute_force_trees(dims: FanDims) -> Result<HashSet<SpanningTree>> {
    brute_force_trees_capped(dims, DEFAULT_CAP)
}

pub fn brute_force_trees_capped(dims: FanDims, cap: usize) -> Result<HashSet<SpanningTree>> {
    check_cap(dims, cap)?;
    let universe = dims.edge_universe();
    let width = universe.len();
    if width >= 64 {
        return Err(Error::CapExceeded { n: dims.n(), cap: 32 });
    }
    let k = dims.tree_size();
    let mut out = HashSet::new();
    let mut edges: Vec<Edge> = Vec::with_capacity(k);
    let end = 1u64 << width;
    let mut mask = (1u64 << k) - 1;
    while mask < end {
        edges.clear();
        edges.extend((0..width).filter(|&p| mask >> p & 1 == 1).map(|p| universe[p]));
        if fan::is_spanning_tree(dims, &edges) {
            out.insert(SpanningTree::from_edges(dims, edges.iter().copied())?);
        }
        // next mask with the same popcount
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
    Ok(out)
}

/// Whether `b` is `a` with one edge removed and one added, the two sharing an endpoint.
pub fn is_pivot_step(a: &SpanningTree, b: &SpanningTree) -> bool {
    pivot_between(a, b).is_some()
}

/// The move turning `a` into `b`, if they differ by a single pivot.
pub fn pivot_between(a: &SpanningTree, b: &SpanningTree) -> Option<PivotMove> {
    if a.dims() != b.dims() {
        return None;
    }
    let removed: Vec<Edge> = a.edges().filter(|&e| !b.contains(e)).collect();
    let added: Vec<Edge> = b.edges().filter(|&e| !a.contains(e)).collect();
    let (&[r], &[w]) = (removed.as_slice(), added.as_slice()) else {
        return None;
    };
    [r.lo(), r.hi()].into_iter().find_map(|pivot| {
        let other_added = w.other(pivot)?;
        Some(PivotMove::new(pivot, r.other(pivot)?, other_added))
    })
}

/// Incremental pivot Gray code check over a stream of trees.
#[derive(Clone, Debug, Default)]
pub struct PivotGrayChecker {
    prev: Option<SpanningTree>,
    length: usize,
    first_violation: Option<usize>,
}

impl PivotGrayChecker {
    pub fn push(&mut self, tree: &SpanningTree) {
        let ok = tree.is_spanning_tree()
            && self.prev.as_ref().is_none_or(|p| is_pivot_step(p, tree));
        if !ok && self.first_violation.is_none() {
            self.first_violation = Some(self.length);
        }
        self.length += 1;
        match &mut self.prev {
            Some(p) => p.clone_from(tree),
            None => self.prev = Some(tree.clone()),
        }
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn first_violation(&self) -> Option<usize> {
        self.first_violation
    }

    pub fn is_gray(&self) -> bool {
        self.first_violation.is_none()
    }
}

fn duplicate_indices(listing: &[SpanningTree]) -> Vec<usize> {
    let mut seen = HashMap::with_capacity(listing.len());
    listing
        .iter()
        .enumerate()
        .filter(|&(i, t)| *seen.entry(t).or_insert(i) != i)
        .map(|(i, _)| i)
        .collect()
}

/// Checks that consecutive trees differ by exactly one pivot.
pub fn check_pivot_gray(listing: &[SpanningTree]) -> ListingReport {
    let mut checker = PivotGrayChecker::default();
    for t in listing {
        checker.push(t);
    }
    ListingReport {
        length: listing.len(),
        is_gray: checker.is_gray(),
        first_violation: checker.first_violation(),
        is_exhaustive: false,
        duplicates: duplicate_indices(listing),
    }
}

/// Gray check plus comparison with the brute-force tree set.
pub fn check_exhaustive(dims: FanDims, listing: &[SpanningTree]) -> Result<ListingReport> {
    let all = brute_force_trees(dims)?;
    let mut report = check_pivot_gray(listing);
    let listed: HashSet<&SpanningTree> = listing.iter().collect();
    report.is_exhaustive = report.duplicates.is_empty()
        && listing.len() == all.len()
        && all.iter().all(|t| listed.contains(t));
    Ok(report)
}

fn greedy_events(start: SpanningTree) -> Result<Vec<(Option<PivotMove>, SpanningTree)>> {
    Ok(GreedyRun::new(start)?.collect())
}

fn stream_trees(dims: FanDims, direction: Direction) -> Vec<SpanningTree> {
    list_stream(dims, direction)
        .snapshots()
        .map(|(_, t)| t)
        .collect()
}

/// Greedy from the last tree equals the reversed greedy listing from the path,
/// and the reverse stream equals the reversed forward stream.
pub fn check_reversal(dims: FanDims) -> Result<bool> {
    check_cap(dims, DEFAULT_CAP)?;
    let forward: Vec<SpanningTree> = greedy_events(SpanningTree::path(dims))?
        .into_iter()
        .map(|(_, t)| t)
        .collect();
    let last = forward.last().expect("listing is never empty").clone();
    if last != rank::last_tree(dims) {
        return Ok(false);
    }
    let backward: Vec<SpanningTree> = greedy_events(last)?.into_iter().map(|(_, t)| t).collect();
    let greedy_ok = backward.iter().eq(forward.iter().rev());

    let mut gen = stream_trees(dims, Direction::Forward);
    gen.reverse();
    let stream_ok = gen == stream_trees(dims, Direction::Reverse);
    Ok(greedy_ok && stream_ok)
}

/// The recursive stream and the greedy listing agree tree for tree and move for move.
///
/// For `n <= 4` the stream is also compared with the frozen base listings.
pub fn check_engines_agree(dims: FanDims) -> Result<bool> {
    check_cap(dims, DEFAULT_CAP)?;
    let greedy = greedy_events(SpanningTree::path(dims))?;
    let recursive: Vec<_> = list_stream(dims, Direction::Forward).snapshots().collect();
    if greedy != recursive {
        return Ok(false);
    }
    if dims.n() <= 4 {
        let bits: Vec<String> = recursive.iter().map(|(_, t)| t.to_bits()).collect();
        return Ok(bits.iter().eq(BASE_LISTINGS[dims.n() - 2].iter()));
    }
    Ok(true)
}

/// Rank of the `i`-th streamed tree is `i`, and unranking `i` gives it back.
pub fn check_rank_bijection(dims: FanDims) -> Result<bool> {
    let ranker = Ranker::new(dims);
    let mut stream = list_stream(dims, Direction::Forward);
    let mut i = BigUint::ZERO;
    while stream.next().is_some() {
        i += 1u32;
        let tree = stream.tree();
        if ranker.rank(tree)? != i || ranker.unrank(&i)? != *tree {
            return Ok(false);
        }
    }
    Ok(i == ranker.count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fan::Vertex;

    fn dims(n: usize) -> FanDims {
        FanDims::new(n).unwrap()
    }

    #[test]
    fn brute_force_counts() {
        let expected = [1, 3, 8, 21, 55, 144, 377, 987];
        for (n, &want) in (2..).zip(&expected) {
            assert_eq!(brute_force_trees(dims(n)).unwrap().len(), want, "n={n}");
        }
    }

    #[test]
    fn brute_force_cap() {
        assert!(matches!(
            brute_force_trees(dims(15)),
            Err(Error::CapExceeded { n: 15, cap: 14 })
        ));
        assert_eq!(brute_force_trees_capped(dims(3), 3).unwrap().len(), 3);
    }

    #[test]
    fn gray_report_on_listing() {
        let listing = stream_trees(dims(6), Direction::Forward);
        let r = check_pivot_gray(&listing);
        assert!(r.is_gray);
        assert_eq!(r.length, 55);
        assert!(r.duplicates.is_empty());
    }

    #[test]
    fn gray_violation() {
        let d = dims(5);
        let r = check_pivot_gray(&[SpanningTree::path(d), SpanningTree::star(d)]);
        assert!(!r.is_gray);
        assert_eq!(r.first_violation, Some(1));
    }

    #[test]
    fn singleton_is_gray() {
        let r = check_pivot_gray(&[SpanningTree::path(dims(4))]);
        assert!(r.is_gray);
        assert_eq!(r.first_violation, None);
    }

    #[test]
    fn revolving_door_without_shared_endpoint_is_not_pivot() {
        let d = dims(5);
        // 2-3 out, 4-5 in: both trees, but the edges share no endpoint
        let a = SpanningTree::parse_text(d, "2-3,3-4,2-inf,5-inf").unwrap();
        let b = SpanningTree::parse_text(d, "3-4,4-5,2-inf,5-inf").unwrap();
        assert!(!is_pivot_step(&a, &b));
        assert!(!check_pivot_gray(&[a, b]).is_gray);
    }

    #[test]
    fn pivot_detection() {
        let d = dims(5);
        let a = SpanningTree::parse_text(d, "2-inf,2-3,3-4,5-inf").unwrap();
        let b = SpanningTree::parse_text(d, "2-inf,2-3,4-5,5-inf").unwrap();
        let v = Vertex::Finite;
        assert_eq!(pivot_between(&a, &b), Some(PivotMove::new(v(4), v(3), v(5))));
        let p = SpanningTree::path(d);
        let c = SpanningTree::parse_text(d, "2-3,3-4,4-5,5-inf").unwrap();
        assert_eq!(
            pivot_between(&p, &c),
            Some(PivotMove::new(Vertex::Infinity, v(2), v(5)))
        );
        assert_eq!(pivot_between(&a, &a), None);
    }

    #[test]
    fn exhaustive_and_duplicates() {
        let d = dims(5);
        let listing = stream_trees(d, Direction::Forward);
        let r = check_exhaustive(d, &listing).unwrap();
        assert!(r.is_exhaustive && r.is_gray);

        let mut dup = listing.clone();
        dup.push(listing[3].clone());
        let r = check_exhaustive(d, &dup).unwrap();
        assert!(!r.is_exhaustive);
        assert_eq!(r.duplicates, vec![21]);

        let short = &listing[..20];
        assert!(!check_exhaustive(d, short).unwrap().is_exhaustive);
    }

    #[test]
    fn reversal_and_agreement_small() {
        for n in 2..=7 {
            assert!(check_reversal(dims(n)).unwrap(), "n={n}");
            assert!(check_engines_agree(dims(n)).unwrap(), "n={n}");
            assert!(check_rank_bijection(dims(n)).unwrap(), "n={n}");
        }
    }

    #[test]
    fn capped_checks() {
        assert!(check_reversal(dims(15)).is_err());
        assert!(check_engines_agree(dims(15)).is_err());
    }
}
