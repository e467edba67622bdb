//! Counting, ranking and unranking within the listing.
//!
//! `F_n` has `t_n = f_{2(n-1)}` spanning trees, where `f` is the Fibonacci
//! sequence with `f_1 = f_2 = 1`. The listing of `F_n` (`n >= 5`) decomposes
//! into stages of `t_{n-1}`, `t_{n-1}`, `t_{n-2}` and `t_{n-2} - t_{n-3}` trees
//! (see [`crate::recursive`]), so the position of a tree is found by checking
//! which of the edges
//!
//! * `e1 = v_n v_{n-1}`, `e2 = v_n v_inf`,
//! * `e3 = v_{n-2} v_inf`, `e4 = v_{n-2} v_{n-1}`
//!
//! it contains and recursing on `F_{n-1}` or `F_{n-2}`. Orders 2, 3 and 4 are
//! looked up in fixed tables. Both directions do a constant number of big
//! integer operations per level and at most `n` levels.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fan::{Edge, FanDims, SpanningTree};

/// Unbounded count or 1-indexed rank.
pub type RankInt = BigUint;

/// Listings of `F_2`, `F_3` and `F_4` as bit strings, in order.
pub const BASE_LISTINGS: [&[&str]; 3] = [
    &["1"],
    &["110", "011", "101"],
    &["11100", "01110", "11010", "10011", "00111", "10101", "01101", "11001"],
];

fn base_listing(m: usize) -> &'static [&'static str] {
    BASE_LISTINGS[m - 2]
}

/// Stage sizes of the listing of `F_n`, `n >= 5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StageSizes {
    pub s1: RankInt,
    pub s2: RankInt,
    pub s3: RankInt,
    pub s4: RankInt,
}

impl StageSizes {
    pub fn total(&self) -> RankInt {
        &self.s1 + &self.s2 + &self.s3 + &self.s4
    }
}

/// Tree counts `t_1..=t_n` for one order, shared across rank/unrank calls.
#[derive(Clone, Debug)]
pub struct Ranker {
    dims: FanDims,
    // t[m] = t_m = f_{2(m-1)}; t[0] unused
    t: Vec<BigUint>,
}

impl Ranker {
    pub fn new(dims: FanDims) -> Self {
        let n = dims.n();
        let fib = fibonacci(2 * (n - 1));
        let mut t = vec![BigUint::zero(); n + 1];
        for (m, slot) in t.iter_mut().enumerate().skip(1) {
            *slot = fib[2 * (m - 1)].clone();
        }
        Ranker { dims, t }
    }

    pub fn dims(&self) -> FanDims {
        self.dims
    }

    /// `t_m` for `1 <= m <= n`.
    pub fn trees(&self, m: usize) -> &BigUint {
        &self.t[m]
    }

    pub fn count(&self) -> RankInt {
        self.t[self.dims.n()].clone()
    }

    pub fn stage_sizes(&self) -> Result<StageSizes> {
        let n = self.dims.n();
        if n < 5 {
            return Err(Error::NTooSmall {
                what: "stage decomposition",
                min: 5,
                n,
            });
        }
        Ok(StageSizes {
            s1: self.t[n - 1].clone(),
            s2: self.t[n - 1].clone(),
            s3: self.t[n - 2].clone(),
            s4: &self.t[n - 2] - &self.t[n - 3],
        })
    }

    pub fn rank(&self, tree: &SpanningTree) -> Result<RankInt> {
        self.rank_traced(tree).map(|(r, _)| r)
    }

    /// Rank plus the number of recursion levels visited.
    pub fn rank_traced(&self, tree: &SpanningTree) -> Result<(RankInt, usize)> {
        if tree.dims() != self.dims {
            return Err(Error::DimensionMismatch {
                expected: self.dims.n(),
                found: tree.dims().n(),
            });
        }
        if !tree.is_spanning_tree() {
            return Err(Error::NotATree(self.dims.n()));
        }

        // rank = offset + sign * (rank of the current sub-view)
        let mut offset = BigInt::zero();
        let mut negate = false;
        let mut m = self.dims.n();
        // the sub-view's spoke at v_m is present even though the tree holds v_m v_{m+1}
        let mut lifted_spoke = false;
        let mut levels = 0;
        loop {
            levels += 1;
            if m <= 4 {
                let r = BigInt::from(base_rank(tree, m, lifted_spoke)?);
                let total = if negate { offset - r } else { offset + r };
                return match total.to_biguint() {
                    Some(r) if !r.is_zero() => Ok((r, levels)),
                    _ => Err(Error::Internal(format!("non-positive rank for {tree}"))),
                };
            }
            let spoke = |i: usize| tree.has_spoke(i) || (lifted_spoke && i == m);
            let e1 = tree.has_path(m - 1);
            let e2 = spoke(m);
            let e3 = spoke(m - 2);
            let e4 = tree.has_path(m - 2);
            let two_prev = BigInt::from(&self.t[m - 1] * 2u32);

            let (constant, flip, next, lift) = if e1 && e2 && e3 {
                let c = &two_prev + BigInt::from(&self.t[m - 2] * 2u32) + 1;
                (c, true, m - 2, false)
            } else if e1 && e2 && e4 {
                (two_prev, false, m - 2, true)
            } else if e1 && e2 {
                (two_prev, false, m - 2, false)
            } else if e2 {
                (two_prev + 1, true, m - 1, false)
            } else if e1 {
                (BigInt::zero(), false, m - 1, false)
            } else {
                return Err(Error::Internal(format!(
                    "v_{m} has no edge within the sub-view of {tree}"
                )));
            };
            if negate {
                offset -= constant;
            } else {
                offset += constant;
            }
            negate ^= flip;
            m = next;
            lifted_spoke = lift;
        }
    }

    pub fn unrank(&self, r: &RankInt) -> Result<SpanningTree> {
        self.unrank_traced(r).map(|(t, _)| t)
    }

    /// Tree at rank `r` plus the number of recursion levels visited.
    pub fn unrank_traced(&self, r: &RankInt) -> Result<(SpanningTree, usize)> {
        let n = self.dims.n();
        if r.is_zero() || *r > self.t[n] {
            return Err(Error::RankOutOfRange {
                max: self.t[n].to_string(),
            });
        }
        let mut tree = SpanningTree::empty(self.dims);
        let mut r = r.clone();
        let mut m = n;
        // edge standing in for v_m v_inf in the current sub-view
        let mut stand_in = Edge::Spoke(n);
        let mut levels = 0;
        loop {
            levels += 1;
            if m <= 4 {
                let idx: usize = usize::try_from(&r)
                    .map_err(|_| Error::Internal(format!("base rank {r} too large")))?;
                let sub = FanDims::new(m)?;
                let bits = base_listing(m)
                    .get(idx - 1)
                    .ok_or_else(|| Error::Internal(format!("base rank {idx} beyond F_{m}")))?;
                for (p, c) in bits.chars().enumerate() {
                    if c == '1' {
                        let e = sub.edge_at(p).expect("base table width");
                        tree.insert(if e == Edge::Spoke(m) { stand_in } else { e });
                    }
                }
                break;
            }
            let t1 = &self.t[m - 1];
            let t2 = &self.t[m - 2];
            let two_t1 = t1 * 2u32;
            let e1 = Edge::Path(m - 1);
            if r <= *t1 {
                tree.insert(e1);
                stand_in = Edge::Spoke(m - 1);
                m -= 1;
            } else if r <= two_t1 {
                tree.insert(stand_in);
                r = &two_t1 + 1u32 - &r;
                stand_in = Edge::Spoke(m - 1);
                m -= 1;
            } else if r <= &two_t1 + t2 {
                tree.insert(e1);
                tree.insert(stand_in);
                r -= &two_t1;
                stand_in = Edge::Path(m - 2);
                m -= 2;
            } else {
                tree.insert(e1);
                tree.insert(stand_in);
                r = &two_t1 + t2 * 2u32 + 1u32 - &r;
                stand_in = Edge::Spoke(m - 2);
                m -= 2;
            }
        }
        if !tree.is_spanning_tree() {
            return Err(Error::Internal(format!("unrank built a non-tree {tree}")));
        }
        Ok((tree, levels))
    }

    pub fn last_tree(&self) -> SpanningTree {
        self.unrank(&self.count())
            .expect("the last rank is always in range")
    }
}

/// Fibonacci numbers `f_0..=f_k` with `f_0 = 0`, `f_1 = f_2 = 1`.
fn fibonacci(k: usize) -> Vec<BigUint> {
    let mut f = Vec::with_capacity(k + 1);
    f.push(BigUint::zero());
    f.push(BigUint::one());
    while f.len() <= k {
        let next = &f[f.len() - 1] + &f[f.len() - 2];
        f.push(next);
    }
    f.truncate(k + 1);
    f
}

/// Rank within the base listing of `F_m`, reading only edges among `v_2..v_m`.
fn base_rank(tree: &SpanningTree, m: usize, lifted_spoke: bool) -> Result<usize> {
    let mut bits = String::with_capacity(2 * m - 3);
    for i in 2..m {
        bits.push(if tree.has_path(i) { '1' } else { '0' });
    }
    for i in 2..=m {
        let on = tree.has_spoke(i) || (lifted_spoke && i == m);
        bits.push(if on { '1' } else { '0' });
    }
    base_listing(m)
        .iter()
        .position(|&b| b == bits)
        .map(|p| p + 1)
        .ok_or_else(|| Error::Internal(format!("sub-tree {bits} of F_{m} not in base listing")))
}

/// Number of spanning trees of `F_n`.
pub fn count(dims: FanDims) -> RankInt {
    let fib = fibonacci(2 * (dims.n() - 1));
    fib[2 * (dims.n() - 1)].clone()
}

pub fn stage_sizes(dims: FanDims) -> Result<StageSizes> {
    Ranker::new(dims).stage_sizes()
}

/// 1-indexed position of `tree` in the listing of its fan graph.
pub fn rank(tree: &SpanningTree) -> Result<RankInt> {
    Ranker::new(tree.dims()).rank(tree)
}

/// The tree at 1-indexed position `r`.
pub fn unrank(dims: FanDims, r: &RankInt) -> Result<SpanningTree> {
    Ranker::new(dims).unrank(r)
}

/// Last tree of the listing, computed without generating it.
pub fn last_tree(dims: FanDims) -> SpanningTree {
    Ranker::new(dims).last_tree()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(n: usize) -> FanDims {
        FanDims::new(n).unwrap()
    }

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn counts() {
        assert_eq!(count(dims(2)), big(1));
        assert_eq!(count(dims(3)), big(3));
        assert_eq!(count(dims(4)), big(8));
        assert_eq!(count(dims(5)), big(21));
        assert_eq!(count(dims(6)), big(55));
        assert_eq!(count(dims(12)), big(17711));
        let r = Ranker::new(dims(30));
        for m in 2..=30 {
            assert_eq!(r.trees(m), &count(dims(m)));
        }
    }

    #[test]
    fn count_exceeds_u64() {
        // t_48 = f_94 = 19740274219868223167 > u64::MAX
        assert_eq!(count(dims(48)).to_string(), "19740274219868223167");
        assert!(count(dims(48)) > big(u64::MAX));
    }

    #[test]
    fn stages() {
        let s = stage_sizes(dims(6)).unwrap();
        assert_eq!((s.s1.clone(), s.s2.clone(), s.s3.clone(), s.s4.clone()), (big(21), big(21), big(8), big(5)));
        assert_eq!(s.total(), big(55));
        let s = stage_sizes(dims(5)).unwrap();
        assert_eq!((s.s1.clone(), s.s2.clone(), s.s3.clone(), s.s4.clone()), (big(8), big(8), big(3), big(2)));
        assert!(stage_sizes(dims(4)).is_err());
        for n in 5..80 {
            assert_eq!(stage_sizes(dims(n)).unwrap().total(), count(dims(n)));
        }
    }

    #[test]
    fn anchor_ranks() {
        let d = dims(5);
        let t16 = SpanningTree::parse_text(d, "2-inf,2-3,3-4,5-inf").unwrap();
        let t17 = SpanningTree::parse_text(d, "2-inf,2-3,4-5,5-inf").unwrap();
        assert_eq!(rank(&t16).unwrap(), big(16));
        assert_eq!(rank(&t17).unwrap(), big(17));
        assert_eq!(unrank(d, &big(16)).unwrap(), t16);
        for n in 2..40 {
            assert_eq!(rank(&SpanningTree::path(dims(n))).unwrap(), big(1));
            assert_eq!(unrank(dims(n), &big(1)).unwrap(), SpanningTree::path(dims(n)));
        }
    }

    #[test]
    fn last_trees() {
        assert_eq!(last_tree(dims(2)).to_text(), "2-inf");
        assert_eq!(last_tree(dims(3)).to_text(), "2-3,3-inf");
    }

    #[test]
    fn unrank_range_errors() {
        let d = dims(5);
        let err = unrank(d, &big(22)).unwrap_err();
        assert_eq!(err.to_string(), "rank out of range 1..21");
        assert!(unrank(d, &big(0)).is_err());
        assert!(unrank(d, &big(21)).is_ok());
    }

    #[test]
    fn rank_rejects_non_trees() {
        assert!(matches!(
            rank(&SpanningTree::empty(dims(6))),
            Err(Error::NotATree(6))
        ));
    }

    #[test]
    fn bijection_small() {
        for n in 2..=9 {
            let r = Ranker::new(dims(n));
            let total: u64 = r.count().try_into().unwrap();
            for k in 1..=total {
                let (t, levels) = r.unrank_traced(&big(k)).unwrap();
                assert!(levels <= n);
                let (back, levels) = r.rank_traced(&t).unwrap();
                assert_eq!(back, big(k), "n={n} {t}");
                assert!(levels <= n);
            }
        }
    }
}
