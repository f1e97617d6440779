//! Ranking, unranking, and exact-uniform sampling of stable subsets.
//!
//! The bijection follows the lexicographic enumeration order and splits on
//! whether the smallest ground element is used. Sets using it come first
//! (their remaining elements live on the path obtained by deleting the
//! element and both cyclic neighbors); the rest are stable subsets of the
//! path obtained by deleting the smallest element alone. Within a path the
//! usual combinadic walk applies, driven by a table of path counts.
//!
//! Sampling draws a uniform rank below the exact count and unranks it, so it
//! is exactly uniform for any ground set and any k. Counts that fit in u64
//! use a u64 table; larger instances fall back to arbitrary precision.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::SubAssign;

use num_bigint::{BigUint, RandBigInt};
use num_traits::Zero;
use rand::Rng;

use crate::ground::GroundSet;
use crate::stable::{is_stable, StableSubset};

/// Errors from [`rank_stable`] and [`unrank_stable`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankError {
    /// The rank is not below the number of stable k-subsets.
    OutOfRange { rank: BigUint, count: BigUint },
    /// The set is not a stable subset of the given ground set.
    NotStable,
}

impl fmt::Display for RankError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RankError::OutOfRange { rank, count } => {
                write!(f, "rank {rank} out of range for {count} stable subsets")
            }
            RankError::NotStable => write!(f, "set is not stable in the given ground set"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for RankError {}

/// Errors from sampling constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SampleError {
    /// There are no stable k-subsets of this ground set.
    EmptySupport,
}

impl fmt::Display for SampleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SampleError::EmptySupport => write!(f, "no stable subsets of the requested size"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SampleError {}

/// Count table trait bound: both `u64` and `BigUint` qualify.
trait Count: Clone + Ord + Zero + for<'a> SubAssign<&'a Self> {
    fn add_assign_ref(&mut self, other: &Self);
    fn checked_add_ref(&self, other: &Self) -> Option<Self>;
}

impl Count for u64 {
    fn add_assign_ref(&mut self, other: &Self) {
        *self += *other;
    }
    fn checked_add_ref(&self, other: &Self) -> Option<Self> {
        self.checked_add(*other)
    }
}

impl Count for BigUint {
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
    fn checked_add_ref(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
}

/// `rows[r][len]` = number of stable r-subsets of a path with `len` vertices.
///
/// Built by the recurrence P(r, len) = P(r, len - 1) + P(r - 1, len - 2)
/// (first path vertex unused or used). Returns `None` if any entry overflows
/// the count type (only possible for `u64`).
fn build_rows<T: Count + From<u8>>(m: usize, k: usize) -> Option<Vec<Vec<T>>> {
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(k + 1);
    rows.push(vec![T::from(1u8); m + 1]);
    for r in 1..=k {
        let mut row: Vec<T> = Vec::with_capacity(m + 1);
        row.push(T::zero());
        if m >= 1 {
            row.push(if r == 1 { T::from(1u8) } else { T::zero() });
        }
        for len in 2..=m {
            let value = row[len - 1].checked_add_ref(&rows[r - 1][len - 2])?;
            row.push(value);
        }
        rows.push(row);
    }
    Some(rows)
}

/// Length of the inclusive position interval `[lo, hi]`, zero when empty.
fn interval_len(lo: usize, hi: usize) -> usize {
    if hi >= lo {
        hi - lo + 1
    } else {
        0
    }
}

/// Positions `[2, m - 2]`: what remains after taking position 0 and deleting
/// its two cyclic neighbors.
fn after_first_interval(m: usize) -> (usize, usize) {
    (2, m.saturating_sub(2))
}

fn total_count<T: Count>(rows: &[Vec<T>], m: usize, k: usize) -> T {
    if k == 0 {
        return rows[0][0].clone();
    }
    let (lo, hi) = after_first_interval(m);
    let mut total = rows[k - 1][interval_len(lo, hi)].clone();
    total.add_assign_ref(&rows[k][interval_len(1, m.saturating_sub(1))]);
    total
}

/// Combinadic walk down a path: repeatedly decide the first chosen position.
/// Returns `None` only if `rank` is not below the interval's count.
fn walk_path<T: Count>(
    rows: &[Vec<T>],
    mut lo: usize,
    hi: usize,
    mut k: usize,
    mut rank: T,
    out: &mut Vec<usize>,
) -> Option<()> {
    while k > 0 {
        let mut chosen = None;
        let mut i = lo;
        while i <= hi {
            let rest = if i + 2 <= hi { hi - i - 1 } else { 0 };
            let c = &rows[k - 1][rest];
            if rank < *c {
                chosen = Some(i);
                break;
            }
            rank -= c;
            i += 1;
        }
        let i = chosen?;
        out.push(i);
        lo = i + 2;
        k -= 1;
    }
    Some(())
}

/// Unrank within the cycle order. Returns the chosen positions.
fn unrank_positions<T: Count>(rows: &[Vec<T>], m: usize, k: usize, mut rank: T) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(k);
    if k == 0 {
        return rank.is_zero().then_some(out);
    }
    let (lo, hi) = after_first_interval(m);
    let with_first = &rows[k - 1][interval_len(lo, hi)];
    if rank < *with_first {
        out.push(0);
        walk_path(rows, lo, hi, k - 1, rank, &mut out)?;
    } else {
        rank -= with_first;
        walk_path(rows, 1, m.saturating_sub(1), k, rank, &mut out)?;
    }
    Some(out)
}

/// Rank of a sorted position list within a path interval.
fn rank_path(rows: &[Vec<BigUint>], mut lo: usize, hi: usize, positions: &[usize]) -> BigUint {
    let mut rank = BigUint::zero();
    let mut k = positions.len();
    for &p in positions {
        for i in lo..p {
            let rest = if i + 2 <= hi { hi - i - 1 } else { 0 };
            rank += &rows[k - 1][rest];
        }
        lo = p + 2;
        k -= 1;
    }
    rank
}

fn rank_positions(rows: &[Vec<BigUint>], m: usize, positions: &[usize]) -> BigUint {
    let k = positions.len();
    if k == 0 {
        return BigUint::zero();
    }
    let (lo, hi) = after_first_interval(m);
    if positions[0] == 0 {
        rank_path(rows, lo, hi, &positions[1..])
    } else {
        rows[k - 1][interval_len(lo, hi)].clone() + rank_path(rows, 1, m.saturating_sub(1), positions)
    }
}

/// The stable k-subset of `ground` at position `rank` in lexicographic order.
pub fn unrank_stable(ground: &GroundSet, k: u32, rank: &BigUint) -> Result<StableSubset, RankError> {
    let m = ground.len();
    let k = k as usize;
    let rows = build_rows::<BigUint>(m, k).expect("BigUint never overflows");
    let count = total_count(&rows, m, k);
    if *rank >= count {
        return Err(RankError::OutOfRange { rank: rank.clone(), count });
    }
    let positions =
        unrank_positions(&rows, m, k, rank.clone()).expect("rank checked against count");
    let elements = ground.elements();
    Ok(StableSubset::from_sorted_unchecked(
        positions.into_iter().map(|p| elements[p]).collect(),
    ))
}

/// The lexicographic position of `set` among the stable k-subsets of `ground`.
pub fn rank_stable(ground: &GroundSet, set: &StableSubset) -> Result<BigUint, RankError> {
    if !is_stable(ground, set.elements()) {
        return Err(RankError::NotStable);
    }
    let m = ground.len();
    let k = set.k();
    let rows = build_rows::<BigUint>(m, k).expect("BigUint never overflows");
    let positions: Vec<usize> = set
        .elements()
        .iter()
        .map(|&e| ground.position_of(e).expect("membership implied by stability"))
        .collect();
    Ok(rank_positions(&rows, m, &positions))
}

enum Tables {
    Small { rows: Vec<Vec<u64>>, total: u64 },
    Big { rows: Vec<Vec<BigUint>>, total: BigUint },
}

/// Exact-uniform sampler over the stable k-subsets of a fixed ground set.
///
/// Builds the count table once; each [`sample`](StableSampler::sample) is a
/// uniform rank draw plus one combinadic walk.
pub struct StableSampler {
    elements: Vec<u32>,
    k: usize,
    tables: Tables,
}

impl StableSampler {
    pub fn new(ground: &GroundSet, k: u32) -> Result<Self, SampleError> {
        let m = ground.len();
        let k = k as usize;
        let tables = match build_rows::<u64>(m, k) {
            Some(rows) => {
                let total = total_count(&rows, m, k);
                Tables::Small { rows, total }
            }
            None => {
                let rows = build_rows::<BigUint>(m, k).expect("BigUint never overflows");
                let total = total_count(&rows, m, k);
                Tables::Big { rows, total }
            }
        };
        let empty = match &tables {
            Tables::Small { total, .. } => *total == 0,
            Tables::Big { total, .. } => total.is_zero(),
        };
        if empty {
            return Err(SampleError::EmptySupport);
        }
        Ok(StableSampler { elements: ground.elements().to_vec(), k, tables })
    }

    /// Number of stable k-subsets being sampled from.
    pub fn count(&self) -> BigUint {
        match &self.tables {
            Tables::Small { total, .. } => BigUint::from(*total),
            Tables::Big { total, .. } => total.clone(),
        }
    }

    /// Draws one stable subset exactly uniformly.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> StableSubset {
        let m = self.elements.len();
        let positions = match &self.tables {
            Tables::Small { rows, total } => {
                let rank = rng.gen_range(0..*total);
                unrank_positions(rows, m, self.k, rank).expect("rank below total")
            }
            Tables::Big { rows, total } => {
                let rank = rng.gen_biguint_below(total);
                unrank_positions(rows, m, self.k, rank).expect("rank below total")
            }
        };
        StableSubset::from_sorted_unchecked(
            positions.into_iter().map(|p| self.elements[p]).collect(),
        )
    }
}

/// One uniform draw from the stable k-subsets of `ground`.
///
/// Builds a fresh table per call; use [`StableSampler`] for repeated draws.
pub fn sample_uniform_stable<R: Rng + ?Sized>(
    ground: &GroundSet,
    k: u32,
    rng: &mut R,
) -> Result<StableSubset, SampleError> {
    Ok(StableSampler::new(ground, k)?.sample(rng))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting::count_stable_cycle;
    use crate::enumeration::enumerate_stable;
    use crate::rng;

    #[test]
    fn hexagon_examples() {
        let g = GroundSet::full(6);
        let first = unrank_stable(&g, 2, &BigUint::zero()).unwrap();
        assert_eq!(first.elements(), &[1, 3]);
        let last = unrank_stable(&g, 2, &BigUint::from(8u32)).unwrap();
        assert_eq!(last.elements(), &[4, 6]);
        let set = StableSubset::new(alloc::vec![2, 5], &g).unwrap();
        assert_eq!(rank_stable(&g, &set).unwrap(), BigUint::from(4u32));
    }

    #[test]
    fn out_of_range_and_not_stable() {
        let g = GroundSet::full(6);
        assert!(matches!(
            unrank_stable(&g, 2, &BigUint::from(9u32)),
            Err(RankError::OutOfRange { .. })
        ));
        let host = GroundSet::full(8);
        let foreign = StableSubset::new(alloc::vec![4, 6], &host).unwrap();
        let induced = GroundSet::from_elements(8, alloc::vec![1, 3, 4, 6]).unwrap();
        assert_eq!(rank_stable(&induced, &foreign), Err(RankError::NotStable));
    }

    #[test]
    fn bijection_against_enumeration() {
        for m in 1..=11u32 {
            for k in 0..=5u32 {
                let g = GroundSet::full(m);
                let listed: Vec<StableSubset> = enumerate_stable(&g, k).collect();
                assert_eq!(
                    BigUint::from(listed.len()),
                    count_stable_cycle(m as u64, k as u64)
                );
                for (i, set) in listed.iter().enumerate() {
                    let unranked = unrank_stable(&g, k, &BigUint::from(i)).unwrap();
                    assert_eq!(&unranked, set, "m={m} k={k} rank={i}");
                    assert_eq!(rank_stable(&g, set).unwrap(), BigUint::from(i));
                }
            }
        }
    }

    #[test]
    fn bijection_on_a_sub_ground_set() {
        let g = GroundSet::from_elements(14, alloc::vec![1, 2, 3, 5, 8, 9, 11, 12, 14]).unwrap();
        for k in 1..=4u32 {
            for (i, set) in enumerate_stable(&g, k).enumerate() {
                let unranked = unrank_stable(&g, k, &BigUint::from(i)).unwrap();
                assert_eq!(unranked, set);
                assert_eq!(rank_stable(&g, &set).unwrap(), BigUint::from(i));
            }
        }
    }

    #[test]
    fn square_sampler_is_exactly_supported() {
        let g = GroundSet::full(4);
        let sampler = StableSampler::new(&g, 2).unwrap();
        assert_eq!(sampler.count(), BigUint::from(2u32));
        let mut rng = rng::from_seed(11);
        let mut seen = [0u32; 2];
        for _ in 0..200 {
            let s = sampler.sample(&mut rng);
            match s.elements() {
                [1, 3] => seen[0] += 1,
                [2, 4] => seen[1] += 1,
                other => panic!("unexpected sample {other:?}"),
            }
        }
        assert!(seen[0] > 60 && seen[1] > 60, "seen={seen:?}");
    }

    #[test]
    fn empty_support_is_an_error() {
        let g = GroundSet::full(5);
        assert_eq!(StableSampler::new(&g, 3).err(), Some(SampleError::EmptySupport));
        assert!(sample_uniform_stable(&g, 3, &mut rng::from_seed(0)).is_err());
    }

    #[test]
    fn big_table_walk_agrees_with_small() {
        let k = 3usize;
        let small = build_rows::<u64>(12, k).unwrap();
        let big = build_rows::<BigUint>(12, k).unwrap();
        let total = total_count(&small, 12, k);
        for r in 0..total {
            let a = unrank_positions(&small, 12, k, r).unwrap();
            let b = unrank_positions(&big, 12, k, BigUint::from(r)).unwrap();
            assert_eq!(a, b);
        }
    }
}
