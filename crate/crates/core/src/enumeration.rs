//! Lexicographic enumeration of stable subsets.

use alloc::vec::Vec;

use crate::ground::GroundSet;
use crate::stable::StableSubset;

/// Iterates all stable k-subsets of `ground` in lexicographic order of their
/// sorted element lists. Matches [`crate::ranking::unrank_stable`]: the i-th
/// item equals the set of rank i.
pub fn enumerate_stable(ground: &GroundSet, k: u32) -> StableEnumerator<'_> {
    let m = ground.len();
    let k = k as usize;
    let state = if k == 0 {
        Some(Vec::new())
    } else if m >= 2 * k {
        // Smallest stable set by position: 0, 2, 4, ...
        Some((0..k).map(|t| 2 * t).collect())
    } else if k == 1 && m >= 1 {
        Some(alloc::vec![0])
    } else {
        None
    };
    StableEnumerator { ground, k, positions: state }
}

/// Iterator state: the position list of the next set to yield, or `None`
/// when exhausted.
pub struct StableEnumerator<'a> {
    ground: &'a GroundSet,
    k: usize,
    positions: Option<Vec<usize>>,
}

impl StableEnumerator<'_> {
    /// Advances `p` to the lexicographically next valid position list.
    ///
    /// Valid means: consecutive positions differ by at least 2, and when the
    /// first position is 0 the last position stays below m - 1 (wraparound).
    fn advance(p: &mut [usize], m: usize) -> bool {
        let k = p.len();
        let mut t = k;
        while t > 0 {
            t -= 1;
            p[t] += 1;
            let wrap_limited = k >= 2 && p[0] == 0 && t > 0;
            let last_limit = if wrap_limited { m - 2 } else { m - 1 };
            if p[t] + 2 * (k - 1 - t) <= last_limit {
                for u in t + 1..k {
                    p[u] = p[u - 1] + 2;
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for StableEnumerator<'_> {
    type Item = StableSubset;

    fn next(&mut self) -> Option<StableSubset> {
        let positions = self.positions.as_mut()?;
        let elements = self.ground.elements();
        let item = StableSubset::from_sorted_unchecked(
            positions.iter().map(|&p| elements[p]).collect(),
        );
        if self.k == 0 || !Self::advance(positions, self.ground.len()) {
            self.positions = None;
        }
        Some(item)
    }
}
