//! Stable subsets: the vertices of Schrijver graphs.
//!
//! A subset of a cyclically ordered ground set is *stable* if it contains no
//! two cyclically consecutive elements. Stability is relative to the ground
//! set: `{4, 6}` is stable inside `[6]` but not inside `{1, 3, 4, 6}`, where
//! removing 5 has made 4 and 6 neighbors. Stability is monotone the other
//! way: a set stable in `X` stays stable in any superset of `X`.

use alloc::vec::Vec;
use core::fmt;

use crate::ground::GroundSet;

/// Errors from [`StableSubset::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StableSubsetError {
    /// An element does not belong to the ground set.
    NotMember { element: u32 },
    /// Duplicate element.
    Duplicate { element: u32 },
    /// The set contains two cyclically consecutive ground elements.
    NotStable,
}

impl fmt::Display for StableSubsetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StableSubsetError::NotMember { element } => {
                write!(f, "element {element} is not in the ground set")
            }
            StableSubsetError::Duplicate { element } => {
                write!(f, "element {element} appears more than once")
            }
            StableSubsetError::NotStable => {
                write!(f, "set contains two cyclically consecutive elements")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for StableSubsetError {}

/// A stable subset, stored as a strictly increasing element list.
///
/// The `Ord` derive gives exactly the lexicographic order used by
/// enumeration and ranking.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StableSubset {
    elements: Vec<u32>,
}

impl StableSubset {
    /// Validates `elements` (any order, no duplicates) as a stable subset of
    /// `ground` and returns it in canonical sorted form.
    pub fn new(mut elements: Vec<u32>, ground: &GroundSet) -> Result<Self, StableSubsetError> {
        elements.sort_unstable();
        for win in elements.windows(2) {
            if win[0] == win[1] {
                return Err(StableSubsetError::Duplicate { element: win[0] });
            }
        }
        for &e in &elements {
            if !ground.contains(e) {
                return Err(StableSubsetError::NotMember { element: e });
            }
        }
        if !stable_positions(ground, &elements) {
            return Err(StableSubsetError::NotStable);
        }
        Ok(StableSubset { elements })
    }

    /// Internal constructor for element lists already known to be sorted,
    /// distinct, and stable in the intended ground set.
    pub(crate) fn from_sorted_unchecked(elements: Vec<u32>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        StableSubset { elements }
    }

    /// Number of elements.
    pub fn k(&self) -> usize {
        self.elements.len()
    }

    /// The elements in increasing order.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    /// Whether `element` belongs to the set.
    pub fn contains(&self, element: u32) -> bool {
        self.elements.binary_search(&element).is_ok()
    }
}

impl fmt::Display for StableSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Whether `elements` (any order) is a stable subset of `ground`.
///
/// Returns `false` for sets with duplicates, members outside the ground set,
/// or two cyclically consecutive members. The empty set is stable.
pub fn is_stable(ground: &GroundSet, elements: &[u32]) -> bool {
    let mut sorted: Vec<u32> = elements.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return false;
    }
    if sorted.iter().any(|&e| !ground.contains(e)) {
        return false;
    }
    stable_positions(ground, &sorted)
}

/// Adjacency test on sorted, validated member lists.
///
/// With positions `p_1 < ... < p_k` inside a ground set of size m, stability
/// is: consecutive positions differ by at least 2, and for k >= 2 the pair
/// (first position 0, last position m - 1) is forbidden by the wraparound.
fn stable_positions(ground: &GroundSet, sorted: &[u32]) -> bool {
    let k = sorted.len();
    if k <= 1 {
        return true;
    }
    let m = ground.len();
    if m < 2 * k {
        return false;
    }
    let mut prev = ground
        .position_of(sorted[0])
        .expect("membership checked by caller");
    let first = prev;
    for &e in &sorted[1..] {
        let pos = ground.position_of(e).expect("membership checked by caller");
        if pos - prev < 2 {
            return false;
        }
        prev = pos;
    }
    !(first == 0 && prev == m - 1)
}

/// Whether two subsets share no element. Linear merge over the sorted lists.
pub fn are_disjoint(a: &StableSubset, b: &StableSubset) -> bool {
    disjoint_sorted(a.elements(), b.elements())
}

/// Disjointness of two strictly increasing slices.
pub(crate) fn disjoint_sorted(a: &[u32], b: &[u32]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => return false,
        }
    }
    true
}
