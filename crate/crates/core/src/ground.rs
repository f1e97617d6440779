//! Cyclically ordered ground sets.
//!
//! A [`GroundSet`] is a subset `X` of the universe `[n] = {1, ..., n}`,
//! carrying the cyclic order induced from `[n]`: the successor of an element
//! is the next larger member of `X`, wrapping from the largest back to the
//! smallest. Removing an element therefore merges its two cyclic neighbors
//! into an adjacent pair, which is how the solver shrinks instances.

use alloc::vec::Vec;
use core::fmt;

/// Errors from [`GroundSet::from_elements`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroundSetError {
    /// The universe size must be positive.
    EmptyUniverse,
    /// Elements must be strictly increasing.
    NotStrictlyIncreasing { position: usize },
    /// Element outside `[1, ambient_n]`.
    ElementOutOfRange { element: u32, ambient_n: u32 },
}

impl fmt::Display for GroundSetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundSetError::EmptyUniverse => write!(f, "ambient universe size must be positive"),
            GroundSetError::NotStrictlyIncreasing { position } => {
                write!(f, "elements must be strictly increasing (violated at index {position})")
            }
            GroundSetError::ElementOutOfRange { element, ambient_n } => {
                write!(f, "element {element} outside universe [1, {ambient_n}]")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GroundSetError {}

/// A subset of `[n]` with the induced cyclic order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroundSet {
    ambient_n: u32,
    elements: Vec<u32>,
}

impl GroundSet {
    /// The full universe `[1, n]`.
    ///
    /// # Panics
    ///
    /// Panics if `n == 0`.
    pub fn full(n: u32) -> Self {
        assert!(n >= 1, "ambient universe size must be positive");
        GroundSet {
            ambient_n: n,
            elements: (1..=n).collect(),
        }
    }

    /// A subset of `[ambient_n]` given as a strictly increasing element list.
    pub fn from_elements(ambient_n: u32, elements: Vec<u32>) -> Result<Self, GroundSetError> {
        if ambient_n == 0 {
            return Err(GroundSetError::EmptyUniverse);
        }
        for (i, &e) in elements.iter().enumerate() {
            if e < 1 || e > ambient_n {
                return Err(GroundSetError::ElementOutOfRange { element: e, ambient_n });
            }
            if i > 0 && elements[i - 1] >= e {
                return Err(GroundSetError::NotStrictlyIncreasing { position: i });
            }
        }
        Ok(GroundSet { ambient_n, elements })
    }

    /// Size of the original universe.
    pub fn ambient_n(&self) -> u32 {
        self.ambient_n
    }

    /// Number of elements currently in the set.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Whether the set is empty.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The elements in increasing order.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    /// Whether `element` belongs to the set.
    pub fn contains(&self, element: u32) -> bool {
        self.elements.binary_search(&element).is_ok()
    }

    /// Index of `element` in the increasing order, if present.
    pub fn position_of(&self, element: u32) -> Option<usize> {
        self.elements.binary_search(&element).ok()
    }

    /// The cyclic successor of `element` within the set.
    ///
    /// Returns `None` if `element` is not a member. On a singleton set the
    /// element is its own successor.
    pub fn cyclic_successor(&self, element: u32) -> Option<u32> {
        let pos = self.position_of(element)?;
        let next = (pos + 1) % self.elements.len();
        Some(self.elements[next])
    }

    /// Removes `element`, returning whether it was present.
    pub fn remove(&mut self, element: u32) -> bool {
        match self.elements.binary_search(&element) {
            Ok(pos) => {
                self.elements.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    /// A copy of the set with `element` removed (if present).
    pub fn without(&self, element: u32) -> Self {
        let mut copy = self.clone();
        copy.remove(element);
        copy
    }
}

impl fmt::Display for GroundSet {
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

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn full_universe() {
        let g = GroundSet::full(6);
        assert_eq!(g.ambient_n(), 6);
        assert_eq!(g.elements(), &[1, 2, 3, 4, 5, 6]);
        assert_eq!(g.cyclic_successor(6), Some(1));
        assert_eq!(g.cyclic_successor(2), Some(3));
    }

    #[test]
    fn removal_merges_neighbors() {
        let mut g = GroundSet::full(6);
        g.remove(2);
        g.remove(5);
        assert_eq!(g.elements(), &[1, 3, 4, 6]);
        assert_eq!(g.cyclic_successor(1), Some(3));
        assert_eq!(g.cyclic_successor(4), Some(6));
        assert_eq!(g.cyclic_successor(6), Some(1));
        assert_eq!(g.cyclic_successor(2), None);
    }

    #[test]
    fn from_elements_validation() {
        assert!(GroundSet::from_elements(6, vec![1, 3, 4, 6]).is_ok());
        assert_eq!(
            GroundSet::from_elements(0, vec![]),
            Err(GroundSetError::EmptyUniverse)
        );
        assert!(matches!(
            GroundSet::from_elements(6, vec![1, 1, 3]),
            Err(GroundSetError::NotStrictlyIncreasing { position: 1 })
        ));
        assert!(matches!(
            GroundSet::from_elements(6, vec![0, 3]),
            Err(GroundSetError::ElementOutOfRange { element: 0, .. })
        ));
        assert!(matches!(
            GroundSet::from_elements(6, vec![3, 7]),
            Err(GroundSetError::ElementOutOfRange { element: 7, .. })
        ));
    }

    #[test]
    fn singleton_is_its_own_successor() {
        let g = GroundSet::from_elements(5, vec![4]).unwrap();
        assert_eq!(g.cyclic_successor(4), Some(4));
    }
}
