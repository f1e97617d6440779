//! Exact counts of stable subsets of paths and cycles.
//!
//! A k-subset of the vertices of a path (or cycle) on m vertices is *stable*
//! if it contains no two adjacent vertices. For paths the count is the
//! classical `C(m - k + 1, k)`; for cycles it is
//! `C(m - k + 1, k) - C(m - k - 1, k - 2)`, which is exactly the number of
//! vertices of the Schrijver graph `S(m, k)`.
//!
//! All counts are arbitrary precision.

use alloc::string::String;
use core::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Binomial coefficient `C(a, b)`, with `C(a, b) = 0` whenever `b > a`.
///
/// Computed by the multiplicative formula; every intermediate division is
/// exact because `C(a, b)` is built up as a product of consecutive binomials.
pub fn binomial(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut result = BigUint::one();
    for i in 1..=b {
        result = result * BigUint::from(a - b + i) / BigUint::from(i);
    }
    result
}

/// Number of stable k-subsets of a path on m vertices: `C(m - k + 1, k)`.
///
/// Degenerate inputs follow the zero conventions of the binomial: the count
/// is 1 for `k = 0` and 0 whenever `m < 2k - 1`.
pub fn count_stable_path(m: u64, k: u64) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    if m + 1 < 2 * k {
        return BigUint::zero();
    }
    binomial(m - k + 1, k)
}

/// Number of stable k-subsets of a cycle on m vertices, i.e. the number of
/// vertices of `S(m, k)`: `C(m - k + 1, k) - C(m - k - 1, k - 2)`.
///
/// Conventions: 1 for `k = 0`, `m` for `k = 1`, and 0 for `m < 2k`.
pub fn count_stable_cycle(m: u64, k: u64) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    if k == 1 {
        return BigUint::from(m);
    }
    if m < 2 * k {
        return BigUint::zero();
    }
    binomial(m - k + 1, k) - binomial(m - k - 1, k - 2)
}

/// Errors from [`vertex_count_lower_bound`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CountingError {
    /// `alpha` must be at least 2.
    AlphaBelowTwo,
    /// The bound needs `m >= alpha * k`.
    GroundBelowAlphaK { m: u64, k: u64, alpha: String },
}

impl fmt::Display for CountingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountingError::AlphaBelowTwo => write!(f, "alpha must be at least 2"),
            CountingError::GroundBelowAlphaK { m, k, alpha } => {
                write!(f, "need m >= alpha * k, got m = {m}, k = {k}, alpha = {alpha}")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for CountingError {}

/// Exact lower bound `(1 - 1/(alpha - 1)^2) * C(m - k + 1, k)` on the number
/// of vertices of `S(m, k)`, valid whenever `m >= alpha * k` and `alpha >= 2`.
pub fn vertex_count_lower_bound(
    m: u64,
    k: u64,
    alpha: &BigRational,
) -> Result<BigRational, CountingError> {
    let two = BigRational::from_integer(2u32.into());
    if alpha < &two {
        return Err(CountingError::AlphaBelowTwo);
    }
    let m_rat = BigRational::from_integer(m.into());
    let k_rat = BigRational::from_integer(k.into());
    if m_rat < alpha * &k_rat {
        return Err(CountingError::GroundBelowAlphaK {
            m,
            k,
            alpha: alloc::format!("{alpha}"),
        });
    }
    let one = BigRational::one();
    let shifted = alpha - &one;
    debug_assert!(shifted.is_positive());
    let factor = &one - &one / (&shifted * &shifted);
    let verts = BigRational::from_integer(count_stable_path(m, k).into());
    Ok(factor * verts)
}
