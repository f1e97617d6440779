//! Exact checkers for the combinatorial facts the solver's analysis rests on.
//!
//! Every checker works in exact rational arithmetic and returns a
//! [`BoundReport`] with the observed quantity, the bound it is compared
//! against, and the verdict. Premise violations are errors, not failed
//! reports: a report only exists when the claimed inequality was actually
//! put to the test.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::counting::{binomial, count_stable_cycle, count_stable_path};
use crate::enumeration::enumerate_stable;
use crate::ground::GroundSet;
use crate::oracle::{Color, ColoringOracle, OracleError};
use crate::stable::{are_disjoint, is_stable, StableSubset};

/// A validated family of distinct stable k-subsets of a common ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexFamily {
    ground: GroundSet,
    k: u32,
    members: Vec<StableSubset>,
}

impl VertexFamily {
    /// Validates that every member is a stable k-subset of `ground` and that
    /// no member repeats. Members are stored in lexicographic order.
    pub fn new(
        ground: GroundSet,
        k: u32,
        mut members: Vec<StableSubset>,
    ) -> Result<Self, BoundCheckError> {
        for m in &members {
            if m.k() != k as usize {
                return Err(BoundCheckError::PremiseUnmet(format!(
                    "member {m} has {} elements, expected {k}",
                    m.k()
                )));
            }
            if !is_stable(&ground, m.elements()) {
                return Err(BoundCheckError::PremiseUnmet(format!(
                    "member {m} is not stable in {ground}"
                )));
            }
        }
        members.sort();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(BoundCheckError::PremiseUnmet(format!(
                "member {} repeats",
                w[0]
            )));
        }
        Ok(VertexFamily { ground, k, members })
    }

    /// The family of all stable k-subsets of `ground`.
    pub fn all_vertices(ground: GroundSet, k: u32) -> Self {
        let members: Vec<StableSubset> = enumerate_stable(&ground, k).collect();
        VertexFamily { ground, k, members }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn members(&self) -> &[StableSubset] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Outcome of one exact bound check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    /// The quantity measured on the input.
    pub observed: BigRational,
    /// The value it is compared against.
    pub bound: BigRational,
    /// Whether the claimed inequality holds.
    pub satisfied: bool,
    /// Which inequality was tested, with the key numbers inlined.
    pub context: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundCheckError {
    /// The input does not satisfy the claim's hypotheses.
    PremiseUnmet(String),
    /// The exhaustive check would exceed the caller's work budget.
    BudgetExceeded { needed: BigUint, budget: u64 },
    Oracle(OracleError),
}

impl core::fmt::Display for BoundCheckError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            BoundCheckError::PremiseUnmet(msg) => write!(f, "premise unmet: {msg}"),
            BoundCheckError::BudgetExceeded { needed, budget } => {
                write!(f, "check needs {needed} steps, budget is {budget}")
            }
            BoundCheckError::Oracle(e) => write!(f, "oracle error: {e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for BoundCheckError {}

impl From<OracleError> for BoundCheckError {
    fn from(e: OracleError) -> Self {
        BoundCheckError::Oracle(e)
    }
}

/// Whether every two members share an element.
pub fn is_intersecting(family: &VertexFamily) -> bool {
    let members = family.members();
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if are_disjoint(&members[i], &members[j]) {
                return false;
            }
        }
    }
    true
}

/// The smallest element contained in every member, if one exists. Empty
/// families have no common element by convention.
pub fn common_element(family: &VertexFamily) -> Option<u32> {
    let members = family.members();
    let first = members.first()?;
    first
        .elements()
        .iter()
        .copied()
        .find(|&e| members.iter().all(|m| m.contains(e)))
}

/// Number of stable k-subsets of an m-cycle containing two fixed elements is
/// at most this; it is the correction term in several bounds below.
fn two_point_coefficient(m: u64, k: u64) -> BigUint {
    if k < 2 {
        return BigUint::zero();
    }
    binomial(m.saturating_sub(k + 2), k - 2)
}

fn ratio(numer: BigUint, denom: BigUint) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

fn integer(value: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(value))
}

/// Size bound for non-trivially intersecting stable families: if the family
/// is intersecting but no single element lies in every member, then
/// `|F| <= k^2 * C(m - k - 2, k - 2)` where `m` is the ground set size.
///
/// Errors if the family is empty, not intersecting, or has a common element.
pub fn check_hilton_milner_stable(family: &VertexFamily) -> Result<BoundReport, BoundCheckError> {
    if family.is_empty() {
        return Err(BoundCheckError::PremiseUnmet("family is empty".into()));
    }
    if !is_intersecting(family) {
        return Err(BoundCheckError::PremiseUnmet("family is not intersecting".into()));
    }
    if let Some(e) = common_element(family) {
        return Err(BoundCheckError::PremiseUnmet(format!(
            "family is trivial: element {e} lies in every member"
        )));
    }
    let m = family.ground().len() as u64;
    let k = family.k() as u64;
    let bound_count = BigUint::from(k * k) * two_point_coefficient(m, k);
    let observed = integer(family.len() as u64);
    let bound = BigRational::from_integer(BigInt::from(bound_count));
    let satisfied = observed <= bound;
    Ok(BoundReport {
        satisfied,
        context: format!(
            "non-trivial intersecting family size {} vs k^2 C(m-k-2, k-2) = {bound} at m = {m}, k = {k}",
            family.len()
        ),
        observed,
        bound,
    })
}

/// Edge density bound: when `|F| >= k^2 C(m-k-2, k-2)` and no element lies in
/// more than a `gamma` fraction of the members, two independently uniform
/// members of `F` are disjoint with probability at least
/// `(1 - gamma - t)(1 - t) / 2` where `t = k^2 C(m-k-2, k-2) / |F|`.
///
/// The observed value is the exact pair count `2 |E| / |F|^2` with `E` the
/// set of unordered disjoint pairs in `F`.
pub fn check_edge_probability_bound(
    family: &VertexFamily,
    gamma: &BigRational,
) -> Result<BoundReport, BoundCheckError> {
    if family.is_empty() {
        return Err(BoundCheckError::PremiseUnmet("family is empty".into()));
    }
    let m = family.ground().len() as u64;
    let k = family.k() as u64;
    let size = family.len() as u64;
    let threshold = BigUint::from(k * k) * two_point_coefficient(m, k);
    if BigUint::from(size) < threshold {
        return Err(BoundCheckError::PremiseUnmet(format!(
            "family size {size} is below k^2 C(m-k-2, k-2) = {threshold}"
        )));
    }
    let max_frequency = family
        .ground()
        .elements()
        .iter()
        .map(|&e| family.members().iter().filter(|v| v.contains(e)).count() as u64)
        .max()
        .unwrap_or(0);
    if integer(max_frequency) > gamma * integer(size) {
        return Err(BoundCheckError::PremiseUnmet(format!(
            "an element lies in {max_frequency} members, more than gamma * |F| = {}",
            gamma * integer(size)
        )));
    }
    let members = family.members();
    let mut disjoint_pairs = 0u64;
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if are_disjoint(&members[i], &members[j]) {
                disjoint_pairs += 1;
            }
        }
    }
    let observed = ratio(BigUint::from(2u32) * BigUint::from(disjoint_pairs), {
        BigUint::from(size) * BigUint::from(size)
    });
    let t = ratio(threshold, BigUint::from(size));
    let one = BigRational::one();
    let bound = (&one - gamma - &t) * (&one - &t) / integer(2);
    let satisfied = observed >= bound;
    Ok(BoundReport {
        satisfied,
        context: format!(
            "disjoint pair probability 2|E|/|F|^2 with |E| = {disjoint_pairs}, |F| = {size} vs (1 - gamma - t)(1 - t)/2"
        ),
        observed,
        bound,
    })
}

/// Survival bound for a popular element: if at least a `gamma` fraction of
/// the members contain `j`, and `a` is a stable k-subset avoiding `j`, then
/// the fraction of members disjoint from `a` is at least
/// `gamma - (k / |F|) * C(m - k - 2, k - 2)`.
pub fn check_disjointness_probability_bound(
    family: &VertexFamily,
    gamma: &BigRational,
    j: u32,
    a: &StableSubset,
) -> Result<BoundReport, BoundCheckError> {
    if family.is_empty() {
        return Err(BoundCheckError::PremiseUnmet("family is empty".into()));
    }
    if !family.ground().contains(j) {
        return Err(BoundCheckError::PremiseUnmet(format!(
            "element {j} is not in the ground set"
        )));
    }
    if a.contains(j) {
        return Err(BoundCheckError::PremiseUnmet(format!(
            "the avoiding set {a} contains {j}"
        )));
    }
    if a.k() != family.k() as usize {
        return Err(BoundCheckError::PremiseUnmet(format!(
            "the avoiding set {a} has {} elements, expected {}",
            a.k(),
            family.k()
        )));
    }
    let size = family.len() as u64;
    let containing_j = family.members().iter().filter(|v| v.contains(j)).count() as u64;
    if integer(containing_j) < gamma * integer(size) {
        return Err(BoundCheckError::PremiseUnmet(format!(
            "only {containing_j} of {size} members contain {j}, fewer than gamma * |F|"
        )));
    }
    let m = family.ground().len() as u64;
    let k = family.k() as u64;
    let disjoint = family
        .members()
        .iter()
        .filter(|v| are_disjoint(v, a))
        .count() as u64;
    let observed = ratio(BigUint::from(disjoint), BigUint::from(size));
    let correction = ratio(
        BigUint::from(k) * two_point_coefficient(m, k),
        BigUint::from(size),
    );
    let bound = gamma - correction;
    let satisfied = observed >= bound;
    Ok(BoundReport {
        satisfied,
        context: format!(
            "{disjoint} of {size} members avoid {a} vs gamma - (k/|F|) C(m-k-2, k-2) at m = {m}, k = {k}"
        ),
        observed,
        bound,
    })
}

/// Exhaustive verification of the elimination guarantee: after `(color, j)`
/// is eliminated with ground set `x_r` live, every stable k-subset `A` of
/// `[n]` avoiding `j` must satisfy
/// `Pr[c(B) = color and A does not meet B] >= 1 / (9n)` for `B` uniform over
/// the stable k-subsets of `x_r`.
///
/// Queries the oracle once per stable k-subset of `x_r` and minimizes the
/// probability over all candidate `A`. The reported observation is that
/// minimum; the context names a minimizing `A`.
pub fn check_popular_pair_guarantee(
    oracle: &mut ColoringOracle,
    x_r: &GroundSet,
    color: Color,
    j: u32,
    budget: u64,
) -> Result<BoundReport, BoundCheckError> {
    let (n, k) = oracle.instance();
    if x_r.ambient_n() != n {
        return Err(BoundCheckError::PremiseUnmet(
            "ground set universe does not match the oracle".into(),
        ));
    }
    if !x_r.contains(j) {
        return Err(BoundCheckError::PremiseUnmet(format!(
            "eliminated element {j} is not in the ground set"
        )));
    }
    if color.value() < 1 || color.value() > oracle.palette_size() {
        return Err(BoundCheckError::PremiseUnmet(format!(
            "color {color} is outside the oracle palette [1, {}]",
            oracle.palette_size()
        )));
    }
    if k >= 2 {
        let required = 10u128 * (k as u128).pow(4);
        if (x_r.len() as u128) < required {
            return Err(BoundCheckError::PremiseUnmet(format!(
                "need |X| >= 10 k^4 = {required}, got {}",
                x_r.len()
            )));
        }
    }
    let b_count = count_stable_cycle(x_r.len() as u64, k as u64);
    let a_count = count_stable_cycle(n as u64, k as u64)
        - count_stable_path((n as u64).saturating_sub(3), (k - 1) as u64);
    let needed = &a_count * &b_count;
    if needed > BigUint::from(budget) {
        return Err(BoundCheckError::BudgetExceeded { needed, budget });
    }

    let b_space: Vec<StableSubset> = enumerate_stable(x_r, k).collect();
    let mut class = Vec::new();
    for b in &b_space {
        if oracle.color_of(b)? == color {
            class.push(b.clone());
        }
    }
    let full = GroundSet::full(n);
    let mut worst: Option<(u64, StableSubset)> = None;
    for a in enumerate_stable(&full, k) {
        if a.contains(j) {
            continue;
        }
        let survivors = class.iter().filter(|b| are_disjoint(b, &a)).count() as u64;
        if worst.as_ref().map_or(true, |(w, _)| survivors < *w) {
            worst = Some((survivors, a));
        }
    }
    let Some((survivors, witness)) = worst else {
        return Err(BoundCheckError::PremiseUnmet(format!(
            "no stable {k}-subset of [{n}] avoids {j}"
        )));
    };
    let observed = ratio(
        BigUint::from(survivors),
        BigUint::from(b_space.len() as u64),
    );
    let bound = BigRational::new(BigInt::one(), BigInt::from(9u64 * n as u64));
    let satisfied = observed >= bound;
    Ok(BoundReport {
        satisfied,
        context: format!(
            "worst avoiding set {witness}: {survivors} of {} vertices share color {color} and miss it, vs 1/(9n)",
            b_space.len()
        ),
        observed,
        bound,
    })
}

/// Exhaustively decides whether every assignment of `palette_size` colors to
/// the stable k-subsets of `[n]` produces two same-colored disjoint vertices.
/// True means the chromatic number exceeds `palette_size`.
///
/// Work is `palette_size ^ |V|` coloring scans; the call refuses budgets it
/// cannot honor.
pub fn check_chromatic_lower_bound(
    n: u32,
    k: u32,
    palette_size: u32,
    budget: u64,
) -> Result<bool, BoundCheckError> {
    if k == 0 || n < 2 * k || palette_size == 0 {
        return Err(BoundCheckError::PremiseUnmet(format!(
            "need k >= 1, n >= 2k and a nonempty palette, got n = {n}, k = {k}, palette = {palette_size}"
        )));
    }
    let ground = GroundSet::full(n);
    let vertices: Vec<StableSubset> = enumerate_stable(&ground, k).collect();
    let needed = BigUint::from(palette_size).pow(vertices.len() as u32);
    if needed > BigUint::from(budget) {
        return Err(BoundCheckError::BudgetExceeded { needed, budget });
    }
    let mut edges = Vec::new();
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if are_disjoint(&vertices[i], &vertices[j]) {
                edges.push((i, j));
            }
        }
    }
    let mut coloring = alloc::vec![0u32; vertices.len()];
    loop {
        if !edges.iter().any(|&(i, j)| coloring[i] == coloring[j]) {
            return Ok(false);
        }
        let mut pos = 0;
        loop {
            if pos == coloring.len() {
                return Ok(true);
            }
            coloring[pos] += 1;
            if coloring[pos] < palette_size {
                break;
            }
            coloring[pos] = 0;
            pos += 1;
        }
    }
}
