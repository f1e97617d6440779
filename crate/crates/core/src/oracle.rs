//! Coloring oracles with query accounting.
//!
//! A [`ColoringOracle`] wraps a [`ColorSource`] (a builtin generator, a
//! closure, or an external process adapter) behind the contract the solver
//! relies on: queries are restricted to sets stable in `[n]`, replies must
//! land in `[1, palette_size]`, and every forwarded query is counted.
//! Locally rejected non-stable requests never reach the source and are not
//! counted.
//!
//! An optional bounded memo spot-checks determinism: it remembers up to
//! `limit` distinct queried sets and flags a source that ever answers one of
//! them differently. The memo never serves answers, so enabling it does not
//! distort query counts.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::ground::GroundSet;
use crate::stable::{is_stable, StableSubset};

/// A color in the palette `[1, palette_size]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(u32);

impl Color {
    pub fn new(value: u32) -> Self {
        Color(value)
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Errors surfaced by oracle construction and queries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// Query rejected locally: the set is not stable in `[n]`.
    NotStable { elements: Vec<u32> },
    /// The source replied with a color outside `[1, palette_size]`.
    OutOfPalette { color: u32, palette_size: u32 },
    /// The memo caught the source answering one set two different ways.
    Inconsistent { elements: Vec<u32>, first: u32, second: u32 },
    /// Transport failure of an external source (broken pipe, timeout, bad reply).
    Channel(String),
    /// Invalid instance parameters (needs `n >= 2k`, `k >= 1`, nonempty palette).
    InvalidInstance(String),
    /// The permutation is not a bijection on `[1, n]`.
    InvalidPermutation(String),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::NotStable { elements } => {
                write!(f, "query rejected: {elements:?} is not stable in [n]")
            }
            OracleError::OutOfPalette { color, palette_size } => {
                write!(f, "oracle returned color {color} outside palette [1, {palette_size}]")
            }
            OracleError::Inconsistent { elements, first, second } => write!(
                f,
                "oracle is not deterministic: {elements:?} colored {first} then {second}"
            ),
            OracleError::Channel(msg) => write!(f, "oracle channel error: {msg}"),
            OracleError::InvalidInstance(msg) => write!(f, "invalid instance: {msg}"),
            OracleError::InvalidPermutation(msg) => write!(f, "invalid permutation: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for OracleError {}

/// Backing coloring: answers raw color values for element lists already
/// validated as stable k-subsets of `[n]`.
pub trait ColorSource {
    fn color_raw(&mut self, elements: &[u32]) -> Result<u32, OracleError>;
}

impl<F> ColorSource for F
where
    F: FnMut(&[u32]) -> u32,
{
    fn color_raw(&mut self, elements: &[u32]) -> Result<u32, OracleError> {
        Ok(self(elements))
    }
}

/// The queryable coloring of an instance `(n, k)` with palette
/// `[1, palette_size]`.
pub struct ColoringOracle {
    n: u32,
    k: u32,
    palette_size: u32,
    query_count: u64,
    ground: GroundSet,
    memo_limit: usize,
    memo: BTreeMap<Vec<u32>, u32>,
    source: Box<dyn ColorSource + Send>,
}

impl fmt::Debug for ColoringOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ColoringOracle")
            .field("n", &self.n)
            .field("k", &self.k)
            .field("palette_size", &self.palette_size)
            .field("query_count", &self.query_count)
            .finish()
    }
}

fn validate_instance(n: u32, k: u32) -> Result<(), OracleError> {
    if k < 1 {
        return Err(OracleError::InvalidInstance(alloc::format!("k must be positive, got {k}")));
    }
    if n < 2 * k {
        return Err(OracleError::InvalidInstance(alloc::format!("need n >= 2k, got n = {n}, k = {k}")));
    }
    Ok(())
}

impl ColoringOracle {
    /// Wraps an arbitrary source. `palette_size` is the source's declared
    /// range; the Schrijver problem itself uses `n - 2k + 1`.
    pub fn from_source(
        n: u32,
        k: u32,
        palette_size: u32,
        source: Box<dyn ColorSource + Send>,
    ) -> Result<Self, OracleError> {
        validate_instance(n, k)?;
        if palette_size == 0 {
            return Err(OracleError::InvalidInstance("palette must be nonempty".into()));
        }
        Ok(ColoringOracle {
            n,
            k,
            palette_size,
            query_count: 0,
            ground: GroundSet::full(n),
            memo_limit: 0,
            memo: BTreeMap::new(),
            source,
        })
    }

    /// Wraps a plain function as a source.
    pub fn from_fn<F>(n: u32, k: u32, palette_size: u32, f: F) -> Result<Self, OracleError>
    where
        F: FnMut(&[u32]) -> u32 + Send + 'static,
    {
        Self::from_source(n, k, palette_size, Box::new(f))
    }

    /// The merged-minimum instance: `c(A) = min(min(A), n - 2k + 1)`.
    ///
    /// This merges the last two classes of the classical proper coloring
    /// `min(min(A), n - 2k + 2)`, so every monochromatic edge lies inside the
    /// merged class `{A : min(A) >= n - 2k + 1}`.
    pub fn merged_min(n: u32, k: u32) -> Result<Self, OracleError> {
        validate_instance(n, k)?;
        let cap = n - 2 * k + 1;
        Self::from_source(n, k, cap, Box::new(MinCapSource { permutation: None, cap }))
    }

    /// The classical proper coloring `c(A) = min(min(A), n - 2k + 2)`, on the
    /// one-larger palette. It has no monochromatic edge; useful as a negative
    /// control for brute force and properness checks.
    pub fn classical_min(n: u32, k: u32) -> Result<Self, OracleError> {
        validate_instance(n, k)?;
        let cap = n - 2 * k + 2;
        Self::from_source(n, k, cap, Box::new(MinCapSource { permutation: None, cap }))
    }

    /// Merged-minimum after relabeling by a permutation of `[1, n]`:
    /// `c(A) = min(min(pi(A)), n - 2k + 1)`. The permutation is given as
    /// `permutation[i - 1] = pi(i)`.
    pub fn permuted_merged_min(n: u32, k: u32, permutation: Vec<u32>) -> Result<Self, OracleError> {
        validate_instance(n, k)?;
        if permutation.len() != n as usize {
            return Err(OracleError::InvalidPermutation(alloc::format!(
                "length {} does not match n = {n}",
                permutation.len()
            )));
        }
        let mut seen = alloc::vec![false; n as usize];
        for &image in &permutation {
            if image < 1 || image > n {
                return Err(OracleError::InvalidPermutation(alloc::format!(
                    "image {image} outside [1, {n}]"
                )));
            }
            if seen[(image - 1) as usize] {
                return Err(OracleError::InvalidPermutation(alloc::format!(
                    "image {image} repeated"
                )));
            }
            seen[(image - 1) as usize] = true;
        }
        let cap = n - 2 * k + 1;
        Self::from_source(n, k, cap, Box::new(MinCapSource { permutation: Some(permutation), cap }))
    }

    /// Pseudorandom instance: `c(A) = 1 + (H(seed, A) mod (n - 2k + 1))`,
    /// where `H` is the fixed 64-bit mixer described at [`hash_vertex`].
    pub fn hash_random(n: u32, k: u32, seed: u64) -> Result<Self, OracleError> {
        validate_instance(n, k)?;
        let palette = n - 2 * k + 1;
        Self::from_source(n, k, palette, Box::new(HashSource { seed, palette }))
    }

    /// Enables the bounded determinism memo (`limit` distinct sets).
    pub fn with_consistency_memo(mut self, limit: usize) -> Self {
        self.memo_limit = limit;
        self
    }

    /// `(n, k)` of the instance.
    pub fn instance(&self) -> (u32, u32) {
        (self.n, self.k)
    }

    pub fn palette_size(&self) -> u32 {
        self.palette_size
    }

    /// Number of queries forwarded to the source so far.
    pub fn query_count(&self) -> u64 {
        self.query_count
    }

    /// Queries the color of `a`, enforcing the contract on both sides:
    /// non-stable sets are rejected locally, out-of-range replies and
    /// memo-detected inconsistencies are errors.
    pub fn color_of(&mut self, a: &StableSubset) -> Result<Color, OracleError> {
        if a.k() != self.k as usize {
            return Err(OracleError::NotStable { elements: a.elements().to_vec() });
        }
        if !is_stable(&self.ground, a.elements()) {
            return Err(OracleError::NotStable { elements: a.elements().to_vec() });
        }
        self.query_count += 1;
        let color = self.source.color_raw(a.elements())?;
        if color < 1 || color > self.palette_size {
            return Err(OracleError::OutOfPalette { color, palette_size: self.palette_size });
        }
        if self.memo_limit > 0 {
            if let Some(&previous) = self.memo.get(a.elements()) {
                if previous != color {
                    return Err(OracleError::Inconsistent {
                        elements: a.elements().to_vec(),
                        first: previous,
                        second: color,
                    });
                }
            } else if self.memo.len() < self.memo_limit {
                self.memo.insert(a.elements().to_vec(), color);
            }
        }
        Ok(Color(color))
    }
}

/// `min(min(pi(A)), cap)`, with the identity when no permutation is set.
struct MinCapSource {
    permutation: Option<Vec<u32>>,
    cap: u32,
}

impl ColorSource for MinCapSource {
    fn color_raw(&mut self, elements: &[u32]) -> Result<u32, OracleError> {
        let mapped_min = elements
            .iter()
            .map(|&e| match &self.permutation {
                Some(p) => p[(e - 1) as usize],
                None => e,
            })
            .min()
            .expect("queried sets are nonempty");
        Ok(mapped_min.min(self.cap))
    }
}

struct HashSource {
    seed: u64,
    palette: u32,
}

impl ColorSource for HashSource {
    fn color_raw(&mut self, elements: &[u32]) -> Result<u32, OracleError> {
        Ok(1 + (hash_vertex(self.seed, elements) % self.palette as u64) as u32)
    }
}

/// The 64-bit finalizer of splitmix64.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Platform-independent hash of a sorted element list.
///
/// Defined as the splitmix64 finalizer `mix` chained over the length-prefixed
/// sequence: `h = mix(seed xor len)`, then `h = mix(h xor e)` for each
/// element `e` in increasing order. Every implementation of the hash-random
/// instance must reproduce this recurrence bit for bit.
pub fn hash_vertex(seed: u64, sorted_elements: &[u32]) -> u64 {
    let mut h = mix64(seed ^ sorted_elements.len() as u64);
    for &e in sorted_elements {
        h = mix64(h ^ e as u64);
    }
    h
}

/// Builtin instance generators, keyed the way the command line spells them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuiltinColoringSpec {
    MergedMin,
    PermutedMergedMin { permutation: Vec<u32> },
    HashRandom { seed: u64 },
}

impl BuiltinColoringSpec {
    pub fn build(&self, n: u32, k: u32) -> Result<ColoringOracle, OracleError> {
        match self {
            BuiltinColoringSpec::MergedMin => ColoringOracle::merged_min(n, k),
            BuiltinColoringSpec::PermutedMergedMin { permutation } => {
                ColoringOracle::permuted_merged_min(n, k, permutation.clone())
            }
            BuiltinColoringSpec::HashRandom { seed } => ColoringOracle::hash_random(n, k, *seed),
        }
    }
}
