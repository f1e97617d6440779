//! Finding a monochromatic edge in a Schrijver graph from oracle access to a
//! coloring, together with the exact combinatorics the search is built on.
//!
//! The Schrijver graph `S(n, k)` has one vertex per *stable* k-subset of the
//! cyclically ordered ground set `[n]` (no two chosen elements cyclically
//! consecutive) and an edge between every pair of disjoint vertices. Its
//! chromatic number is `n - 2k + 2`, so any coloring with the smaller palette
//! `[n - 2k + 1]` must make two disjoint vertices share a color. This crate
//! locates such a pair while querying the coloring as little as possible.
//!
//! Modules:
//!
//! * [`counting`], [`ground`], [`stable`], [`enumeration`], [`ranking`]:
//!   exact counts, lexicographic enumeration, rank/unrank and uniform
//!   sampling of stable subsets of arbitrary sub-ground-sets.
//! * [`oracle`]: the query-counting oracle wrapper, builtin instance
//!   generators, and the source trait external adapters plug into.
//! * [`solver`]: the element-elimination sampler and the two-phase driver,
//!   plus brute force and edge verification.
//! * [`bounds`]: exact enumeration-backed checkers for the intersecting-family
//!   and disjointness bounds the solver's analysis rests on.
//! * [`rng`]: the deterministic, splittable random stream used everywhere.
//!
//! The crate is `no_std` (requires `alloc`). Enabling the `std` feature adds
//! `std::error::Error` impls for the error types; nothing else changes.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod counting;
pub mod enumeration;
pub mod ground;
pub mod oracle;
pub mod ranking;
pub mod rng;
pub mod solver;
pub mod stable;

pub use bounds::{
    check_chromatic_lower_bound, check_disjointness_probability_bound,
    check_edge_probability_bound, check_hilton_milner_stable, check_popular_pair_guarantee,
    common_element, is_intersecting, BoundCheckError, BoundReport, VertexFamily,
};
pub use counting::{binomial, count_stable_cycle, count_stable_path, vertex_count_lower_bound};
pub use enumeration::enumerate_stable;
pub use ground::GroundSet;
pub use oracle::{BuiltinColoringSpec, Color, ColorSource, ColoringOracle, OracleError};
pub use ranking::{rank_stable, sample_uniform_stable, unrank_stable, StableSampler};
pub use solver::{
    brute_force_solve, element_elimination, solve, verify_edge, BruteForceOutcome,
    EliminationOutcome, EliminationRecord, EliminationResult, EmpiricalEstimates, FailureReason,
    SamplingParams, SolveOutcome, SolveResult, SolveStats, SolverError,
};
pub use stable::{are_disjoint, is_stable, StableSubset};
