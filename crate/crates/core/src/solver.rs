//! The randomized search for a monochromatic edge.
//!
//! Any coloring of the Schrijver graph `S(n, k)` with the short palette
//! `[n - 2k + 1]` has two disjoint same-colored vertices, because the graph's
//! chromatic number is `n - 2k + 2`. The solver finds such a pair with
//! `poly(n) * k^O(k)` oracle queries in two phases:
//!
//! 1. *Element elimination.* While the live ground set `X` is large, draw
//!    `m = ceil(b * n^2 * ln(n / eps))` uniform stable k-subsets of `X` and
//!    query each. A same-colored disjoint pair among the samples is an edge
//!    (done); a color outside the live palette `C` leads to the recovery
//!    loop below; otherwise the most popular sampled color `i` and the most
//!    popular element `j` within that color class are returned, and the
//!    instance shrinks to `X minus j`, `C minus i`. The palette identity
//!    `|C| = |X| - 2k + 1` is preserved, and with high probability every
//!    stable set avoiding `j` keeps probability at least `1/(9n)` of meeting
//!    a disjoint `i`-colored set, which is what recovery relies on later.
//! 2. *Exhaustive finish.* Once `|X| <= 10k^4`, query every remaining vertex.
//!    Colors all inside the live palette force a same-colored disjoint pair
//!    by the chromatic number argument; an off-palette color is handled by
//!    recovery.
//!
//! Recovery: an off-palette color `i` was eliminated at some earlier
//! iteration `r` together with a popular element. Redraw up to `18n` uniform
//! vertices from the historical ground set `X_r`; each hits color `i` while
//! avoiding the off-palette vertex `A` with probability at least `1/(9n)`
//! when elimination's guarantee held, so recovery fails with probability at
//! most `(1 - 1/(9n))^(18n) <= e^-2`. A failed recovery fails the whole
//! attempt; attempts are independently retried with fresh randomness.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use rand::Rng;

use crate::counting::count_stable_cycle;
use crate::enumeration::enumerate_stable;
use crate::ground::GroundSet;
use crate::oracle::{Color, ColoringOracle, OracleError};
use crate::ranking::StableSampler;
use crate::stable::{are_disjoint, is_stable, StableSubset};

/// Tunables for the sampling phases.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplingParams {
    /// Multiplier in the sample count `ceil(b * n^2 * ln(n / eps))`.
    pub b: f64,
    /// Overrides the per-iteration failure budget `eps = 1/(4n)`.
    pub epsilon_override: Option<f64>,
    /// Recovery draws `retry_factor * n` redraw samples.
    pub retry_factor: u32,
    /// Whole-solve attempts before giving up.
    pub max_attempts: u32,
}

impl SamplingParams {
    /// Empirical default; ample for the shipped generators.
    pub const B_DEFAULT: f64 = 1.0;

    /// Analysis-backed multiplier: with `m = ceil(b * n^2 * ln(n / eps))`
    /// both concentration requirements hold, namely
    /// `2 * exp(-m / (2 n^2)) <= eps / n^2` (color and pair frequency
    /// estimates) and `exp(-3 * floor(m/2) / (128 n^2)) <= eps` (edge
    /// detection among the sample matching), for every `n >= 2` and
    /// `eps <= 1/2`. The first needs `b * ln(n/eps) >= 2 ln(2 n^2 / eps)`,
    /// the second `b >= 256/3` with slack for the floor; `b = 100` covers
    /// both with margin.
    pub const B_STRICT: f64 = 100.0;

    pub fn strict() -> Self {
        SamplingParams { b: Self::B_STRICT, ..Self::default() }
    }

    /// Sample count for one elimination call: `ceil(b * n^2 * ln(n / eps))`.
    pub fn sample_size(&self, n: u32, epsilon: f64) -> u64 {
        let n = n as f64;
        let m = libm::ceil(self.b * n * n * libm::log(n / epsilon));
        if m < 1.0 {
            1
        } else {
            m as u64
        }
    }

    fn validate(&self) -> Result<(), SolverError> {
        if !(self.b > 0.0 && self.b.is_finite()) {
            return Err(SolverError::InvalidInput("b must be positive and finite".into()));
        }
        if let Some(eps) = self.epsilon_override {
            check_epsilon(eps)?;
        }
        if self.retry_factor == 0 {
            return Err(SolverError::InvalidInput("retry_factor must be positive".into()));
        }
        if self.max_attempts == 0 {
            return Err(SolverError::InvalidInput("max_attempts must be positive".into()));
        }
        Ok(())
    }
}

impl Default for SamplingParams {
    fn default() -> Self {
        SamplingParams {
            b: Self::B_DEFAULT,
            epsilon_override: None,
            retry_factor: 18,
            max_attempts: 7,
        }
    }
}

fn check_epsilon(eps: f64) -> Result<(), SolverError> {
    if eps > 0.0 && eps < 1.0 {
        Ok(())
    } else {
        Err(SolverError::InvalidInput("epsilon must lie in (0, 1)".into()))
    }
}

/// Errors for precondition violations and oracle failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolverError {
    InvalidInput(String),
    /// Enumeration would exceed the caller's budget.
    BudgetExceeded { count: BigUint, budget: u64 },
    Oracle(OracleError),
}

impl fmt::Display for SolverError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolverError::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            SolverError::BudgetExceeded { count, budget } => {
                write!(f, "{count} vertices exceed the enumeration budget {budget}")
            }
            SolverError::Oracle(e) => write!(f, "oracle error: {e}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for SolverError {}

impl From<OracleError> for SolverError {
    fn from(e: OracleError) -> Self {
        SolverError::Oracle(e)
    }
}

/// What one elimination call decided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EliminationOutcome {
    /// Two same-colored disjoint vertices, reported in lexicographic order.
    Edge { a: StableSubset, b: StableSubset, color: Color },
    /// A sampled vertex whose color is outside the live palette.
    OffPalette { vertex: StableSubset, color: Color },
    /// The most popular color and its most popular element; eliminate both.
    Popular { color: Color, element: u32 },
}

/// Elimination outcome plus the raw frequencies behind a `Popular` decision.
#[derive(Debug, Clone)]
pub struct EliminationResult {
    pub outcome: EliminationOutcome,
    /// Present exactly when the outcome is `Popular`.
    pub estimates: Option<EmpiricalEstimates>,
    /// Uniform samples actually drawn (early exit stops at the edge).
    pub samples_drawn: u64,
}

/// Empirical color and element frequencies from one elimination call.
///
/// `color_fraction(i)` estimates the measure of color class `i` among the
/// stable k-subsets of the live ground set; `element_fraction(i, j)`
/// estimates the measure of sets that are colored `i` and contain `j`.
#[derive(Debug, Clone)]
pub struct EmpiricalEstimates {
    sample_count: u64,
    palette: Vec<u32>,
    ground_elements: Vec<u32>,
    color_counts: Vec<u64>,
    element_counts: Vec<Vec<u64>>,
}

impl EmpiricalEstimates {
    pub fn sample_count(&self) -> u64 {
        self.sample_count
    }

    /// The live palette at the time of the call.
    pub fn palette(&self) -> &[u32] {
        &self.palette
    }

    /// The live ground set elements at the time of the call.
    pub fn ground_elements(&self) -> &[u32] {
        &self.ground_elements
    }

    pub fn color_count(&self, color: Color) -> u64 {
        self.color_counts[(color.value() - 1) as usize]
    }

    pub fn element_count(&self, color: Color, element: u32) -> u64 {
        self.element_counts[(color.value() - 1) as usize][(element - 1) as usize]
    }

    pub fn color_fraction(&self, color: Color) -> f64 {
        self.color_count(color) as f64 / self.sample_count as f64
    }

    pub fn element_fraction(&self, color: Color, element: u32) -> f64 {
        self.element_count(color, element) as f64 / self.sample_count as f64
    }
}

/// One applied elimination: at `iteration`, `element` left the ground set and
/// `color` left the palette. The historical ground set `X_r` is `[n]` minus
/// the elements of all records with smaller `iteration`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EliminationRecord {
    pub iteration: u32,
    pub element: u32,
    pub color: Color,
}

/// Draws `m = ceil(b * n^2 * ln(n / epsilon))` uniform stable k-subsets of
/// `ground`, queries each, and decides: an [`EliminationOutcome::Edge`] the
/// moment two same-colored disjoint samples exist, otherwise
/// [`EliminationOutcome::OffPalette`] if any sample's color left `palette`,
/// otherwise the [`EliminationOutcome::Popular`] frequency argmaxes (ties
/// broken toward the smallest color, then the smallest element).
///
/// For `k = 1` sampling is pointless: the call exhaustively queries all
/// `|ground|` singletons and returns an edge or an off-palette vertex, which
/// the pigeonhole principle guarantees to exist.
///
/// Preconditions: `palette` is a strictly increasing subset of
/// `[1, n - 2k + 1]` with `|palette| = |ground| - 2k + 1`, the oracle's
/// palette is exactly `[1, n - 2k + 1]`, and `|ground| >= 10 k^4` (for
/// `k >= 2`; `k = 1` only needs `|ground| >= 2`).
pub fn element_elimination<R: Rng + ?Sized>(
    oracle: &mut ColoringOracle,
    ground: &GroundSet,
    palette: &[u32],
    epsilon: f64,
    rng: &mut R,
    params: &SamplingParams,
) -> Result<EliminationResult, SolverError> {
    params.validate()?;
    check_epsilon(epsilon)?;
    let (n, k) = oracle.instance();
    let problem_palette = n - 2 * k + 1;
    if oracle.palette_size() != problem_palette {
        return Err(SolverError::InvalidInput(alloc::format!(
            "oracle palette {} does not match the problem palette {problem_palette}",
            oracle.palette_size()
        )));
    }
    if ground.ambient_n() != n {
        return Err(SolverError::InvalidInput("ground set universe does not match the oracle".into()));
    }
    let size = ground.len() as u64;
    if k >= 2 {
        let required = 10u128 * (k as u128).pow(4);
        if (size as u128) < required {
            return Err(SolverError::InvalidInput(alloc::format!(
                "need |X| >= 10 k^4 = {required}, got {size}"
            )));
        }
    } else if size < 2 {
        return Err(SolverError::InvalidInput("need |X| >= 2 for k = 1".into()));
    }
    let expected_palette_len = size + 1 - 2 * k as u64;
    if palette.len() as u64 != expected_palette_len {
        return Err(SolverError::InvalidInput(alloc::format!(
            "palette has {} colors but |X| - 2k + 1 = {expected_palette_len}",
            palette.len()
        )));
    }
    for (i, &c) in palette.iter().enumerate() {
        if c < 1 || c > problem_palette {
            return Err(SolverError::InvalidInput(alloc::format!(
                "palette color {c} outside [1, {problem_palette}]"
            )));
        }
        if i > 0 && palette[i - 1] >= c {
            return Err(SolverError::InvalidInput("palette must be strictly increasing".into()));
        }
    }

    if k == 1 {
        return exhaustive_elimination(oracle, ground, palette);
    }

    let m = params.sample_size(n, epsilon);
    let sampler = StableSampler::new(ground, k).expect("|X| >= 2k guarantees vertices exist");
    let mut color_counts = vec![0u64; problem_palette as usize];
    let mut element_counts = vec![vec![0u64; n as usize]; problem_palette as usize];
    let mut seen_by_color: Vec<Vec<StableSubset>> = vec![Vec::new(); problem_palette as usize];
    let mut first_off_palette: Option<(StableSubset, Color)> = None;

    for t in 0..m {
        let sample = sampler.sample(rng);
        let color = oracle.color_of(&sample)?;
        let ci = (color.value() - 1) as usize;
        color_counts[ci] += 1;
        for &e in sample.elements() {
            element_counts[ci][(e - 1) as usize] += 1;
        }
        let bucket = &mut seen_by_color[ci];
        if let Err(at) = bucket.binary_search(&sample) {
            for other in bucket.iter() {
                if are_disjoint(other, &sample) {
                    let (a, b) = ordered(other.clone(), sample.clone());
                    return Ok(EliminationResult {
                        outcome: EliminationOutcome::Edge { a, b, color },
                        estimates: None,
                        samples_drawn: t + 1,
                    });
                }
            }
            bucket.insert(at, sample.clone());
        }
        if first_off_palette.is_none() && palette.binary_search(&color.value()).is_err() {
            first_off_palette = Some((sample, color));
        }
    }

    if let Some((vertex, color)) = first_off_palette {
        return Ok(EliminationResult {
            outcome: EliminationOutcome::OffPalette { vertex, color },
            estimates: None,
            samples_drawn: m,
        });
    }

    // Strict comparison keeps the first maximum, so ties break toward the
    // smallest color and then the smallest element.
    let mut best_color = palette[0];
    for &c in &palette[1..] {
        if color_counts[(c - 1) as usize] > color_counts[(best_color - 1) as usize] {
            best_color = c;
        }
    }
    let popular_row = &element_counts[(best_color - 1) as usize];
    let mut best_element = ground.elements()[0];
    for &e in &ground.elements()[1..] {
        if popular_row[(e - 1) as usize] > popular_row[(best_element - 1) as usize] {
            best_element = e;
        }
    }

    let estimates = EmpiricalEstimates {
        sample_count: m,
        palette: palette.to_vec(),
        ground_elements: ground.elements().to_vec(),
        color_counts,
        element_counts,
    };
    Ok(EliminationResult {
        outcome: EliminationOutcome::Popular {
            color: Color::new(best_color),
            element: best_element,
        },
        estimates: Some(estimates),
        samples_drawn: m,
    })
}

/// The `k = 1` branch: query every singleton; two equal colors form an edge
/// (singletons are always disjoint and stable), and if all `|X|` colors are
/// distinct they cannot fit in the `|X| - 1` live palette colors, so some
/// vertex is off-palette.
fn exhaustive_elimination(
    oracle: &mut ColoringOracle,
    ground: &GroundSet,
    palette: &[u32],
) -> Result<EliminationResult, SolverError> {
    let vertices: Vec<StableSubset> = enumerate_stable(ground, 1).collect();
    let mut colors = Vec::with_capacity(vertices.len());
    for v in &vertices {
        colors.push(oracle.color_of(v)?);
    }
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            if colors[i] == colors[j] {
                return Ok(EliminationResult {
                    outcome: EliminationOutcome::Edge {
                        a: vertices[i].clone(),
                        b: vertices[j].clone(),
                        color: colors[i],
                    },
                    estimates: None,
                    samples_drawn: 0,
                });
            }
        }
    }
    let off = (0..vertices.len())
        .find(|&i| palette.binary_search(&colors[i].value()).is_err())
        .expect("more distinct colors than live palette colors");
    Ok(EliminationResult {
        outcome: EliminationOutcome::OffPalette {
            vertex: vertices[off].clone(),
            color: colors[off],
        },
        estimates: None,
        samples_drawn: 0,
    })
}

fn ordered(a: StableSubset, b: StableSubset) -> (StableSubset, StableSubset) {
    if b < a {
        (b, a)
    } else {
        (a, b)
    }
}

/// Counters accumulated across all attempts of one [`solve`] call.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Oracle queries forwarded during the solve.
    pub oracle_queries: u64,
    /// Uniform samples drawn (elimination and recovery).
    pub samples_drawn: u64,
    /// Eliminations applied (ground element and palette color removed).
    pub eliminations: u64,
    /// Attempts consumed (equals `max_attempts` when the solve fails).
    pub attempts: u32,
    /// Vertices queried by the exhaustive phase.
    pub phase2_vertices: u64,
}

/// Why a [`solve`] call returned without an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureReason {
    /// Every attempt's recovery loop missed; extremely unlikely unless the
    /// coloring violates its contract statistically.
    AttemptsExhausted,
    /// The oracle's answers are inconsistent with any fixed coloring of the
    /// declared palette.
    OracleViolation(String),
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FailureReason::AttemptsExhausted => write!(f, "attempts-exhausted"),
            FailureReason::OracleViolation(_) => write!(f, "oracle-violation"),
        }
    }
}

/// Verdict of a [`solve`] call.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// A verified monochromatic edge, vertices in lexicographic order.
    Edge { a: StableSubset, b: StableSubset, color: Color },
    Failure { reason: FailureReason },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub outcome: SolveOutcome,
    pub stats: SolveStats,
}

enum AttemptOutcome {
    Edge { a: StableSubset, b: StableSubset, color: Color },
    Failed,
    Violation(String),
}

/// Runs the full two-phase search against `oracle`, retrying failed attempts
/// up to `params.max_attempts` times on fresh randomness from `rng`.
///
/// Returned edges are verified before they leave: both vertices stable in
/// `[n]`, disjoint, and carrying equal oracle-reported colors (the colors
/// recorded when the edge was discovered; no extra queries are spent).
/// `stats.oracle_queries` counts exactly the queries this call forwarded.
pub fn solve<R: Rng + ?Sized>(
    oracle: &mut ColoringOracle,
    rng: &mut R,
    params: &SamplingParams,
) -> Result<SolveResult, SolverError> {
    params.validate()?;
    let (n, k) = oracle.instance();
    let problem_palette = n - 2 * k + 1;
    if oracle.palette_size() != problem_palette {
        return Err(SolverError::InvalidInput(alloc::format!(
            "oracle palette {} does not match the problem palette {problem_palette}",
            oracle.palette_size()
        )));
    }
    let queries_before = oracle.query_count();
    let mut stats = SolveStats::default();
    let mut outcome = None;
    for attempt in 1..=params.max_attempts {
        stats.attempts = attempt;
        match run_attempt(oracle, rng, params, &mut stats)? {
            AttemptOutcome::Edge { a, b, color } => {
                outcome = Some(match recheck_edge(n, &a, &b, color) {
                    Ok(()) => SolveOutcome::Edge { a, b, color },
                    Err(detail) => SolveOutcome::Failure {
                        reason: FailureReason::OracleViolation(detail),
                    },
                });
                break;
            }
            AttemptOutcome::Failed => continue,
            AttemptOutcome::Violation(detail) => {
                outcome = Some(SolveOutcome::Failure {
                    reason: FailureReason::OracleViolation(detail),
                });
                break;
            }
        }
    }
    let outcome = outcome.unwrap_or(SolveOutcome::Failure {
        reason: FailureReason::AttemptsExhausted,
    });
    stats.oracle_queries = oracle.query_count() - queries_before;
    Ok(SolveResult { outcome, stats })
}

/// Structural verification of a candidate edge; colors were oracle answers.
fn recheck_edge(n: u32, a: &StableSubset, b: &StableSubset, color: Color) -> Result<(), String> {
    let ground = GroundSet::full(n);
    if !is_stable(&ground, a.elements()) || !is_stable(&ground, b.elements()) {
        return Err(alloc::format!("edge endpoint not stable in [{n}]"));
    }
    if !are_disjoint(a, b) {
        return Err(alloc::format!("edge endpoints {a} and {b} are not disjoint"));
    }
    let _ = color;
    Ok(())
}

fn phase_one_length(n: u32, k: u32) -> u32 {
    let cutoff = 10u128 * (k as u128).pow(4);
    if (n as u128) > cutoff {
        n - cutoff as u32
    } else {
        0
    }
}

fn run_attempt<R: Rng + ?Sized>(
    oracle: &mut ColoringOracle,
    rng: &mut R,
    params: &SamplingParams,
    stats: &mut SolveStats,
) -> Result<AttemptOutcome, SolverError> {
    let (n, k) = oracle.instance();
    let s = phase_one_length(n, k);
    let epsilon = params.epsilon_override.unwrap_or(1.0 / (4.0 * n as f64));
    let mut ground = GroundSet::full(n);
    let mut palette: Vec<u32> = (1..=n - 2 * k + 1).collect();
    let mut records: Vec<EliminationRecord> = Vec::new();

    for iteration in 0..s {
        let result = element_elimination(oracle, &ground, &palette, epsilon, rng, params)?;
        stats.samples_drawn += result.samples_drawn;
        match result.outcome {
            EliminationOutcome::Edge { a, b, color } => {
                return Ok(AttemptOutcome::Edge { a, b, color });
            }
            EliminationOutcome::OffPalette { vertex, color } => {
                return recover_off_palette(oracle, rng, params, stats, &records, vertex, color);
            }
            EliminationOutcome::Popular { color, element } => {
                records.push(EliminationRecord { iteration, element, color });
                ground.remove(element);
                let pos = palette
                    .binary_search(&color.value())
                    .expect("popular color comes from the live palette");
                palette.remove(pos);
                stats.eliminations += 1;
            }
        }
    }

    // Exhaustive phase on the shrunken instance.
    let vertices: Vec<StableSubset> = enumerate_stable(&ground, k).collect();
    let mut colors = Vec::with_capacity(vertices.len());
    for v in &vertices {
        colors.push(oracle.color_of(v)?);
    }
    stats.phase2_vertices += vertices.len() as u64;

    if let Some(off) =
        (0..vertices.len()).find(|&i| palette.binary_search(&colors[i].value()).is_err())
    {
        let vertex = vertices[off].clone();
        let color = colors[off];
        return recover_off_palette(oracle, rng, params, stats, &records, vertex, color);
    }

    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); (n - 2 * k + 1) as usize];
    for (i, c) in colors.iter().enumerate() {
        buckets[(c.value() - 1) as usize].push(i);
    }
    for (i, v) in vertices.iter().enumerate() {
        let bucket = &buckets[(colors[i].value() - 1) as usize];
        let from = bucket.partition_point(|&j| j <= i);
        for &j in &bucket[from..] {
            if are_disjoint(v, &vertices[j]) {
                return Ok(AttemptOutcome::Edge {
                    a: v.clone(),
                    b: vertices[j].clone(),
                    color: colors[i],
                });
            }
        }
    }
    Ok(AttemptOutcome::Violation(
        "exhaustive phase found no same-colored disjoint pair, impossible for a \
         deterministic coloring of the declared palette"
            .into(),
    ))
}

/// Redraw loop for an off-palette vertex: sample the ground set that was live
/// when the offending color was eliminated, looking for a disjoint partner of
/// the same color.
fn recover_off_palette<R: Rng + ?Sized>(
    oracle: &mut ColoringOracle,
    rng: &mut R,
    params: &SamplingParams,
    stats: &mut SolveStats,
    records: &[EliminationRecord],
    vertex: StableSubset,
    color: Color,
) -> Result<AttemptOutcome, SolverError> {
    let (n, k) = oracle.instance();
    let Some(record) = records.iter().find(|r| r.color == color) else {
        return Ok(AttemptOutcome::Violation(alloc::format!(
            "off-palette color {color} was never eliminated"
        )));
    };
    let mut historical = GroundSet::full(n);
    for earlier in records.iter().take_while(|r| r.iteration < record.iteration) {
        historical.remove(earlier.element);
    }
    let sampler =
        StableSampler::new(&historical, k).expect("historical ground sets keep |X| >= 2k");
    let budget = params.retry_factor as u64 * n as u64;
    for _ in 0..budget {
        let candidate = sampler.sample(rng);
        stats.samples_drawn += 1;
        let c = oracle.color_of(&candidate)?;
        if c == color && are_disjoint(&vertex, &candidate) {
            let (a, b) = ordered(vertex, candidate);
            return Ok(AttemptOutcome::Edge { a, b, color });
        }
    }
    Ok(AttemptOutcome::Failed)
}

/// Checks a claimed edge against the oracle: stable in `[n]`, disjoint, and
/// equal colors. Costs two queries when the structural checks pass.
pub fn verify_edge(
    oracle: &mut ColoringOracle,
    a: &StableSubset,
    b: &StableSubset,
) -> Result<bool, OracleError> {
    let (n, k) = oracle.instance();
    let ground = GroundSet::full(n);
    if a.k() != k as usize || b.k() != k as usize {
        return Ok(false);
    }
    if !is_stable(&ground, a.elements()) || !is_stable(&ground, b.elements()) {
        return Ok(false);
    }
    if !are_disjoint(a, b) {
        return Ok(false);
    }
    Ok(oracle.color_of(a)? == oracle.color_of(b)?)
}

/// Verdict of [`brute_force_solve`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteForceOutcome {
    /// The lexicographically first same-colored disjoint pair.
    Edge { a: StableSubset, b: StableSubset, color: Color },
    /// The coloring is proper on this ground set.
    NotFound,
}

/// Queries every stable k-subset of `ground` and scans same-color buckets for
/// the lexicographically first disjoint pair. Intended as ground truth for
/// small instances; refuses to enumerate more than `max_vertices` vertices.
///
/// Unlike [`solve`] this accepts any oracle palette size, so it can confirm
/// that proper colorings (larger palette) have no monochromatic edge.
pub fn brute_force_solve(
    oracle: &mut ColoringOracle,
    ground: &GroundSet,
    max_vertices: u64,
) -> Result<BruteForceOutcome, SolverError> {
    let (n, k) = oracle.instance();
    if ground.ambient_n() != n {
        return Err(SolverError::InvalidInput("ground set universe does not match the oracle".into()));
    }
    let count = count_stable_cycle(ground.len() as u64, k as u64);
    if count > BigUint::from(max_vertices) {
        return Err(SolverError::BudgetExceeded { count, budget: max_vertices });
    }
    let vertices: Vec<StableSubset> = enumerate_stable(ground, k).collect();
    let mut colors = Vec::with_capacity(vertices.len());
    for v in &vertices {
        colors.push(oracle.color_of(v)?);
    }
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); oracle.palette_size() as usize];
    for (i, c) in colors.iter().enumerate() {
        buckets[(c.value() - 1) as usize].push(i);
    }
    for (i, v) in vertices.iter().enumerate() {
        let bucket = &buckets[(colors[i].value() - 1) as usize];
        let from = bucket.partition_point(|&j| j <= i);
        for &j in &bucket[from..] {
            if are_disjoint(v, &vertices[j]) {
                return Ok(BruteForceOutcome::Edge {
                    a: v.clone(),
                    b: vertices[j].clone(),
                    color: colors[i],
                });
            }
        }
    }
    Ok(BruteForceOutcome::NotFound)
}
