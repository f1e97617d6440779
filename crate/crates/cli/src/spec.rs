//! Oracle specifications as the command line spells them, shared by the
//! solver CLI and the reference oracle executable.

use std::time::Duration;

use anyhow::{bail, Context, Result};
use rand::seq::SliceRandom;
use schrijver_core::{rng, ColoringOracle, OracleError};

use crate::exec;

/// A parsed `--oracle` argument. The permutation and the exec child are
/// instantiated per `(n, k)` instance by [`OracleChoice::build`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleChoice {
    MergedMin,
    PermutedMergedMin { perm: PermSpec },
    HashRandom { seed: u64 },
    Exec { command: Vec<String> },
}

/// Where a permutation of `[1, n]` comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermSpec {
    /// Images of `1..=n` in order.
    Explicit(Vec<u32>),
    /// Derived by [`permutation_from_seed`] once `n` is known.
    Seeded(u64),
}

impl PermSpec {
    pub fn resolve(&self, n: u32) -> Vec<u32> {
        match self {
            PermSpec::Explicit(p) => p.clone(),
            PermSpec::Seeded(seed) => permutation_from_seed(n, *seed),
        }
    }
}

/// Flags that refine a bare oracle kind.
#[derive(Debug, Clone, Default)]
pub struct OracleModifiers {
    pub hash_seed: Option<u64>,
    pub permutation: Option<Vec<u32>>,
    pub perm_seed: Option<u64>,
}

impl OracleChoice {
    /// Parses `builtin:<kind>` or `exec:<command line>`. Exec command lines
    /// split on whitespace; arguments with embedded spaces are unsupported.
    pub fn parse(raw: &str, modifiers: &OracleModifiers) -> Result<Self> {
        if let Some(kind) = raw.strip_prefix("builtin:") {
            return Self::parse_builtin(kind, modifiers);
        }
        if let Some(command) = raw.strip_prefix("exec:") {
            reject_permutation_flags("exec oracles", modifiers)?;
            if modifiers.hash_seed.is_some() {
                bail!("--hash-seed does not apply to exec oracles");
            }
            let command: Vec<String> = command.split_whitespace().map(str::to_string).collect();
            if command.is_empty() {
                bail!("exec oracle needs a command line");
            }
            return Ok(OracleChoice::Exec { command });
        }
        bail!("unknown oracle spec {raw:?}, expected builtin:<kind> or exec:<command line>")
    }

    /// Parses a bare builtin kind, the spelling the reference oracle takes.
    pub fn parse_builtin(kind: &str, modifiers: &OracleModifiers) -> Result<Self> {
        match kind {
            "merged-min" => {
                reject_permutation_flags("merged-min", modifiers)?;
                if modifiers.hash_seed.is_some() {
                    bail!("--hash-seed does not apply to merged-min");
                }
                Ok(OracleChoice::MergedMin)
            }
            "permuted-merged-min" => {
                if modifiers.hash_seed.is_some() {
                    bail!("--hash-seed does not apply to permuted-merged-min");
                }
                let perm = match (&modifiers.permutation, modifiers.perm_seed) {
                    (Some(p), None) => PermSpec::Explicit(p.clone()),
                    (None, Some(seed)) => PermSpec::Seeded(seed),
                    (None, None) => {
                        bail!("permuted-merged-min needs --permutation or --perm-seed")
                    }
                    (Some(_), Some(_)) => {
                        bail!("--permutation and --perm-seed are mutually exclusive")
                    }
                };
                Ok(OracleChoice::PermutedMergedMin { perm })
            }
            "hash-random" => {
                reject_permutation_flags("hash-random", modifiers)?;
                Ok(OracleChoice::HashRandom { seed: modifiers.hash_seed.unwrap_or(0) })
            }
            other => bail!(
                "unknown builtin coloring {other:?}, expected merged-min, \
                 permuted-merged-min, or hash-random"
            ),
        }
    }

    /// Canonical spelling recorded alongside results.
    pub fn label(&self) -> String {
        match self {
            OracleChoice::MergedMin => "builtin:merged-min".into(),
            OracleChoice::PermutedMergedMin { perm: PermSpec::Explicit(p) } => {
                format!("builtin:permuted-merged-min?perm={}", crate::record::join_elements(p))
            }
            OracleChoice::PermutedMergedMin { perm: PermSpec::Seeded(seed) } => {
                format!("builtin:permuted-merged-min?perm-seed={seed}")
            }
            OracleChoice::HashRandom { seed } => format!("builtin:hash-random?seed={seed}"),
            OracleChoice::Exec { command } => format!("exec:{}", command.join(" ")),
        }
    }

    /// Instantiates the oracle for one instance. `timeout` only applies to
    /// exec oracles.
    pub fn build(&self, n: u32, k: u32, timeout: Duration) -> Result<ColoringOracle, OracleError> {
        match self {
            OracleChoice::MergedMin => ColoringOracle::merged_min(n, k),
            OracleChoice::PermutedMergedMin { perm } => {
                ColoringOracle::permuted_merged_min(n, k, perm.resolve(n))
            }
            OracleChoice::HashRandom { seed } => ColoringOracle::hash_random(n, k, *seed),
            OracleChoice::Exec { command } => exec::connect_external(command, n, k, timeout),
        }
    }
}

fn reject_permutation_flags(what: &str, modifiers: &OracleModifiers) -> Result<()> {
    if modifiers.permutation.is_some() || modifiers.perm_seed.is_some() {
        bail!("--permutation and --perm-seed do not apply to {what}");
    }
    Ok(())
}

/// The permutation `--perm-seed` stands for: a Fisher-Yates shuffle of
/// `[1, n]` on the deterministic stream of `seed`. The CLI and the reference
/// oracle share this rule, so equal seeds mean extensionally equal oracles.
pub fn permutation_from_seed(n: u32, seed: u64) -> Vec<u32> {
    let mut images: Vec<u32> = (1..=n).collect();
    images.shuffle(&mut rng::from_seed(seed));
    images
}

/// Parses a comma separated element list like "3,5".
pub fn parse_elements(raw: &str) -> Result<Vec<u32>> {
    raw.split(',')
        .map(|token| {
            let token = token.trim();
            token.parse::<u32>().with_context(|| format!("bad element {token:?} in {raw:?}"))
        })
        .collect()
}

/// Parses "1,5,20-23" into the listed values, ranges inclusive.
pub fn parse_index_list(raw: &str) -> Result<Vec<u64>> {
    let mut out = Vec::new();
    for token in raw.split(',') {
        let token = token.trim();
        match token.split_once('-') {
            Some((lo, hi)) => {
                let lo: u64 =
                    lo.trim().parse().with_context(|| format!("bad range start in {token:?}"))?;
                let hi: u64 =
                    hi.trim().parse().with_context(|| format!("bad range end in {token:?}"))?;
                if lo > hi {
                    bail!("range {token:?} is empty");
                }
                out.extend(lo..=hi);
            }
            None => {
                out.push(token.parse().with_context(|| format!("bad entry {token:?} in {raw:?}"))?)
            }
        }
    }
    Ok(out)
}
