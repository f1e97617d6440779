//! The persisted result schema.
//!
//! One [`ResultRecord`] describes one solve trial. Records serialize to JSON
//! with a fixed field order so that serialize, parse, serialize round-trips
//! byte for byte, and flatten to CSV rows for spreadsheet-side tooling.

use schrijver_core::{SolveOutcome, SolveResult};
use serde::{Deserialize, Serialize};

use crate::spec::parse_elements;

/// Schema version stamped into every record.
pub const RECORD_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Result of one trial: instance, oracle, seed, verdict, and counters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub version: String,
    pub n: u32,
    pub k: u32,
    pub oracle: String,
    pub seed: u64,
    pub outcome: OutcomeRecord,
    pub stats: StatsRecord,
}

/// Verdict of a trial. The edge fields are present exactly on success.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutcomeRecord {
    pub status: OutcomeStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub edge: Option<[Vec<u32>; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub color: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutcomeStatus {
    Edge,
    Failure,
}

/// Counters for one trial, all totals across attempts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsRecord {
    pub oracle_queries: u64,
    pub samples_drawn: u64,
    pub eliminations: u64,
    pub attempts: u32,
    pub phase2_vertices: u64,
    pub wall_ms: u64,
}

impl ResultRecord {
    /// Shapes a solver result into the persisted schema.
    pub fn from_solve(
        n: u32,
        k: u32,
        oracle: String,
        seed: u64,
        result: &SolveResult,
        wall_ms: u64,
    ) -> Self {
        let outcome = match &result.outcome {
            SolveOutcome::Edge { a, b, color } => OutcomeRecord {
                status: OutcomeStatus::Edge,
                edge: Some([a.elements().to_vec(), b.elements().to_vec()]),
                color: Some(color.value()),
                reason: None,
            },
            SolveOutcome::Failure { reason } => OutcomeRecord {
                status: OutcomeStatus::Failure,
                edge: None,
                color: None,
                reason: Some(reason.to_string()),
            },
        };
        ResultRecord {
            version: RECORD_VERSION.to_string(),
            n,
            k,
            oracle,
            seed,
            outcome,
            stats: StatsRecord {
                oracle_queries: result.stats.oracle_queries,
                samples_drawn: result.stats.samples_drawn,
                eliminations: result.stats.eliminations,
                attempts: result.stats.attempts,
                phase2_vertices: result.stats.phase2_vertices,
                wall_ms,
            },
        }
    }

    /// Record for a trial that never produced a solver verdict, for example
    /// because its oracle process died.
    pub fn failure(n: u32, k: u32, oracle: String, seed: u64, reason: String, wall_ms: u64) -> Self {
        ResultRecord {
            version: RECORD_VERSION.to_string(),
            n,
            k,
            oracle,
            seed,
            outcome: OutcomeRecord {
                status: OutcomeStatus::Failure,
                edge: None,
                color: None,
                reason: Some(reason),
            },
            stats: StatsRecord {
                oracle_queries: 0,
                samples_drawn: 0,
                eliminations: 0,
                attempts: 0,
                phase2_vertices: 0,
                wall_ms,
            },
        }
    }

    /// One JSON line, no trailing newline.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }

    pub(crate) fn flat(&self) -> FlatRecord<'_> {
        FlatRecord {
            version: &self.version,
            n: self.n,
            k: self.k,
            oracle: &self.oracle,
            seed: self.seed,
            status: match self.outcome.status {
                OutcomeStatus::Edge => "edge",
                OutcomeStatus::Failure => "failure",
            },
            edge: self.outcome.edge.as_ref().map(format_edge),
            color: self.outcome.color,
            reason: self.outcome.reason.as_deref(),
            oracle_queries: self.stats.oracle_queries,
            samples_drawn: self.stats.samples_drawn,
            eliminations: self.stats.eliminations,
            attempts: self.stats.attempts,
            phase2_vertices: self.stats.phase2_vertices,
            wall_ms: self.stats.wall_ms,
        }
    }
}

/// CSV projection of a record, one column per leaf field.
#[derive(Serialize)]
pub(crate) struct FlatRecord<'a> {
    version: &'a str,
    n: u32,
    k: u32,
    oracle: &'a str,
    seed: u64,
    status: &'a str,
    edge: Option<String>,
    color: Option<u32>,
    reason: Option<&'a str>,
    oracle_queries: u64,
    samples_drawn: u64,
    eliminations: u64,
    attempts: u32,
    phase2_vertices: u64,
    wall_ms: u64,
}

/// "3,5" for the element list [3, 5].
pub fn join_elements(elements: &[u32]) -> String {
    let parts: Vec<String> = elements.iter().map(u32::to_string).collect();
    parts.join(",")
}

/// "3,5:4,6" for the edge {3,5}, {4,6}.
pub fn format_edge(edge: &[Vec<u32>; 2]) -> String {
    format!("{}:{}", join_elements(&edge[0]), join_elements(&edge[1]))
}

/// Parses the `format_edge` notation back into two element lists.
pub fn parse_edge(raw: &str) -> anyhow::Result<(Vec<u32>, Vec<u32>)> {
    let (a, b) = raw
        .split_once(':')
        .ok_or_else(|| anyhow::anyhow!("expected <a1>,..,<ak>:<b1>,..,<bk>, got {raw:?}"))?;
    Ok((parse_elements(a)?, parse_elements(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use schrijver_core::{
        rng, solve, ColoringOracle, FailureReason, SamplingParams, SolveOutcome,
    };

    fn hexagon_record() -> ResultRecord {
        let mut oracle = ColoringOracle::merged_min(6, 2).unwrap();
        let result = solve(&mut oracle, &mut rng::from_seed(7), &SamplingParams::default()).unwrap();
        ResultRecord::from_solve(6, 2, "builtin:merged-min".into(), 7, &result, 12)
    }

    #[test]
    fn edge_records_serialize_with_fixed_field_order() {
        let record = hexagon_record();
        assert_eq!(
            record.to_json(),
            concat!(
                r#"{"version":"0.1.0","n":6,"k":2,"oracle":"builtin:merged-min","seed":7,"#,
                r#""outcome":{"status":"edge","edge":[[3,5],[4,6]],"color":3},"#,
                r#""stats":{"oracle_queries":9,"samples_drawn":0,"eliminations":0,"#,
                r#""attempts":1,"phase2_vertices":9,"wall_ms":12}}"#
            )
        );
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let record = hexagon_record();
        let line = record.to_json();
        let reparsed: ResultRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(reparsed, record);
        assert_eq!(reparsed.to_json(), line);
    }

    #[test]
    fn failure_records_omit_the_edge_fields() {
        let record =
            ResultRecord::failure(6, 2, "builtin:merged-min".into(), 1, "boom".into(), 3);
        let line = record.to_json();
        assert!(line.contains(r#""status":"failure","reason":"boom""#));
        assert!(!line.contains("edge"));
        assert!(!line.contains("color"));
    }

    #[test]
    fn solver_failure_reasons_use_their_display_form() {
        let reason = FailureReason::AttemptsExhausted;
        let outcome = SolveOutcome::Failure { reason };
        let result = schrijver_core::SolveResult { outcome, stats: Default::default() };
        let record = ResultRecord::from_solve(6, 2, "builtin:merged-min".into(), 1, &result, 0);
        assert_eq!(record.outcome.reason.as_deref(), Some("attempts-exhausted"));
        assert_eq!(record.outcome.status, OutcomeStatus::Failure);
    }

    #[test]
    fn edge_notation_round_trips() {
        let edge = [vec![3, 5], vec![4, 6]];
        let text = format_edge(&edge);
        assert_eq!(text, "3,5:4,6");
        let (a, b) = parse_edge(&text).unwrap();
        assert_eq!((a, b), (vec![3, 5], vec![4, 6]));
        assert!(parse_edge("3,5").is_err());
        assert!(parse_edge("3,x:4,6").is_err());
    }
}
