//! Command line harness around `schrijver-core`: oracle specs shared by the
//! solver CLI and the reference oracle executable, the external process
//! adapter, the persisted result schema, and the bench grid runner.

pub mod bench;
pub mod exec;
pub mod record;
pub mod spec;

pub use bench::{run_bench, BenchSummary, ExperimentSpec, OutputFormat, RecordSink};
pub use exec::{connect_external, ExecOracle, DEFAULT_ORACLE_TIMEOUT};
pub use record::{
    format_edge, join_elements, parse_edge, OutcomeRecord, OutcomeStatus, ResultRecord,
    StatsRecord, RECORD_VERSION,
};
pub use spec::{
    parse_elements, parse_index_list, permutation_from_seed, OracleChoice, OracleModifiers,
    PermSpec,
};
