//! Grid runner: the cartesian product of instance sizes and seeds against one
//! oracle spec, each trial solved independently and persisted as one record.
//!
//! Trials may run in parallel; every trial owns its oracle instance (exec
//! oracles spawn one child per trial) and draws its randomness from its own
//! seed, so a bench record for `(n, k, seed)` equals the record a lone
//! `solve` run with the same seed would produce. The sink serializes appends,
//! which keeps JSON Lines output valid under concurrency.

use std::fmt;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use rayon::prelude::*;
use schrijver_core::{rng, solve, SamplingParams, SolverError};

use crate::record::{OutcomeStatus, ResultRecord};
use crate::spec::OracleChoice;

/// One bench invocation: every `(n, k)` cell runs every seed once.
#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub ns: Vec<u32>,
    pub ks: Vec<u32>,
    pub seeds: Vec<u64>,
    pub oracle: OracleChoice,
    pub params: SamplingParams,
    pub oracle_timeout: Duration,
}

impl ExperimentSpec {
    /// Rejects empty grids and cells with `n < 2k`.
    pub fn validate(&self) -> Result<()> {
        if self.ns.is_empty() {
            bail!("no ground set sizes given");
        }
        if self.ks.is_empty() {
            bail!("no subset sizes given");
        }
        if self.seeds.is_empty() {
            bail!("no seeds given");
        }
        for &n in &self.ns {
            for &k in &self.ks {
                if k < 1 || n < 2 * k {
                    bail!("cell n = {n}, k = {k} violates n >= 2k >= 2");
                }
            }
        }
        Ok(())
    }

    fn trials(&self) -> Vec<(u32, u32, u64)> {
        let mut trials = Vec::with_capacity(self.ns.len() * self.ks.len() * self.seeds.len());
        for &n in &self.ns {
            for &k in &self.ks {
                for &seed in &self.seeds {
                    trials.push((n, k, seed));
                }
            }
        }
        trials
    }
}

/// Aggregate printed after a bench run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchSummary {
    pub trials: u64,
    pub successes: u64,
    pub median_queries: u64,
}

impl BenchSummary {
    pub fn success_rate(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.successes as f64 / self.trials as f64
        }
    }
}

impl fmt::Display for BenchSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} records, success rate {:.3}, median oracle queries {}",
            self.trials,
            self.success_rate(),
            self.median_queries
        )
    }
}

/// Record format for persisted results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Jsonl,
    Csv,
}

enum Sink {
    Jsonl(Box<dyn Write + Send>),
    Csv(csv::Writer<Box<dyn Write + Send>>),
}

/// Serialized, flush-per-record writer shared by concurrent trials.
pub struct RecordSink {
    inner: Mutex<Sink>,
}

impl RecordSink {
    /// Appends to `path`, creating it if needed. A CSV header row is written
    /// only when the file starts empty.
    pub fn append_path(path: &Path, format: OutputFormat) -> Result<Self> {
        let file = OpenOptions::new()
            .create(true)
            .append(true)
            .open(path)
            .with_context(|| format!("opening {}", path.display()))?;
        let fresh = file.metadata()?.len() == 0;
        Ok(Self::from_writer(Box::new(file), format, fresh))
    }

    /// Writes to an arbitrary sink. `csv_header` controls whether a CSV
    /// header row precedes the first record.
    pub fn from_writer(out: Box<dyn Write + Send>, format: OutputFormat, csv_header: bool) -> Self {
        let sink = match format {
            OutputFormat::Jsonl => Sink::Jsonl(out),
            OutputFormat::Csv => {
                Sink::Csv(csv::WriterBuilder::new().has_headers(csv_header).from_writer(out))
            }
        };
        RecordSink { inner: Mutex::new(sink) }
    }

    pub fn write(&self, record: &ResultRecord) -> Result<()> {
        let mut sink = self.inner.lock().expect("record sink poisoned");
        match &mut *sink {
            Sink::Jsonl(out) => {
                let mut line = record.to_json();
                line.push('\n');
                out.write_all(line.as_bytes())?;
                out.flush()?;
            }
            Sink::Csv(writer) => {
                writer.serialize(record.flat())?;
                writer.flush()?;
            }
        }
        Ok(())
    }
}

/// Runs every trial of `spec`, appending one record per trial to `sink`.
/// Trial-level oracle failures become failure records and the bench
/// continues; only sink IO errors abort. `jobs` bounds the worker threads,
/// defaulting to the global thread pool.
pub fn run_bench(spec: &ExperimentSpec, jobs: Option<usize>, sink: &RecordSink) -> Result<BenchSummary> {
    spec.validate()?;
    let trials = spec.trials();
    let tally: Mutex<(u64, Vec<u64>)> = Mutex::new((0, Vec::with_capacity(trials.len())));
    let run_all = || {
        trials.par_iter().try_for_each(|&(n, k, seed)| -> Result<()> {
            let record = run_trial(spec, n, k, seed);
            sink.write(&record)?;
            let mut tally = tally.lock().expect("bench tally poisoned");
            if record.outcome.status == OutcomeStatus::Edge {
                tally.0 += 1;
            }
            tally.1.push(record.stats.oracle_queries);
            Ok(())
        })
    };
    match jobs {
        Some(threads) => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .context("building the bench thread pool")?
            .install(run_all)?,
        None => run_all()?,
    }
    let (successes, mut queries) = tally.into_inner().expect("bench tally poisoned");
    queries.sort_unstable();
    let median_queries =
        if queries.is_empty() { 0 } else { queries[(queries.len() - 1) / 2] };
    Ok(BenchSummary { trials: queries.len() as u64, successes, median_queries })
}

fn run_trial(spec: &ExperimentSpec, n: u32, k: u32, seed: u64) -> ResultRecord {
    let label = spec.oracle.label();
    let start = Instant::now();
    let result = spec
        .oracle
        .build(n, k, spec.oracle_timeout)
        .map_err(SolverError::from)
        .and_then(|mut oracle| solve(&mut oracle, &mut rng::from_seed(seed), &spec.params));
    let wall_ms = start.elapsed().as_millis() as u64;
    match result {
        Ok(solved) => ResultRecord::from_solve(n, k, label, seed, &solved, wall_ms),
        Err(e) => ResultRecord::failure(n, k, label, seed, e.to_string(), wall_ms),
    }
}
