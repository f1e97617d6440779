//! Solver front end. Exit codes: 0 for a verified edge, 2 for a structured
//! failure (no edge found, or a claimed edge that does not verify), 1 for
//! usage, protocol, and oracle errors.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process;
use std::time::{Duration, Instant};

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};
use schrijver_core::{
    brute_force_solve, count_stable_cycle, enumerate_stable, rng, solve, verify_edge,
    BruteForceOutcome, FailureReason, GroundSet, SamplingParams, SolveOutcome, StableSampler,
    StableSubset,
};
use schrijver_cli::bench::{run_bench, ExperimentSpec, OutputFormat, RecordSink};
use schrijver_cli::record::{
    join_elements, parse_edge, OutcomeRecord, OutcomeStatus, ResultRecord, StatsRecord,
    RECORD_VERSION,
};
use schrijver_cli::spec::{parse_elements, parse_index_list, OracleChoice, OracleModifiers};

#[derive(Parser)]
#[command(
    name = "schrijver",
    version,
    about = "Find monochromatic edges in Schrijver graphs from oracle access to a coloring"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the randomized solver once and print a result record
    Solve(SolveCmd),
    /// Query every vertex and print the lexicographically first monochromatic edge
    Bruteforce(BruteforceCmd),
    /// Print the number of stable k-subsets of the cyclic ground set [n]
    Count(InstanceArgs),
    /// List stable k-subsets in lexicographic order, one per line
    Enumerate(EnumerateCmd),
    /// Draw uniform random stable k-subsets, one per line
    Sample(SampleCmd),
    /// Check a claimed monochromatic edge against an oracle
    Verify(VerifyCmd),
    /// Run a grid of solve trials and persist one record per trial
    Bench(BenchCmd),
}

#[derive(Args)]
struct InstanceArgs {
    /// Ground set size
    #[arg(long)]
    n: u32,
    /// Subset size
    #[arg(long)]
    k: u32,
}

#[derive(Args)]
struct OracleArgs {
    /// builtin:merged-min | builtin:permuted-merged-min | builtin:hash-random
    /// | exec:<command line>
    #[arg(long)]
    oracle: String,
    /// Seed for builtin:hash-random
    #[arg(long)]
    hash_seed: Option<u64>,
    /// Explicit permutation for builtin:permuted-merged-min, the images of
    /// 1..=n comma separated
    #[arg(long, conflicts_with = "perm_seed")]
    permutation: Option<String>,
    /// Derive the permutation for builtin:permuted-merged-min from this seed
    #[arg(long)]
    perm_seed: Option<u64>,
    /// Per-reply timeout in seconds for exec oracles
    #[arg(long, default_value_t = 10.0)]
    oracle_timeout: f64,
}

impl OracleArgs {
    fn choice(&self) -> Result<OracleChoice> {
        let permutation = self.permutation.as_deref().map(parse_elements).transpose()?;
        let modifiers = OracleModifiers {
            hash_seed: self.hash_seed,
            permutation,
            perm_seed: self.perm_seed,
        };
        OracleChoice::parse(&self.oracle, &modifiers)
    }

    fn timeout(&self) -> Result<Duration> {
        if !(self.oracle_timeout > 0.0 && self.oracle_timeout.is_finite()) {
            bail!("--oracle-timeout must be a positive number of seconds");
        }
        Ok(Duration::from_secs_f64(self.oracle_timeout))
    }
}

#[derive(Args)]
struct SamplingArgs {
    /// Sample count multiplier in ceil(b n^2 ln(n / eps))
    #[arg(long, conflicts_with = "strict_b")]
    b: Option<f64>,
    /// Use the analysis-backed multiplier b = 100 instead of the empirical default
    #[arg(long)]
    strict_b: bool,
    /// Per-iteration failure budget, overriding the default 1/(4n)
    #[arg(long)]
    epsilon: Option<f64>,
    /// Whole-solve attempts before reporting failure
    #[arg(long)]
    max_attempts: Option<u32>,
    /// Recovery redraw budget, in multiples of n
    #[arg(long)]
    retry_factor: Option<u32>,
}

impl SamplingArgs {
    fn params(&self) -> SamplingParams {
        let mut params = if self.strict_b {
            SamplingParams::strict()
        } else {
            SamplingParams::default()
        };
        if let Some(b) = self.b {
            params.b = b;
        }
        if let Some(epsilon) = self.epsilon {
            params.epsilon_override = Some(epsilon);
        }
        if let Some(attempts) = self.max_attempts {
            params.max_attempts = attempts;
        }
        if let Some(factor) = self.retry_factor {
            params.retry_factor = factor;
        }
        params
    }
}

#[derive(Args)]
struct SolveCmd {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    oracle: OracleArgs,
    #[command(flatten)]
    sampling: SamplingArgs,
    /// Seed for the solver's random stream
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct BruteforceCmd {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    oracle: OracleArgs,
    /// Refuse to enumerate more vertices than this
    #[arg(long, default_value_t = 1_000_000)]
    max_vertices: u64,
}

#[derive(Args)]
struct EnumerateCmd {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Restrict the ground set to these elements of [n], comma separated
    #[arg(long)]
    elements: Option<String>,
}

#[derive(Args)]
struct SampleCmd {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Restrict the ground set to these elements of [n], comma separated
    #[arg(long)]
    elements: Option<String>,
    /// Number of draws
    #[arg(long, default_value_t = 1)]
    count: u64,
    /// Seed for the sampling stream
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct VerifyCmd {
    #[command(flatten)]
    instance: InstanceArgs,
    #[command(flatten)]
    oracle: OracleArgs,
    /// Candidate edge as <a1>,..,<ak>:<b1>,..,<bk>
    #[arg(long)]
    edge: String,
}

#[derive(Args)]
struct BenchCmd {
    /// Ground set sizes, comma separated with inclusive ranges ("200,250,300")
    #[arg(long)]
    n: String,
    /// Subset sizes ("2" or "2,3")
    #[arg(long)]
    k: String,
    /// Solver seeds, one trial per seed per cell ("1-20" or "1,5,9")
    #[arg(long)]
    seeds: String,
    #[command(flatten)]
    oracle: OracleArgs,
    #[command(flatten)]
    sampling: SamplingArgs,
    /// Append records to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record format
    #[arg(long, value_enum, default_value_t = OutputFormat::Jsonl)]
    format: OutputFormat,
    /// Worker threads for trial parallelism
    #[arg(long)]
    jobs: Option<usize>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            process::exit(code);
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            1
        }
    };
    process::exit(code);
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Cmd::Solve(cmd) => cmd_solve(cmd),
        Cmd::Bruteforce(cmd) => cmd_bruteforce(cmd),
        Cmd::Count(args) => cmd_count(args),
        Cmd::Enumerate(cmd) => cmd_enumerate(cmd),
        Cmd::Sample(cmd) => cmd_sample(cmd),
        Cmd::Verify(cmd) => cmd_verify(cmd),
        Cmd::Bench(cmd) => cmd_bench(cmd),
    }
}

fn cmd_solve(cmd: SolveCmd) -> Result<i32> {
    let choice = cmd.oracle.choice()?;
    let mut oracle = choice.build(cmd.instance.n, cmd.instance.k, cmd.oracle.timeout()?)?;
    let params = cmd.sampling.params();
    let start = Instant::now();
    let result = solve(&mut oracle, &mut rng::from_seed(cmd.seed), &params)?;
    let wall_ms = start.elapsed().as_millis() as u64;
    let record = ResultRecord::from_solve(
        cmd.instance.n,
        cmd.instance.k,
        choice.label(),
        cmd.seed,
        &result,
        wall_ms,
    );
    println!("{}", record.to_json());
    Ok(match result.outcome {
        SolveOutcome::Edge { .. } => 0,
        SolveOutcome::Failure { reason: FailureReason::AttemptsExhausted } => 2,
        SolveOutcome::Failure { reason: FailureReason::OracleViolation(_) } => 1,
    })
}

fn cmd_bruteforce(cmd: BruteforceCmd) -> Result<i32> {
    let choice = cmd.oracle.choice()?;
    let (n, k) = (cmd.instance.n, cmd.instance.k);
    let mut oracle = choice.build(n, k, cmd.oracle.timeout()?)?;
    let ground = GroundSet::full(n);
    let start = Instant::now();
    let outcome = brute_force_solve(&mut oracle, &ground, cmd.max_vertices)?;
    let wall_ms = start.elapsed().as_millis() as u64;
    let (outcome, code) = match outcome {
        BruteForceOutcome::Edge { a, b, color } => (
            OutcomeRecord {
                status: OutcomeStatus::Edge,
                edge: Some([a.elements().to_vec(), b.elements().to_vec()]),
                color: Some(color.value()),
                reason: None,
            },
            0,
        ),
        BruteForceOutcome::NotFound => (
            OutcomeRecord {
                status: OutcomeStatus::Failure,
                edge: None,
                color: None,
                reason: Some("no-monochromatic-edge".into()),
            },
            2,
        ),
    };
    let queries = oracle.query_count();
    let record = ResultRecord {
        version: RECORD_VERSION.to_string(),
        n,
        k,
        oracle: choice.label(),
        seed: 0,
        outcome,
        stats: StatsRecord {
            oracle_queries: queries,
            samples_drawn: 0,
            eliminations: 0,
            attempts: 1,
            phase2_vertices: queries,
            wall_ms,
        },
    };
    println!("{}", record.to_json());
    Ok(code)
}

fn cmd_count(args: InstanceArgs) -> Result<i32> {
    println!("{}", count_stable_cycle(args.n as u64, args.k as u64));
    Ok(0)
}

fn ground_for(n: u32, elements: Option<&str>) -> Result<GroundSet> {
    match elements {
        Some(raw) => {
            let elements = parse_elements(raw)?;
            GroundSet::from_elements(n, elements).map_err(|e| anyhow::anyhow!("{e}"))
        }
        None => Ok(GroundSet::full(n)),
    }
}

fn cmd_enumerate(cmd: EnumerateCmd) -> Result<i32> {
    let ground = ground_for(cmd.instance.n, cmd.elements.as_deref())?;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    for vertex in enumerate_stable(&ground, cmd.instance.k) {
        if let Err(e) = writeln!(out, "{}", join_elements(vertex.elements())) {
            return broken_pipe_ok(e);
        }
    }
    if let Err(e) = out.flush() {
        return broken_pipe_ok(e);
    }
    Ok(0)
}

fn broken_pipe_ok(e: io::Error) -> Result<i32> {
    if e.kind() == io::ErrorKind::BrokenPipe {
        Ok(0)
    } else {
        Err(e.into())
    }
}

fn cmd_sample(cmd: SampleCmd) -> Result<i32> {
    let ground = ground_for(cmd.instance.n, cmd.elements.as_deref())?;
    let sampler =
        StableSampler::new(&ground, cmd.instance.k).map_err(|e| anyhow::anyhow!("{e}"))?;
    let mut rng = rng::from_seed(cmd.seed);
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    for _ in 0..cmd.count {
        let vertex = sampler.sample(&mut rng);
        if let Err(e) = writeln!(out, "{}", join_elements(vertex.elements())) {
            return broken_pipe_ok(e);
        }
    }
    if let Err(e) = out.flush() {
        return broken_pipe_ok(e);
    }
    Ok(0)
}

fn cmd_verify(cmd: VerifyCmd) -> Result<i32> {
    let choice = cmd.oracle.choice()?;
    let (n, k) = (cmd.instance.n, cmd.instance.k);
    let (a_elements, b_elements) = parse_edge(&cmd.edge)?;
    let ground = GroundSet::full(n);
    let a = match StableSubset::new(a_elements, &ground) {
        Ok(a) => a,
        Err(e) => {
            println!("not a monochromatic edge: {e}");
            return Ok(2);
        }
    };
    let b = match StableSubset::new(b_elements, &ground) {
        Ok(b) => b,
        Err(e) => {
            println!("not a monochromatic edge: {e}");
            return Ok(2);
        }
    };
    let mut oracle = choice.build(n, k, cmd.oracle.timeout()?)?;
    if verify_edge(&mut oracle, &a, &b)? {
        println!("verified: {a} and {b} are disjoint and share a color");
        Ok(0)
    } else {
        println!("not a monochromatic edge");
        Ok(2)
    }
}

fn cmd_bench(cmd: BenchCmd) -> Result<i32> {
    let spec = ExperimentSpec {
        ns: to_u32_list(&cmd.n)?,
        ks: to_u32_list(&cmd.k)?,
        seeds: parse_index_list(&cmd.seeds)?,
        oracle: cmd.oracle.choice()?,
        params: cmd.sampling.params(),
        oracle_timeout: cmd.oracle.timeout()?,
    };
    let sink = match &cmd.out {
        Some(path) => RecordSink::append_path(path, cmd.format)?,
        None => RecordSink::from_writer(Box::new(io::stdout()), cmd.format, true),
    };
    let summary = run_bench(&spec, cmd.jobs, &sink)?;
    eprintln!("{summary}");
    Ok(0)
}

fn to_u32_list(raw: &str) -> Result<Vec<u32>> {
    parse_index_list(raw)?
        .into_iter()
        .map(|value| u32::try_from(value).map_err(|_| anyhow::anyhow!("{value} is too large")))
        .collect()
}
