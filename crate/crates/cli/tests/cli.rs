//! End-to-end tests of the main binary: output records, exit codes, and the
//! exec oracle path, all through real process spawns.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use schrijver_cli::record::ResultRecord;
use serde_json::Value;

const CLI_BIN: &str = env!("CARGO_BIN_EXE_schrijver");
const ORACLE_BIN: &str = env!("CARGO_BIN_EXE_schrijver-oracle");

fn run(args: &[&str]) -> Output {
    Command::new(CLI_BIN).args(args).output().expect("binary should run")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("killed by signal")
}

fn parse_record(line: &str) -> ResultRecord {
    serde_json::from_str(line.trim()).expect("record should parse")
}

fn write_script(dir: &Path, body: &str) -> String {
    let path = dir.join("oracle.sh");
    fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn solve_on_the_hexagon_prints_the_known_record() {
    let output = run(&[
        "solve", "--n", "6", "--k", "2", "--oracle", "builtin:merged-min", "--seed", "7",
    ]);
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr_of(&output));
    let line = stdout_of(&output);
    let value: Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(value["version"], "0.1.0");
    assert_eq!(value["n"], 6);
    assert_eq!(value["k"], 2);
    assert_eq!(value["oracle"], "builtin:merged-min");
    assert_eq!(value["seed"], 7);
    assert_eq!(value["outcome"]["status"], "edge");
    assert_eq!(value["outcome"]["edge"], serde_json::json!([[3, 5], [4, 6]]));
    assert_eq!(value["outcome"]["color"], 3);
    assert_eq!(value["stats"]["oracle_queries"], 9);
    assert_eq!(value["stats"]["phase2_vertices"], 9);
    assert_eq!(value["stats"]["attempts"], 1);
    assert!(value["outcome"].get("reason").is_none());
}

#[test]
fn printed_records_round_trip_byte_identically() {
    let output = run(&[
        "solve", "--n", "20", "--k", "3", "--oracle", "builtin:merged-min", "--seed", "3",
    ]);
    assert_eq!(exit_code(&output), 0);
    let line = stdout_of(&output);
    let record = parse_record(&line);
    assert_eq!(record.to_json(), line.trim());
}

#[test]
fn solve_on_the_square_with_a_hashed_coloring() {
    let output = run(&[
        "solve", "--n", "4", "--k", "2", "--oracle", "builtin:hash-random", "--hash-seed", "1",
        "--seed", "1",
    ]);
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr_of(&output));
    let record = parse_record(&stdout_of(&output));
    assert_eq!(record.oracle, "builtin:hash-random?seed=1");
    let edge = record.outcome.edge.expect("square instances always have an edge");
    assert_eq!(edge, [vec![1, 3], vec![2, 4]]);
}

#[test]
fn exec_oracle_solves_identically_to_the_builtin()  {
    let builtin = run(&[
        "solve", "--n", "6", "--k", "2", "--oracle", "builtin:merged-min", "--seed", "3",
    ]);
    let command = format!("exec:{ORACLE_BIN} --kind merged-min");
    let external = run(&["solve", "--n", "6", "--k", "2", "--oracle", &command, "--seed", "3"]);
    assert_eq!(exit_code(&builtin), 0);
    assert_eq!(exit_code(&external), 0, "stderr: {}", stderr_of(&external));
    let mut a = parse_record(&stdout_of(&builtin));
    let mut b = parse_record(&stdout_of(&external));
    a.oracle = String::new();
    b.oracle = String::new();
    a.stats.wall_ms = 0;
    b.stats.wall_ms = 0;
    assert_eq!(a, b);
}

#[test]
fn verify_distinguishes_edges_from_non_edges() {
    let base = ["verify", "--n", "6", "--k", "2", "--oracle", "builtin:merged-min"];
    let good = run(&[&base[..], &["--edge", "3,5:4,6"]].concat());
    assert_eq!(exit_code(&good), 0);
    assert!(stdout_of(&good).starts_with("verified"));

    let intersecting = run(&[&base[..], &["--edge", "1,3:3,5"]].concat());
    assert_eq!(exit_code(&intersecting), 2);

    let unstable = run(&[&base[..], &["--edge", "1,2:4,6"]].concat());
    assert_eq!(exit_code(&unstable), 2);
    assert!(stdout_of(&unstable).starts_with("not a monochromatic edge"));

    let garbage = run(&[&base[..], &["--edge", "garbage"]].concat());
    assert_eq!(exit_code(&garbage), 1);
}

#[test]
fn count_prints_the_closed_form() {
    let output = run(&["count", "--n", "8", "--k", "3"]);
    assert_eq!(exit_code(&output), 0);
    assert_eq!(stdout_of(&output).trim(), "16");
}

#[test]
fn enumerate_lists_the_hexagon_vertices_in_order() {
    let output = run(&["enumerate", "--n", "6", "--k", "2"]);
    assert_eq!(exit_code(&output), 0);
    let stdout = stdout_of(&output);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(lines.len(), 9);
    assert_eq!(lines[0], "1,3");
    assert_eq!(lines[8], "4,6");
}

#[test]
fn sample_is_reproducible_for_a_fixed_seed() {
    let args = ["sample", "--n", "10", "--k", "3", "--count", "3", "--seed", "5"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(exit_code(&first), 0);
    assert_eq!(stdout_of(&first), "1,5,8\n3,6,9\n4,7,9\n");
    assert_eq!(stdout_of(&first), stdout_of(&second));
}

#[test]
fn scripted_oracle_drives_the_solver_into_attempts_exhausted() {
    let dir = tempfile::tempdir().unwrap();
    let script = write_script(
        dir.path(),
        concat!(
            "#!/bin/sh\n",
            "q=0\n",
            "while read -r line; do\n",
            "    set -- $line\n",
            "    case \"$1\" in\n",
            "        HELLO) echo \"OK\" ;;\n",
            "        COLOR)\n",
            "            q=$((q + 1))\n",
            "            case $q in\n",
            "                1) echo 10 ;;\n",
            "                2) echo 20 ;;\n",
            "                3) echo 30 ;;\n",
            "                4) echo 10 ;;\n",
            "                5) echo 40 ;;\n",
            "                6) echo 50 ;;\n",
            "                *) echo 20 ;;\n",
            "            esac\n",
            "            ;;\n",
            "        BYE) exit 0 ;;\n",
            "    esac\n",
            "done\n",
        ),
    );
    let output = run(&[
        "solve", "--n", "162", "--k", "2", "--oracle", &format!("exec:sh {script}"),
        "--b", "0.00001", "--epsilon", "0.01", "--max-attempts", "1", "--seed", "8",
    ]);
    assert_eq!(exit_code(&output), 2, "stderr: {}", stderr_of(&output));
    let record = parse_record(&stdout_of(&output));
    assert_eq!(record.outcome.reason.as_deref(), Some("attempts-exhausted"));
    assert!(record.outcome.edge.is_none());
    assert_eq!(record.stats.oracle_queries, 2922);
    assert_eq!(record.stats.samples_drawn, 2922);
    assert_eq!(record.stats.eliminations, 1);
    assert_eq!(record.stats.attempts, 1);
}

#[test]
fn oracle_that_dies_at_the_handshake_exits_one() {
    let output = run(&["solve", "--n", "6", "--k", "2", "--oracle", "exec:false", "--seed", "1"]);
    assert_eq!(exit_code(&output), 1);
    assert!(stderr_of(&output).contains("oracle"));
    assert!(stdout_of(&output).is_empty());
}

#[test]
fn out_of_palette_reply_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let script = write_script(
        dir.path(),
        concat!(
            "#!/bin/sh\n",
            "while read -r line; do\n",
            "    set -- $line\n",
            "    case \"$1\" in\n",
            "        HELLO) echo \"OK\" ;;\n",
            "        COLOR) echo 0 ;;\n",
            "        BYE) exit 0 ;;\n",
            "    esac\n",
            "done\n",
        ),
    );
    let output = run(&[
        "solve", "--n", "6", "--k", "2", "--oracle", &format!("exec:sh {script}"), "--seed", "1",
    ]);
    assert_eq!(exit_code(&output), 1);
    assert!(stderr_of(&output).contains("outside palette"));
}

#[test]
fn usage_errors_exit_one_and_help_exits_zero() {
    assert_eq!(exit_code(&run(&["solve", "--bogus"])), 1);
    assert_eq!(exit_code(&run(&["solve", "--n", "5", "--k", "3", "--oracle", "builtin:merged-min"])), 1);
    assert_eq!(exit_code(&run(&["solve", "--n", "6", "--k", "2", "--oracle", "builtin:nope"])), 1);
    assert_eq!(
        exit_code(&run(&[
            "solve", "--n", "6", "--k", "2", "--oracle", "builtin:merged-min",
            "--oracle-timeout", "0",
        ])),
        1
    );
    assert_eq!(
        exit_code(&run(&[
            "bench", "--n", "6", "--k", "2", "--seeds", "", "--oracle", "builtin:merged-min",
        ])),
        1
    );
    assert_eq!(
        exit_code(&run(&[
            "bench", "--n", "5,6", "--k", "3", "--seeds", "1-3", "--oracle", "builtin:merged-min",
        ])),
        1
    );
    assert_eq!(exit_code(&run(&["--help"])), 0);
    assert_eq!(exit_code(&run(&["solve", "--help"])), 0);
    assert_eq!(exit_code(&run(&["--version"])), 0);
}

#[test]
fn bench_appends_jsonl_records_and_reports_a_summary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("records.jsonl");
    let args = [
        "bench", "--n", "6,8", "--k", "2", "--seeds", "1-3", "--oracle", "builtin:merged-min",
        "--out", path.to_str().unwrap(),
    ];
    let output = run(&args);
    assert_eq!(exit_code(&output), 0, "stderr: {}", stderr_of(&output));
    assert!(stderr_of(&output).contains("6 records, success rate 1.000, median oracle queries 9"));

    let body = fs::read_to_string(&path).unwrap();
    let records: Vec<ResultRecord> = body.lines().map(parse_record).collect();
    assert_eq!(records.len(), 6);
    let mut cells: Vec<(u32, u64)> = records.iter().map(|r| (r.n, r.seed)).collect();
    cells.sort_unstable();
    assert_eq!(cells, vec![(6, 1), (6, 2), (6, 3), (8, 1), (8, 2), (8, 3)]);

    let again = run(&args);
    assert_eq!(exit_code(&again), 0);
    assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), 12);
}

#[test]
fn bench_in_csv_format_keeps_a_single_header() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("records.csv");
    let args = [
        "bench", "--n", "6", "--k", "2", "--seeds", "1-3", "--oracle", "builtin:merged-min",
        "--format", "csv", "--out", path.to_str().unwrap(),
    ];
    assert_eq!(exit_code(&run(&args)), 0);
    assert_eq!(exit_code(&run(&args)), 0);
    let body = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = body.lines().collect();
    assert_eq!(lines.len(), 7);
    assert_eq!(
        lines[0],
        "version,n,k,oracle,seed,status,edge,color,reason,oracle_queries,samples_drawn,eliminations,attempts,phase2_vertices,wall_ms"
    );
    assert!(lines[1].contains("\"3,5:4,6\""));
}

#[test]
fn bench_without_an_output_path_streams_jsonl_to_stdout() {
    let output = run(&[
        "bench", "--n", "6", "--k", "2", "--seeds", "1-4", "--oracle", "builtin:merged-min",
        "--jobs", "2",
    ]);
    assert_eq!(exit_code(&output), 0);
    let stdout = stdout_of(&output);
    let records: Vec<ResultRecord> = stdout.lines().map(parse_record).collect();
    assert_eq!(records.len(), 4);
    let mut seeds: Vec<u64> = records.iter().map(|r| r.seed).collect();
    seeds.sort_unstable();
    assert_eq!(seeds, vec![1, 2, 3, 4]);
}
