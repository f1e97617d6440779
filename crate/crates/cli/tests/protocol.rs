//! Wire-protocol tests driving the reference oracle binary over real pipes.

use std::io::{BufRead, BufReader, Write};
use std::process::{Child, ChildStdin, ChildStdout, Command, Stdio};
use std::time::Duration;

use schrijver_cli::exec::connect_external;
use schrijver_cli::spec::permutation_from_seed;
use schrijver_core::{enumerate_stable, ColoringOracle, GroundSet};

const ORACLE_BIN: &str = env!("CARGO_BIN_EXE_schrijver-oracle");

struct OracleProc {
    child: Child,
    stdin: Option<ChildStdin>,
    replies: BufReader<ChildStdout>,
}

impl OracleProc {
    fn spawn(args: &[&str]) -> Self {
        let mut child = Command::new(ORACLE_BIN)
            .args(args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .spawn()
            .expect("reference oracle should spawn");
        let stdin = child.stdin.take();
        let replies = BufReader::new(child.stdout.take().unwrap());
        OracleProc { child, stdin, replies }
    }

    fn send(&mut self, line: &str) {
        let stdin = self.stdin.as_mut().expect("stdin already closed");
        writeln!(stdin, "{line}").unwrap();
        stdin.flush().unwrap();
    }

    fn recv(&mut self) -> String {
        let mut line = String::new();
        let read = self.replies.read_line(&mut line).unwrap();
        assert!(read > 0, "oracle closed its output early");
        line.trim_end().to_string()
    }

    fn ask(&mut self, line: &str) -> String {
        self.send(line);
        self.recv()
    }

    fn close_stdin(&mut self) {
        self.stdin.take();
    }

    fn wait(mut self) -> i32 {
        self.stdin.take();
        self.child.wait().unwrap().code().expect("oracle killed by signal")
    }
}

#[test]
fn merged_min_session_round_trips() {
    let mut oracle = OracleProc::spawn(&[]);
    assert_eq!(oracle.ask("HELLO 6 2"), "OK");
    assert_eq!(oracle.ask("COLOR 3,5"), "3");
    assert_eq!(oracle.ask("COLOR 4,6"), "3");
    assert_eq!(oracle.ask("COLOR 1,5"), "1");
    oracle.send("BYE");
    assert_eq!(oracle.wait(), 0);
}

#[test]
fn malformed_requests_get_err_replies_and_the_session_survives() {
    let mut oracle = OracleProc::spawn(&[]);
    assert_eq!(oracle.ask("COLOR 1,3"), "ERR handshake required before COLOR");
    assert_eq!(oracle.ask("HELLO 6"), "ERR expected HELLO <n> <k>");
    assert!(oracle.ask("HELLO 3 9").starts_with("ERR "));
    assert_eq!(oracle.ask("HELLO 6 2"), "OK");
    assert!(oracle.ask("COLOR 1,6").starts_with("ERR "));
    assert!(oracle.ask("COLOR 3").starts_with("ERR "));
    assert_eq!(oracle.ask("COLOR 5,3"), "ERR elements must be strictly increasing");
    assert_eq!(oracle.ask("PING"), "ERR unrecognized command");
    assert_eq!(oracle.ask("COLOR 2,4"), "2");
    oracle.send("BYE");
    assert_eq!(oracle.wait(), 0);
}

#[test]
fn closing_stdin_ends_the_process_cleanly() {
    let mut oracle = OracleProc::spawn(&[]);
    assert_eq!(oracle.ask("HELLO 8 2"), "OK");
    oracle.close_stdin();
    assert_eq!(oracle.wait(), 0);
}

#[test]
fn hash_random_kind_matches_the_builtin_generator() {
    let mut proc = OracleProc::spawn(&["--kind", "hash-random", "--hash-seed", "9"]);
    assert_eq!(proc.ask("HELLO 9 2"), "OK");
    let mut builtin = ColoringOracle::hash_random(9, 2, 9).unwrap();
    let ground = GroundSet::full(9);
    for vertex in enumerate_stable(&ground, 2) {
        let elements: Vec<String> = vertex.elements().iter().map(u32::to_string).collect();
        let reply = proc.ask(&format!("COLOR {}", elements.join(",")));
        let expected = builtin.color_of(&vertex).unwrap().value();
        assert_eq!(reply, expected.to_string(), "disagreement on {vertex}");
    }
    proc.send("BYE");
    assert_eq!(proc.wait(), 0);
}

#[test]
fn explicit_permutation_kind_relabels_the_coloring() {
    let mut proc = OracleProc::spawn(&[
        "--kind",
        "permuted-merged-min",
        "--permutation",
        "6,5,4,3,2,1",
    ]);
    assert_eq!(proc.ask("HELLO 6 2"), "OK");
    assert_eq!(proc.ask("COLOR 1,3"), "3");
    proc.send("BYE");
    assert_eq!(proc.wait(), 0);
}

#[test]
fn seeded_permutation_matches_the_library_rule() {
    let command = vec![
        ORACLE_BIN.to_string(),
        "--kind".into(),
        "permuted-merged-min".into(),
        "--perm-seed".into(),
        "5".into(),
    ];
    let mut external = connect_external(&command, 8, 2, Duration::from_secs(10)).unwrap();
    let mut builtin =
        ColoringOracle::permuted_merged_min(8, 2, permutation_from_seed(8, 5)).unwrap();
    let ground = GroundSet::full(8);
    for vertex in enumerate_stable(&ground, 2) {
        assert_eq!(
            external.color_of(&vertex).unwrap(),
            builtin.color_of(&vertex).unwrap(),
            "disagreement on {vertex}"
        );
    }
}

#[test]
fn external_adapter_agrees_with_the_builtin_on_every_vertex() {
    let command = vec![ORACLE_BIN.to_string(), "--kind".into(), "merged-min".into()];
    let mut external = connect_external(&command, 8, 2, Duration::from_secs(10)).unwrap();
    let mut builtin = ColoringOracle::merged_min(8, 2).unwrap();
    let ground = GroundSet::full(8);
    let mut vertices = 0u64;
    for vertex in enumerate_stable(&ground, 2) {
        assert_eq!(
            external.color_of(&vertex).unwrap(),
            builtin.color_of(&vertex).unwrap(),
            "disagreement on {vertex}"
        );
        vertices += 1;
    }
    assert_eq!(vertices, 20);
    assert_eq!(external.query_count(), 20);
    assert_eq!(builtin.query_count(), 20);
}
