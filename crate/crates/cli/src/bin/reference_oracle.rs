//! Line-oriented coloring oracle for driving the solver over a pipe.
//!
//! The dialogue is one request per line on stdin, one reply per line on
//! stdout. `HELLO <n> <k>` fixes the instance and answers `OK`. Each
//! `COLOR <e1>,...,<ek>` (elements strictly increasing) answers the color as
//! a bare integer in `1..=n-2k+1`. `BYE` ends the session. Malformed
//! requests answer `ERR <message>` and leave the session usable.

use std::io::{self, BufRead, Write};
use std::process;
use std::time::Duration;

use clap::Parser;
use schrijver_cli::spec::{parse_elements, OracleChoice, OracleModifiers};
use schrijver_core::{ColoringOracle, GroundSet, StableSubset};

#[derive(Parser)]
#[command(
    name = "schrijver-oracle",
    version,
    about = "Serve a builtin coloring over the line protocol on stdin/stdout"
)]
struct Opts {
    /// merged-min | permuted-merged-min | hash-random
    #[arg(long, default_value = "merged-min")]
    kind: String,
    /// Seed for hash-random
    #[arg(long)]
    hash_seed: Option<u64>,
    /// Explicit permutation for permuted-merged-min, the images of 1..=n
    /// comma separated
    #[arg(long, conflicts_with = "perm_seed")]
    permutation: Option<String>,
    /// Derive the permutation for permuted-merged-min from this seed
    #[arg(long)]
    perm_seed: Option<u64>,
}

struct Session {
    oracle: ColoringOracle,
    ground: GroundSet,
}

enum Action {
    Reply(String),
    Quit,
}

fn handle(choice: &OracleChoice, session: &mut Option<Session>, line: &str) -> Action {
    let line = line.trim();
    if line == "BYE" {
        return Action::Quit;
    }
    let mut words = line.split_whitespace();
    match words.next() {
        Some("HELLO") => {
            let args: Vec<&str> = words.collect();
            let parsed = match args[..] {
                [n, k] => n.parse::<u32>().ok().zip(k.parse::<u32>().ok()),
                _ => None,
            };
            let Some((n, k)) = parsed else {
                return Action::Reply("ERR expected HELLO <n> <k>".into());
            };
            match choice.build(n, k, Duration::ZERO) {
                Ok(oracle) => {
                    *session = Some(Session { oracle, ground: GroundSet::full(n) });
                    Action::Reply("OK".into())
                }
                Err(e) => Action::Reply(format!("ERR {e}")),
            }
        }
        Some("COLOR") => {
            let Some(session) = session.as_mut() else {
                return Action::Reply("ERR handshake required before COLOR".into());
            };
            let args: Vec<&str> = words.collect();
            let [raw] = args[..] else {
                return Action::Reply("ERR expected COLOR <e1>,...,<ek>".into());
            };
            let elements = match parse_elements(raw) {
                Ok(elements) => elements,
                Err(e) => return Action::Reply(format!("ERR {e}")),
            };
            if !elements.windows(2).all(|w| w[0] < w[1]) {
                return Action::Reply("ERR elements must be strictly increasing".into());
            }
            let vertex = match StableSubset::new(elements, &session.ground) {
                Ok(vertex) => vertex,
                Err(e) => return Action::Reply(format!("ERR {e}")),
            };
            match session.oracle.color_of(&vertex) {
                Ok(color) => Action::Reply(color.value().to_string()),
                Err(e) => Action::Reply(format!("ERR {e}")),
            }
        }
        _ => Action::Reply("ERR unrecognized command".into()),
    }
}

fn main() {
    let opts = match Opts::try_parse() {
        Ok(opts) => opts,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            process::exit(code);
        }
    };
    let permutation = match opts.permutation.as_deref().map(parse_elements).transpose() {
        Ok(permutation) => permutation,
        Err(e) => {
            eprintln!("error: {e:#}");
            process::exit(1);
        }
    };
    let modifiers = OracleModifiers {
        hash_seed: opts.hash_seed,
        permutation,
        perm_seed: opts.perm_seed,
    };
    let choice = match OracleChoice::parse_builtin(&opts.kind, &modifiers) {
        Ok(choice) => choice,
        Err(e) => {
            eprintln!("error: {e:#}");
            process::exit(1);
        }
    };

    let stdin = io::stdin();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut session = None;
    for line in stdin.lock().lines() {
        let line = match line {
            Ok(line) => line,
            Err(_) => break,
        };
        match handle(&choice, &mut session, &line) {
            Action::Reply(reply) => {
                if writeln!(out, "{reply}").and_then(|()| out.flush()).is_err() {
                    break;
                }
            }
            Action::Quit => break,
        }
    }
}
