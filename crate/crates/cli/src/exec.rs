//! Adapter for coloring oracles living in another process.
//!
//! The child speaks a newline protocol over its standard streams: the solver
//! sends `HELLO <n> <k>` once and expects `OK`, each `COLOR <a1>,...,<ak>`
//! expects a palette color back, and `BYE` asks the child to exit. A reader
//! thread owns the child's standard output so every wait carries a timeout.

use std::io::{BufRead, BufReader, Write};
use std::process::{Child, ChildStdin, Command, Stdio};
use std::sync::mpsc::{channel, Receiver, RecvTimeoutError};
use std::thread;
use std::time::{Duration, Instant};

use schrijver_core::{ColorSource, ColoringOracle, OracleError};

/// Default per-reply timeout.
pub const DEFAULT_ORACLE_TIMEOUT: Duration = Duration::from_secs(10);

/// How long a child gets to exit after `BYE` before it is killed.
const SHUTDOWN_GRACE: Duration = Duration::from_millis(500);

/// One child process speaking the wire protocol; queries are serialized, so
/// parallel workers each hold their own adapter.
#[derive(Debug)]
pub struct ExecOracle {
    child: Child,
    stdin: ChildStdin,
    replies: Receiver<String>,
    timeout: Duration,
    command: String,
}

impl ExecOracle {
    /// Spawns `command` and completes the handshake.
    pub fn connect(
        command: &[String],
        n: u32,
        k: u32,
        timeout: Duration,
    ) -> Result<Self, OracleError> {
        let (program, args) = command
            .split_first()
            .ok_or_else(|| OracleError::Channel("empty oracle command".into()))?;
        let mut child = Command::new(program)
            .args(args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::inherit())
            .spawn()
            .map_err(|e| OracleError::Channel(format!("failed to spawn {program:?}: {e}")))?;
        let stdin = child.stdin.take().expect("stdin was piped");
        let stdout = child.stdout.take().expect("stdout was piped");
        let (sender, replies) = channel();
        thread::spawn(move || {
            let mut lines = BufReader::new(stdout).lines();
            while let Some(Ok(line)) = lines.next() {
                if sender.send(line).is_err() {
                    break;
                }
            }
        });
        let mut oracle = ExecOracle {
            child,
            stdin,
            replies,
            timeout,
            command: command.join(" "),
        };
        oracle.send(&format!("HELLO {n} {k}"))?;
        let greeting = oracle.recv()?;
        if greeting.trim() != "OK" {
            return Err(OracleError::Channel(format!(
                "handshake with {:?} expected OK, got {greeting:?}",
                oracle.command
            )));
        }
        Ok(oracle)
    }

    fn send(&mut self, line: &str) -> Result<(), OracleError> {
        writeln!(self.stdin, "{line}")
            .and_then(|()| self.stdin.flush())
            .map_err(|e| OracleError::Channel(format!("writing to {:?}: {e}", self.command)))
    }

    fn recv(&mut self) -> Result<String, OracleError> {
        match self.replies.recv_timeout(self.timeout) {
            Ok(line) => Ok(line),
            Err(RecvTimeoutError::Timeout) => Err(OracleError::Channel(format!(
                "{:?} sent no reply within {:?}",
                self.command, self.timeout
            ))),
            Err(RecvTimeoutError::Disconnected) => Err(OracleError::Channel(format!(
                "{:?} closed its output stream",
                self.command
            ))),
        }
    }
}

impl ColorSource for ExecOracle {
    fn color_raw(&mut self, elements: &[u32]) -> Result<u32, OracleError> {
        self.send(&format!("COLOR {}", crate::record::join_elements(elements)))?;
        let reply = self.recv()?;
        reply
            .trim()
            .parse::<u32>()
            .map_err(|_| OracleError::Channel(format!("expected a color reply, got {reply:?}")))
    }
}

impl Drop for ExecOracle {
    fn drop(&mut self) {
        let _ = writeln!(self.stdin, "BYE");
        let _ = self.stdin.flush();
        let deadline = Instant::now() + SHUTDOWN_GRACE;
        loop {
            match self.child.try_wait() {
                Ok(Some(_)) => return,
                Ok(None) if Instant::now() < deadline => thread::sleep(Duration::from_millis(10)),
                _ => break,
            }
        }
        let _ = self.child.kill();
        let _ = self.child.wait();
    }
}

/// Connects the adapter and wraps it as a counting oracle on the problem
/// palette `[1, n - 2k + 1]`.
pub fn connect_external(
    command: &[String],
    n: u32,
    k: u32,
    timeout: Duration,
) -> Result<ColoringOracle, OracleError> {
    if k < 1 || n < 2 * k {
        return Err(OracleError::InvalidInstance(format!(
            "need n >= 2k >= 2, got n = {n}, k = {k}"
        )));
    }
    let source = ExecOracle::connect(command, n, k, timeout)?;
    ColoringOracle::from_source(n, k, n - 2 * k + 1, Box::new(source))
}
