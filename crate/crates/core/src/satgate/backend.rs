use std::fmt;
use std::io::{Read, Write};
use std::process::{Command, Stdio};
use std::thread;
use std::time::{Duration, Instant};

use super::cdcl::{solve, SolveResult};
use super::cnf::CnfInstance;
use crate::{Error, Result};

/// Environment variable holding the default external solver command.
pub const SAT_CMD_ENV: &str = "KHG_SAT_CMD";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SatStatus {
    Sat,
    Unsat,
    Unknown,
}

impl fmt::Display for SatStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SatStatus::Sat => "SAT",
            SatStatus::Unsat => "UNSAT",
            SatStatus::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Backend {
    Internal {
        conflict_budget: Option<u64>,
    },
    /// `command` is run with the CNF file path appended as last argument.
    External {
        command: Vec<String>,
        timeout: Option<Duration>,
    },
}

impl Default for Backend {
    fn default() -> Self {
        Backend::Internal {
            conflict_budget: None,
        }
    }
}

impl Backend {
    pub fn internal() -> Self {
        Self::default()
    }

    /// External backend from a whitespace-separated command line.
    pub fn external(command: &str) -> Result<Self> {
        let command: Vec<String> = command.split_whitespace().map(str::to_string).collect();
        if command.is_empty() {
            return Err(Error::Backend("empty solver command".into()));
        }
        Ok(Backend::External {
            command,
            timeout: None,
        })
    }

    /// External backend from `KHG_SAT_CMD`, if set and non-empty.
    pub fn from_env() -> Option<Self> {
        std::env::var(SAT_CMD_ENV)
            .ok()
            .and_then(|c| Self::external(&c).ok())
    }

    pub fn with_timeout(self, timeout: Duration) -> Self {
        match self {
            Backend::External { command, .. } => Backend::External {
                command,
                timeout: Some(timeout),
            },
            other => other,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Backend::Internal { .. } => "internal".into(),
            Backend::External { command, .. } => format!("external:{}", command.join(" ")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverVerdict {
    pub status: SatStatus,
    /// Checked against every clause; indexed by variable, slot 0 unused.
    pub model: Option<Vec<bool>>,
    pub backend: String,
    pub wall: Duration,
}

/// Runs `cnf` on `backend`. Any SAT model is checked against every clause
/// before it is returned.
pub fn run_backend(cnf: &CnfInstance, backend: &Backend) -> Result<SolverVerdict> {
    let start = Instant::now();
    let (status, model) = match backend {
        Backend::Internal { conflict_budget } => match solve(cnf, *conflict_budget) {
            SolveResult::Sat(m) => (SatStatus::Sat, Some(m)),
            SolveResult::Unsat => (SatStatus::Unsat, None),
            SolveResult::Unknown => (SatStatus::Unknown, None),
        },
        Backend::External { command, timeout } => run_external(cnf, command, *timeout)?,
    };
    if let Some(m) = &model {
        if !cnf.satisfied_by(m) {
            return Err(Error::Backend(format!(
                "{}: model violates the instance",
                backend.name()
            )));
        }
    }
    Ok(SolverVerdict {
        status,
        model,
        backend: backend.name(),
        wall: start.elapsed(),
    })
}

fn run_external(
    cnf: &CnfInstance,
    command: &[String],
    timeout: Option<Duration>,
) -> Result<(SatStatus, Option<Vec<bool>>)> {
    let io = |e: std::io::Error| Error::Backend(e.to_string());
    let mut file = tempfile::Builder::new()
        .prefix("khg-")
        .suffix(".cnf")
        .tempfile()
        .map_err(io)?;
    file.write_all(cnf.to_dimacs().as_bytes()).map_err(io)?;
    file.flush().map_err(io)?;
    let mut child = Command::new(&command[0])
        .args(&command[1..])
        .arg(file.path())
        .stdin(Stdio::null())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .map_err(|e| Error::Backend(format!("cannot run {}: {e}", command[0])))?;
    let mut stdout = child.stdout.take().expect("piped stdout");
    let reader = thread::spawn(move || {
        let mut s = String::new();
        stdout.read_to_string(&mut s).map(|_| s)
    });
    let start = Instant::now();
    let status = loop {
        if let Some(st) = child.try_wait().map_err(io)? {
            break Some(st);
        }
        if timeout.is_some_and(|t| start.elapsed() >= t) {
            let _ = child.kill();
            let _ = child.wait();
            break None;
        }
        thread::sleep(Duration::from_millis(2));
    };
    let output = reader
        .join()
        .map_err(|_| Error::Backend("output reader panicked".into()))?
        .map_err(io)?;
    let Some(exit) = status else {
        return Ok((SatStatus::Unknown, None));
    };
    match parse_solver_output(&output, cnf.num_vars)? {
        Some(v) => Ok(v),
        None => Err(Error::Backend(format!("no verdict from solver ({exit})"))),
    }
}

/// Parses competition-format output. `Ok(None)` means no `s` line.
pub fn parse_solver_output(
    text: &str,
    num_vars: usize,
) -> Result<Option<(SatStatus, Option<Vec<bool>>)>> {
    let mut status = None;
    let mut model = vec![false; num_vars + 1];
    for line in text.lines() {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix("s ") {
            status = Some(match rest.trim() {
                "SATISFIABLE" => SatStatus::Sat,
                "UNSATISFIABLE" => SatStatus::Unsat,
                "UNKNOWN" | "INDETERMINATE" => SatStatus::Unknown,
                other => return Err(Error::Backend(format!("unexpected status line: {other}"))),
            });
        } else if let Some(rest) = line.strip_prefix('v') {
            for tok in rest.split_whitespace() {
                let l: i64 = tok
                    .parse()
                    .map_err(|_| Error::Backend(format!("bad model literal: {tok}")))?;
                let v = l.unsigned_abs() as usize;
                if v > num_vars {
                    return Err(Error::Backend(format!("model literal out of range: {l}")));
                }
                if v != 0 {
                    model[v] = l > 0;
                }
            }
        }
    }
    Ok(status.map(|s| {
        let m = (s == SatStatus::Sat).then_some(model);
        (s, m)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn internal_verdicts() {
        let sat = CnfInstance {
            num_vars: 1,
            clauses: vec![vec![1]],
        };
        let v = run_backend(&sat, &Backend::internal()).unwrap();
        assert_eq!(v.status, SatStatus::Sat);
        assert_eq!(v.model, Some(vec![false, true]));
        let unsat = CnfInstance {
            num_vars: 1,
            clauses: vec![vec![1], vec![-1]],
        };
        assert_eq!(
            run_backend(&unsat, &Backend::internal()).unwrap().status,
            SatStatus::Unsat
        );
    }

    #[test]
    fn parses_output() {
        let out = "c hello\ns SATISFIABLE\nv 1 -2\nv 3 0\n";
        let (s, m) = parse_solver_output(out, 3).unwrap().unwrap();
        assert_eq!(s, SatStatus::Sat);
        assert_eq!(m, Some(vec![false, true, false, true]));
        let (s, m) = parse_solver_output("s UNSATISFIABLE\n", 3)
            .unwrap()
            .unwrap();
        assert_eq!((s, m), (SatStatus::Unsat, None));
        assert_eq!(parse_solver_output("garbage\n", 3).unwrap(), None);
        assert!(parse_solver_output("s MAYBE\n", 3).is_err());
        assert!(parse_solver_output("s SATISFIABLE\nv 9 0\n", 3).is_err());
    }

    #[cfg(unix)]
    #[test]
    fn external_failures() {
        let cnf = CnfInstance {
            num_vars: 1,
            clauses: vec![vec![1]],
        };
        assert!(run_backend(&cnf, &Backend::external("/nonexistent/solver").unwrap()).is_err());
        assert!(run_backend(&cnf, &Backend::external("true").unwrap()).is_err());
        let dir = tempfile::tempdir().unwrap();
        let script = dir.path().join("slow.sh");
        std::fs::write(&script, "#!/bin/sh\nexec sleep 5\n").unwrap();
        let slow = Backend::external(&format!("sh {}", script.display()))
            .unwrap()
            .with_timeout(Duration::from_millis(50));
        let v = run_backend(&cnf, &slow).unwrap();
        assert_eq!(v.status, SatStatus::Unknown);
        assert!(Backend::external("  ").is_err());
    }
}
