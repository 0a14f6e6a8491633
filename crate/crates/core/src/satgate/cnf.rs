use std::fmt::Write as _;

use crate::{Error, Result};

/// A CNF formula over variables `1..=num_vars`; literals are signed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CnfInstance {
    pub num_vars: usize,
    pub clauses: Vec<Vec<i32>>,
}

impl CnfInstance {
    pub fn new(num_vars: usize) -> Self {
        CnfInstance {
            num_vars,
            clauses: Vec::new(),
        }
    }

    pub fn fresh(&mut self) -> i32 {
        self.num_vars += 1;
        self.num_vars as i32
    }

    pub fn add(&mut self, clause: Vec<i32>) {
        debug_assert!(clause
            .iter()
            .all(|&l| l != 0 && l.unsigned_abs() as usize <= self.num_vars));
        self.clauses.push(clause);
    }

    /// Whether `model` (indexed by variable, slot 0 unused) satisfies every clause.
    pub fn satisfied_by(&self, model: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&l| {
                let v = l.unsigned_abs() as usize;
                v < model.len() && model[v] == (l > 0)
            })
        })
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                let _ = write!(out, "{l} ");
            }
            out.push_str("0\n");
        }
        out
    }

    pub fn parse_dimacs(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            let bad = |msg: &str| Error::Parse {
                line: i + 1,
                msg: msg.to_string(),
            };
            if let Some(rest) = line.strip_prefix('p') {
                let f: Vec<&str> = rest.split_whitespace().collect();
                if header.is_some() || f.len() != 3 || f[0] != "cnf" {
                    return Err(bad("bad header"));
                }
                let v = f[1].parse().map_err(|_| bad("bad variable count"))?;
                let c = f[2].parse().map_err(|_| bad("bad clause count"))?;
                header = Some((v, c));
                continue;
            }
            let Some((nv, _)) = header else {
                return Err(bad("clause before header"));
            };
            for tok in line.split_whitespace() {
                let l: i32 = tok.parse().map_err(|_| bad("bad literal"))?;
                if l == 0 {
                    clauses.push(std::mem::take(&mut current));
                } else if l.unsigned_abs() as usize > nv {
                    return Err(bad("literal out of range"));
                } else {
                    current.push(l);
                }
            }
        }
        let Some((num_vars, nc)) = header else {
            return Err(Error::Parse {
                line: 0,
                msg: "missing header".into(),
            });
        };
        if !current.is_empty() {
            clauses.push(current);
        }
        if clauses.len() != nc {
            return Err(Error::Parse {
                line: 0,
                msg: format!("header says {nc} clauses, found {}", clauses.len()),
            });
        }
        Ok(CnfInstance { num_vars, clauses })
    }
}
