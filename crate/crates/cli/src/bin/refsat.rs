//! Minimal DIMACS front end over the `splr` solver, speaking the usual
//! competition output format. Used as the default external backend when no
//! other solver is configured.

use std::process::ExitCode;

use khg_core::satgate::CnfInstance;
use splr::{Certificate, SolverError};

fn main() -> ExitCode {
    let Some(path) = std::env::args().nth(1) else {
        eprintln!("usage: khg-refsat <file.cnf>");
        return ExitCode::from(2);
    };
    let cnf = match std::fs::read_to_string(&path)
        .map_err(|e| e.to_string())
        .and_then(|t| CnfInstance::parse_dimacs(&t).map_err(|e| e.to_string()))
    {
        Ok(c) => c,
        Err(e) => {
            eprintln!("khg-refsat: {path}: {e}");
            return ExitCode::from(2);
        }
    };
    let verdict = if cnf.clauses.iter().any(Vec::is_empty) {
        Ok(Certificate::UNSAT)
    } else if cnf.clauses.is_empty() {
        Ok(Certificate::SAT(Vec::new()))
    } else {
        Certificate::try_from(cnf.clauses.clone())
    };
    match verdict {
        Ok(Certificate::SAT(model)) => {
            println!("s SATISFIABLE");
            let lits: Vec<String> = model.iter().map(i32::to_string).collect();
            println!("v {} 0", lits.join(" "));
            ExitCode::from(10)
        }
        Ok(Certificate::UNSAT)
        | Err(SolverError::EmptyClause)
        | Err(SolverError::Inconsistent)
        | Err(SolverError::RootLevelConflict(_)) => {
            println!("s UNSATISFIABLE");
            ExitCode::from(20)
        }
        Err(e) => {
            println!("s UNKNOWN");
            eprintln!("khg-refsat: {e}");
            ExitCode::SUCCESS
        }
    }
}
