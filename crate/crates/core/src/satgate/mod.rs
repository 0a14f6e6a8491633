//! Exact co-ex(n, F) via SAT.
//!
//! The decision "is there an n-vertex F-free k-graph with δ_{k−1} ≥ t" is
//! encoded as CNF (one variable per potential edge, a sequential counter per
//! (k−1)-set, one blocking clause per forbidden edge-set image) and handed
//! to either the internal CDCL solver or an external DIMACS solver.
//! [`brute_force_coex`] is an independent oracle for small n.

mod backend;
mod brute;
pub mod cdcl;
mod cnf;
mod coex;

pub use backend::{
    parse_solver_output, run_backend, Backend, SatStatus, SolverVerdict, SAT_CMD_ENV,
};
pub use brute::{brute_force_coex, BRUTE_EDGE_LIMIT};
pub use cnf::CnfInstance;
pub use coex::{
    coex_decision, coex_exact, encode_coex_cnf, verify_witness, CoexEncoding, CoexResult,
    CoexVerdict, EMBEDDING_LIMIT,
};
