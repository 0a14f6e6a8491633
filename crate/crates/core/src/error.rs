use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("uniformity must be at least 2, got {0}")]
    Uniformity(usize),
    #[error("edge {edge:?} has {found} vertices, expected {expected}")]
    EdgeArity {
        edge: Vec<usize>,
        expected: usize,
        found: usize,
    },
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex {vertex} repeated within edge {edge:?}")]
    RepeatedVertex { vertex: usize, edge: Vec<usize> },
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),
    #[error("need at least {needed} vertices, have {n}")]
    TooFewVertices { n: usize, needed: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{what} has size {size}, above the configured limit {limit}")]
    SizeGuard {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    #[error("search budget exhausted")]
    Budget,
    #[error("SAT backend failure: {0}")]
    Backend(String),
    #[error("solver returned UNKNOWN at t = {t}")]
    Unknown { t: usize },
    #[error("certificate rejected: {0}")]
    Certificate(String),
    #[error("every {n}-vertex k-graph contains a forbidden member")]
    NoFreeHypergraph { n: usize },
}
