use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge ({u}, {v}, {sign})")]
    DuplicateEdge { u: usize, v: usize, sign: char },
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error("size guard exceeded: {what} = {value} > {limit}")]
    SizeGuard {
        what: &'static str,
        value: u128,
        limit: u128,
    },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("coloring is not total: expected {expected} entries, got {got}")]
    PartialColoring { expected: usize, got: usize },
}
