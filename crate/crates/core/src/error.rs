use thiserror::Error;

/// Errors produced by tree construction, invariant computation and parsing.
#[derive(Debug, Error)]
pub enum Error {
    #[error("a tree on {n} vertices needs {expected} edges, got {got}")]
    EdgeCount {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("vertex {v} out of range for n = {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("not a tree: {unreached} vertices unreachable from vertex 0, so the edge set contains a cycle")]
    NotConnected { unreached: usize },
    #[error("multiplicative Zagreb indices are defined only for n >= 2")]
    SingleVertexIndex,
    #[error("domination radius k must be at least 1")]
    InvalidK,
    #[error("dominating set must be nonempty")]
    EmptyDominatingSet,
    #[error("vertex {0} is not a member of the given set")]
    NotInSet(usize),
    #[error("n = {n} exceeds cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("invalid family parameters: {0}")]
    FamilyParams(String),
    #[error("degree ratio g(x) requires x >= 2, got {0}")]
    RatioDomain(u64),
    #[error("edge ({u}, {v}) is not a non-pendant edge of the tree")]
    NotNonPendantEdge { u: usize, v: usize },
    #[error("vertex {0} has no pendant neighbor to move")]
    NoPendantNeighbor(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unknown claim id: {0}")]
    UnknownClaim(String),
}

pub type Result<T> = std::result::Result<T, Error>;
