use thiserror::Error;

use crate::tree::VertexId;

/// Why an edge list failed to describe a tree.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Defect {
    #[error("a tree needs at least one vertex")]
    Empty,
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    /// With exactly n-1 edges a cycle also means some vertex is unreachable.
    #[error("edge {0}-{1} closes a cycle, so the edges cannot span all vertices")]
    Cycle(VertexId, VertexId),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a tree: {0}")]
    NotATree(#[from] Defect),
    #[error("expected {expected} weights, found {found}")]
    WeightCount { expected: usize, found: usize },
    #[error("vertex {vertex} is out of range 1..={n}")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("vertices must be distinct (got {0} twice)")]
    SameVertex(VertexId),
    #[error("vertex {0} is not a live pendant vertex")]
    NotPendant(VertexId),
    #[error("vertex {0} has already been contracted")]
    NotLive(VertexId),
    #[error("{what} is capped at n = {cap}, got n = {n}")]
    TooLarge { what: &'static str, n: usize, cap: usize },
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("vertex {v} is not a neighbor of {u}")]
    NotNeighbor { u: VertexId, v: VertexId },
    #[error("the rest of the tree must keep at least two vertices")]
    BranchTooLarge,
    #[error("no pendant path from {u} ends at {end}")]
    NotPendantPath { u: VertexId, end: VertexId },
    #[error("legs must have length at least 2, got {0}")]
    LegTooShort(usize),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
