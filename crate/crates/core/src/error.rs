use thiserror::Error;

use crate::graph::VertexId;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {0} out of range (graph has {1} vertices)")]
    VertexOutOfRange(VertexId, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("common_neighbors requires two distinct vertices, got {0} twice")]
    IdenticalVertices(VertexId),
    #[error("cycle length {0} not supported (expected 3, 4 or 6)")]
    UnsupportedCycleLength(usize),
    #[error("unknown named graph {0:?}")]
    UnknownGraphName(String),
    #[error("infeasible degree sequence: n={n}, d={d}")]
    InfeasibleDegree { n: usize, d: usize },
    #[error("{0} is not prime (projective plane order must be a prime <= 13)")]
    NotPrime(usize),
    #[error("generation gave up after {0} restarts")]
    GenerationFailed(usize),
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
    #[error("color {0} outside palette 1..={1}")]
    ColorOutOfRange(usize, usize),
    #[error("vertex {0} is unassigned but the operation needs it colored")]
    UnassignedVertex(VertexId),
    #[error("color {0} is in the palette but unused; compact the palette first")]
    UnusedColor(usize),
    #[error("coloring is not proper: {0} monochromatic edge(s)")]
    ImproperColoring(usize),
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph too large for brute force: n={0}, limit {1}")]
    TooLargeForBruteForce(usize, usize),
    #[error("cannot color neighborhood of vertex {active}: {reason}")]
    InfeasibleFrame { active: VertexId, reason: String },
    #[error("no {0}-bad edge between F and K")]
    NoBadEdge(usize),
    #[error("{path}:{line}: {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
