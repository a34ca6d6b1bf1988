use thiserror::Error;

use crate::decompose::Extraction;
use crate::graph::Vertex;

/// Errors raised while reading the edge-list or schedule text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { line: usize, vertex: Vertex, n: usize },
    #[error("declared {declared} edges but found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("missing header line")]
    MissingHeader,
}

/// Errors from graph and tree operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree (n={n}, m={m})")]
    NotATree { n: usize, m: usize },
    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("invalid edge {u}-{v}")]
    InvalidEdge { u: Vertex, v: Vertex },
    #[error("rooted tree has no alive vertices")]
    EmptyTree,
    #[error("invalid generator parameters: {0}")]
    BadParameters(String),
}

/// Violations of the per-iteration guarantees of the decomposition. These
/// indicate a bug in the extraction logic, never bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecomposeError {
    #[error("no radius in R={values:?} satisfies {lower} <= 2r <= {upper} (j={j}, m={m})")]
    NoAdmissibleRadius {
        values: Vec<usize>,
        j: usize,
        m: usize,
        lower: usize,
        upper: i64,
    },
    #[error("radius condition violated: measured radius {} > r*={} ({extraction})", extraction.measured_radius, extraction.r_star)]
    RadiusCondition { extraction: Box<Extraction> },
    #[error("size condition violated: |piece|={} < r*+floor(j/2)-3 ({extraction})", extraction.piece.len())]
    SizeCondition { extraction: Box<Extraction> },
    #[error("{remaining} vertices left uncovered after {k} iterations (n={n})")]
    Uncovered { n: usize, k: usize, remaining: usize },
    #[error("extraction invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors from the burning simulator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SimulateError {
    #[error("round {round}: source {vertex} is already burned")]
    SourceCollision { round: usize, vertex: Vertex },
    #[error("round {round}: source {vertex} out of range for n={n}")]
    VertexOutOfRange { round: usize, vertex: Vertex, n: usize },
}

/// Errors from the exhaustive oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("no burning schedule of length <= {max_k}")]
    Exceeded { max_k: usize },
    #[error("graph has {n} vertices; exhaustive search supports at most {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
