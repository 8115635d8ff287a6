use thiserror::Error;

use crate::graph::{Edge, Vertex};

/// Errors produced by graph construction, surgery and search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a graph needs at least one vertex")]
    ZeroVertices,

    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("edge endpoints must differ (got {0} twice)")]
    Loop(Vertex),

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("edge {0} is not on any path of the decomposition")]
    EdgeNotCovered(Edge),

    #[error("vertex {vertex} already lies on path {path}")]
    VertexAlreadyOnPath { vertex: Vertex, path: usize },

    #[error("edge {0} is already covered by the decomposition")]
    EdgeAlreadyCovered(Edge),

    #[error("removal #{index}: edge {edge} is not an end edge of its path")]
    NotAnEndEdge { index: usize, edge: Edge },

    #[error("removal #{index}: edge {edge} is not in the decomposition")]
    RemovalNotCovered { index: usize, edge: Edge },

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("host graph on {0} vertices is not complete")]
    NotComplete(usize),

    #[error("decomposition does not verify: {0}")]
    InvalidDecomposition(String),

    #[error("n = {n} exceeds the search cap {cap}")]
    AboveSearchCap { n: usize, cap: usize },

    #[error("search exceeded its time budget")]
    BudgetExceeded,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
