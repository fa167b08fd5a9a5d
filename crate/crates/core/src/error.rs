use std::path::PathBuf;

use thiserror::Error;

use crate::corpus::Graph6Error;

/// Errors raised by graph construction, the exact solvers and the bound checkers.
///
/// Precondition failures of the theorem checkers are ordinary variants here, so a
/// caller (the sweep harness, the CLI) can report them as "not applicable".
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex set contains indices outside 0..{n}")]
    InvalidVertexSet { n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("adjacency is not symmetric between {0} and {1}")]
    Asymmetric(usize, usize),

    #[error("operation requires at least one vertex")]
    EmptyGraph,

    #[error("graph has {n} vertices; the limit here is {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("k must be at least 1, got {0}")]
    InvalidK(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("complement is disconnected")]
    ComplementDisconnected,

    #[error("graph contains a triangle")]
    HasTriangle,

    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),

    #[error("max{{diam(G), diam(complement)}} = {0} < 3")]
    DiameterTooSmall(usize),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("construction verification failed: {0}")]
    Verification(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error(transparent)]
    Graph6(#[from] Graph6Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}: {source}")]
    CorpusLine {
        path: PathBuf,
        line: usize,
        #[source]
        source: Graph6Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
