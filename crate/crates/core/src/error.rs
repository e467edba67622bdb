use std::fmt;

use crate::fan::{Edge, PivotMove};

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("fan graph needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),

    #[error("{0} is not an edge of F_{1}")]
    EdgeNotInGraph(EdgeText, usize),

    #[error("move {0}: edge {1} is not in the tree")]
    RemovedEdgeAbsent(PivotMove, Edge),

    #[error("move {0}: edge {1} is already in the tree")]
    AddedEdgePresent(PivotMove, Edge),

    #[error("move {0}: removed and added endpoints coincide")]
    DegenerateMove(PivotMove),

    #[error("malformed edge token {0:?}")]
    MalformedToken(String),

    #[error("vertex label {label} out of range 2..={n}")]
    LabelOutOfRange { label: String, n: usize },

    #[error("duplicate edge {0}")]
    DuplicateEdge(Edge),

    #[error("edge set is not a spanning tree of F_{0}")]
    NotATree(usize),

    #[error("bit string has length {found}, expected {expected}")]
    WrongLength { expected: usize, found: usize },

    #[error("bit string has {found} set bits, expected {expected}")]
    WrongPopcount { expected: usize, found: usize },

    #[error("invalid character {0:?} in bit string")]
    InvalidBit(char),

    #[error("tree is on F_{found} but F_{expected} was expected")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("rank out of range 1..{max}")]
    RankOutOfRange { max: String },

    #[error("{what} requires n >= {min}, got {n}")]
    NTooSmall { what: &'static str, min: usize, n: usize },

    #[error("invalid frame: {0}")]
    InvalidFrame(String),

    #[error("n = {n} exceeds the oracle cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

/// An edge rendered for error messages; the endpoints may not form an edge of the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeText(pub String);

impl fmt::Display for EdgeText {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
