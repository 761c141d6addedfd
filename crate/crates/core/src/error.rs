use thiserror::Error;

/// Errors reported by every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge {edge} is a loop at vertex {vertex}")]
    LoopEdge { edge: usize, vertex: usize },
    #[error("vertex {vertex} out of range (graph has {count} vertices)")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("edge {edge} out of range (graph has {count} edges)")]
    EdgeOutOfRange { edge: usize, count: usize },
    #[error("expected {expected} values, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
    #[error("cannot concatenate: first walk ends at {end}, second starts at {start}")]
    JunctionMismatch { end: usize, start: usize },
    #[error("walk is not a closed alternating walk")]
    NotClosedAlternating,
    #[error("vector violates the balance condition at vertex {vertex}")]
    Unbalanced { vertex: usize },
    #[error("{0}")]
    Precondition(String),
    #[error("enumeration guard exceeded: {0}")]
    GuardExceeded(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
