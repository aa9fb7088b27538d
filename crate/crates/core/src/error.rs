use thiserror::Error;

/// Errors raised by the library's fallible operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid edge: {0}")]
    InvalidEdge(String),
    #[error("invalid vertex {vertex} for K_{n}")]
    InvalidVertex { vertex: usize, n: usize },
    #[error("invalid pattern: {0}")]
    InvalidPattern(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid construction: {0}")]
    InvalidConstruction(String),
    #[error("no known construction for {pattern} on K_{n}")]
    NotConstructible { pattern: String, n: usize },
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
