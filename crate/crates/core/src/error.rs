use thiserror::Error;

use crate::poly::{DivisionError, ParseError};

/// Errors raised by graph construction, the determinant pipeline and the
/// enumeration oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside an operation's domain (too-small cycle, no nodes,
    /// wrong orientation, malformed graph).
    #[error("{0}")]
    Domain(String),
    #[error("index ({row}, {col}) out of range for a {size}x{size} matrix")]
    Index { row: usize, col: usize, size: usize },
    #[error("graph has {edges} edges, over the enumeration cap of {cap}")]
    CapExceeded { edges: usize, cap: usize },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Division(#[from] DivisionError),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
