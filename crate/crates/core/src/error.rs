use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge: {0}")]
    InvalidEdge(String),

    #[error("coloring contains 0 entries but the operation needs a 2-coloring")]
    TernaryNotAllowed,

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{what} too large: {size} exceeds cap {cap}")]
    TooLarge {
        what: String,
        size: String,
        cap: String,
    },

    #[error("composition {0} has no reduction")]
    NoReduction(String),

    #[error("coloring is not monotone (violating set {witness:?})")]
    NotMonotone { witness: Vec<usize> },

    #[error("crossing constraints are not realizable: {0}")]
    NotRealizable(String),

    #[error("invalid wiring diagram: {0}")]
    InvalidWiring(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn too_large(what: impl Into<String>, size: impl ToString, cap: impl ToString) -> Self {
        Error::TooLarge {
            what: what.into(),
            size: size.to_string(),
            cap: cap.to_string(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
