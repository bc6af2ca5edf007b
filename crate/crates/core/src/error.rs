use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("index out of range: ({i}, {j}, {k}) in an algebra of dimension {dim}")]
    IndexOutOfRange {
        i: usize,
        j: usize,
        k: usize,
        dim: usize,
    },

    #[error("duplicate structure constant for ({i}, {j}, {k})")]
    DuplicateEntry { i: usize, j: usize, k: usize },

    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k})")]
    JacobiViolation { i: usize, j: usize, k: usize },

    #[error("subspace is not an ideal")]
    NotAnIdeal,

    #[error("algebra {0:?} is not nilpotent")]
    NotNilpotent(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A cross-check between two independent computations disagreed.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for failures of a mathematical cross-check, as opposed to bad input.
    pub fn is_inconsistency(&self) -> bool {
        matches!(self, Error::Inconsistency(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
