use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Pauli label {label:?}: unexpected character {found:?} at position {position}")]
    BadPauliChar {
        label: String,
        position: usize,
        found: char,
    },

    #[error("invalid Pauli label {label:?}: expected {expected} qubit characters, found {found}")]
    BadPauliLength {
        label: String,
        expected: usize,
        found: usize,
    },

    #[error("qubit count mismatch: {left} vs {right}")]
    QubitMismatch { left: usize, right: usize },

    #[error("{what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid incidence structure: {0}")]
    InvalidStructure(String),

    #[error("expected a report labeled {expected}, found {found}")]
    WrongLabel {
        expected: &'static str,
        found: &'static str,
    },

    #[error("not a pentad: {0}")]
    NotAPentad(String),

    #[error("basis change matrix is singular")]
    SingularMatrix,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid structure constants: {0}")]
    InvalidConstants(String),

    #[error("output format {format} is not supported for {payload}")]
    IncompatibleFormat {
        format: &'static str,
        payload: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
