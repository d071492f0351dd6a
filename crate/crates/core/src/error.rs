//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("not a symplectic matrix: {0}")]
    NotSymplectic(String),

    #[error("sign-convention violation: {0}")]
    ConventionViolation(String),

    #[error("unknown atlas `{0}`")]
    UnknownAtlas(String),

    #[error("unknown curve `{0}`")]
    UnknownCurve(String),

    #[error("constraint violation in atlas `{atlas}`: {detail}")]
    ConstraintViolation { atlas: String, detail: String },

    #[error("genus {requested} too small for atlas `{atlas}` (minimum {minimum})")]
    GenusTooSmall {
        atlas: String,
        requested: usize,
        minimum: usize,
    },

    #[error("parse error at line {line}, column {column}: expected {expected}")]
    Parse {
        line: usize,
        column: usize,
        expected: String,
    },

    #[error("unknown name `{0}` in word")]
    UnknownName(String),

    #[error("cyclic definition involving `{0}`")]
    CyclicDefinition(String),

    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("relator violation: {0}")]
    RelatorViolation(String),

    #[error("incompatible grouping: {0}")]
    IncompatibleGrouping(String),

    #[error("combinatorial mismatch: {0}")]
    CombinatorialMismatch(String),

    #[error("missing zero-square section on {0}")]
    MissingZeroSection(String),

    #[error("base genus mismatch: {0} vs {1}")]
    BaseMismatch(usize, usize),

    #[error("invalid fibration file: {0}")]
    FibrationFile(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
