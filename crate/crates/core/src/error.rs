use thiserror::Error;

/// Errors raised by the engine. Every constructor validates its invariants,
/// so most of these name the violated identity and where it failed.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("boundary span is not contained in the cycle span")]
    ContainmentViolation,

    #[error("map is not chain compatible: {0}")]
    NotChainCompatible(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("witness failure: {0}")]
    WitnessFailure(String),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("structure constants violate d∘d = 0 on generator {0}")]
    JacobiViolation(String),

    #[error("structure constants are not integrable: {0}")]
    NotIntegrable(String),

    #[error("form is not closed: {0}")]
    NotClosed(String),

    #[error("integral does not vanish on exact top forms: {0}")]
    IntegralNotClosed(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
