use thiserror::Error;

/// Errors raised by the algebraic constructions and the command-line driver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The Matsuo parameter collides with one of the other adjoint eigenvalues.
    #[error("degenerate spectrum: alpha = {alpha} coincides with eigenvalue 0 or 2")]
    DegenerateSpectrum { alpha: String },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    #[error("unsupported vertex operator shape: {0}")]
    UnsupportedShape(String),

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
