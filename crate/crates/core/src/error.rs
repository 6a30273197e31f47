use thiserror::Error;

/// Errors produced by the verification toolkit.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A precondition on an input value was violated.
    #[error("domain error: {0}")]
    Domain(String),

    /// A constructed state places too much weight near the Fock cutoff.
    #[error("truncation overflow: leakage {leakage:.3e} exceeds {limit:.1e}; increase the cutoff or shrink the parameters")]
    TruncationOverflow { leakage: f64, limit: f64 },

    /// A matrix was not symmetric positive definite.
    #[error("matrix is not positive definite: eigenvalue {eigenvalue:.6e}")]
    NotPositiveDefinite { eigenvalue: f64 },

    /// Symplectic eigenvalues could not be paired.
    #[error("numerical degeneracy: {0}")]
    Degeneracy(String),

    /// The uncorrelated-state gate rejected a covariance matrix.
    #[error("correlated state: covariance entry ({row}, {col}) = {value:.3e}")]
    Correlated { row: usize, col: usize, value: f64 },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
