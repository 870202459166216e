//! Error type shared by all solver modules.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Input data fails a structural precondition (grid mismatch, bad norm, ...).
    #[error("validation error: {0}")]
    Validation(String),

    /// Field samples are not finite or otherwise unusable.
    #[error("data error: {0}")]
    Data(String),

    /// An iterative or truncated numerical procedure did not converge.
    #[error("convergence error: {0}")]
    Convergence(String),

    /// Two independent computation routes disagree; the result cannot be trusted.
    #[error("oracle disagreement: {0}")]
    OracleDisagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
