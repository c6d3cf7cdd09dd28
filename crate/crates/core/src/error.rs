//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A configuration value violates its invariants.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// An input slice or table violates a precondition.
    #[error("invalid input: {0}")]
    Invalid(String),

    /// A scaling or fit is degenerate (zero variance, empty stratum, ...).
    #[error("degenerate input: {0}")]
    Degenerate(String),

    /// A numerical routine failed (indefinite matrix, non-convergence, ...).
    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Score resampling needs at least two PSUs per stratum.
    #[error("stratum {0} has a single PSU; cannot subsample for the score covariance")]
    SinglePsuStratum(String),

    /// A CSV input is missing a required column.
    #[error("missing required column: {0}")]
    MissingColumn(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
