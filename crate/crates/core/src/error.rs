//! Error type shared by every module in the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("matrix is not symmetric within tolerance")]
    NotSymmetric,

    #[error("matrix entries must be finite")]
    NonFinite,

    #[error("matrix is singular or near-singular (condition estimate {condition:.3e})")]
    Singular { condition: f64 },

    #[error("rank-one update is degenerate (denominator {denominator:.3e})")]
    DegenerateUpdate { denominator: f64 },

    #[error("underdetermined design: {n} rows for {p} features with no ridge penalty")]
    Underdetermined { n: usize, p: usize },

    #[error("feature {index} has zero variance; cannot standardize")]
    DegenerateFeature { index: usize },

    #[error("warm-up needs at least {needed} rows, got {got}")]
    InsufficientWarmup { needed: usize, got: usize },

    #[error("stream ended early: needed {needed} points, got {got}")]
    InsufficientStream { needed: usize, got: usize },

    #[error("cannot fit a density: scores have no spread")]
    DegenerateKde,

    #[error("strategy threshold has not been initialized")]
    UninitializedThreshold,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("label oracle failed at arrival index {index}: {reason}")]
    Oracle { index: usize, reason: String },

    #[error("config error: {0}")]
    Config(String),

    #[error("missing column {name:?} in CSV input")]
    MissingColumn { name: String },

    #[error("cannot parse {value:?} as a finite number at row {row}, column {column}")]
    CsvParse {
        row: usize,
        column: String,
        value: String,
    },

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by an invalid configuration or input schema,
    /// as opposed to a failure while running. The CLI maps the former to
    /// exit code 2 and the latter to 3.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            Error::Config(_) | Error::InvalidParameter(_) | Error::MissingColumn { .. }
        )
    }
}
