//! Error type shared by all modules.

/// Errors reported by the spectral-statistics pipeline.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("degenerate fit: {0}")]
    DegenerateFit(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("numeric failure: {0}")]
    NumericFailure(String),
    #[error("not available: {0}")]
    NotAvailable(String),
    #[error("calibration failure: {0}")]
    CalibrationFailure(String),
    #[error("extrapolation refused: {0}")]
    ExtrapolationRefused(String),
    #[error("undefined correlation: {0}")]
    UndefinedCorrelation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
