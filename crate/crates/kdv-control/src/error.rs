use thiserror::Error;

/// Errors produced by the numerical operators and solvers.
#[derive(Error, Debug)]
pub enum KdvError {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("numerical consistency check failed: {0}")]
    NumericalConsistency(String),
    #[error("solver configuration error: {0}")]
    Config(String),
    #[error("time step {step} failed: {reason}")]
    StepFailure { step: usize, reason: String },
    #[error("iteration did not converge: {0}")]
    NonConvergence(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, KdvError>;
