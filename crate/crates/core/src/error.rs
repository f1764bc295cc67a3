use thiserror::Error;

/// Errors raised by the special-function, solution and verification layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("series did not converge after {terms} terms")]
    NonConvergence { terms: usize },

    #[error("log-gamma pole at non-positive integer {0}")]
    PoleAtNonPositiveInteger(f64),

    #[error("asymptotic expansion requires |z| >= {min}, got {got}")]
    ArgumentTooSmall { min: f64, got: f64 },

    #[error("|z| = {got} exceeds the series range {max}; propagate with the ODE oracle instead")]
    SeriesRangeExceeded { max: f64, got: f64 },

    #[error("step size underflow at x = {x}")]
    StepSizeUnderflow { x: f64 },

    #[error("maximum number of steps ({0}) exceeded")]
    MaxStepsExceeded(usize),

    #[error("grid too coarse: {0}")]
    GridTooCoarse(String),

    #[error("omega*x = {0} is below the asymptotic threshold 20")]
    TooCloseToTurningRegion(f64),

    #[error("degenerate sample at x = {0}: u and u' both vanish")]
    DegenerateSample(f64),

    #[error("phase difference not converged: {0}")]
    NotConverged(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code: 2 for bad input or configuration, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidParams(_) | Error::Domain(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
