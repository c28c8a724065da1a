use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("incompatible shape: {0}")]
    IncompatibleShape(String),

    #[error("invalid tensor: {0}")]
    InvalidTensor(String),

    #[error("axis {axis} out of range for order-{order} tensor")]
    AxisOutOfRange { axis: usize, order: usize },

    #[error("invalid axis pair ({j}, {k}): {reason}")]
    InvalidPair { j: usize, k: usize, reason: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("gradient vanished; the block cannot be updated")]
    DegenerateGradient,

    #[error("tensor is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("grid would need {evaluations} evaluations, cap is {cap}")]
    GridTooLarge { evaluations: u128, cap: u128 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Whether the error reports a violated mathematical hypothesis rather
    /// than malformed input.
    pub fn is_hypothesis(&self) -> bool {
        matches!(self, Error::HypothesisViolation(_) | Error::NotSymmetric(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
