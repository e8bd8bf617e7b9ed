use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid wavelet index {0}: ordinal 1 is the scaling function, wavelets start at 2")]
    InvalidIndex(usize),

    #[error("coordinate {x} lies outside [{lo}, {hi}]")]
    Domain { x: f64, lo: f64, hi: f64 },

    #[error("integration order {0} is not supported (only 1 and 2)")]
    UnsupportedOrder(u32),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("missing required key `{0}`")]
    MissingKey(String),

    #[error("problem `{0}` has no closed-form solution")]
    NoExactSolution(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("solution diverged at step {step} (t = {t}): non-finite values")]
    Divergence { step: usize, t: f64 },

    #[error("singular linear system at t = {t} (pivot {pivot:e})")]
    Singular { t: f64, pivot: f64 },

    #[error("oracle could not certify a reference: {0}")]
    CannotCertify(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Divergence { .. } | Error::Singular { .. } | Error::CannotCertify(_) => 3,
            _ => 2,
        }
    }
}
