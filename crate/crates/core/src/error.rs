use thiserror::Error;

/// Errors produced by the numerical kernels.
///
/// `InvalidInput` marks malformed data (wrong dimensions, non-Hermitian
/// matrices, out-of-range indices); `Rejected` marks inputs that are well
/// formed but violate a documented precondition of the operation (a point in
/// the spectral gap, a grid too coarse to match branches, a ladder that does
/// not converge). The distinction maps onto the CLI exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not Hermitian: symmetry residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    NotHermitian { residual: f64, tol: f64 },

    #[error("rejected: {0}")]
    Rejected(String),

    #[error("iteration failed to converge: {context} (residual history: {history:?})")]
    NoConvergence { context: String, history: Vec<f64> },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn rejected(msg: impl Into<String>) -> Self {
        Error::Rejected(msg.into())
    }

    /// True when the error is a precondition rejection rather than malformed input.
    pub fn is_rejection(&self) -> bool {
        matches!(self, Error::Rejected(_) | Error::NoConvergence { .. })
    }
}
