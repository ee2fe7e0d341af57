use thiserror::Error;

/// Errors raised by the numerical kernels and the verification pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument outside the domain: {0}")]
    Domain(String),

    #[error("pole at {0}")]
    Pole(String),

    #[error("no convergence: {0}")]
    NonConvergence(String),

    #[error("character is not primitive (conductor {conductor}, modulus {modulus})")]
    NotPrimitive { modulus: u64, conductor: u64 },

    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),

    /// Phase continuation could not resolve the contour, usually because a
    /// zero sits on or very near the boundary.
    #[error("zero on or near the contour at T = {t}: {detail}")]
    BoundaryZero { t: f64, detail: String },

    #[error("non-finite value produced by {0}")]
    NonFinite(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
