use thiserror::Error;

/// Everything that can go wrong in a query.
///
/// `Domain` and `Parse` are user errors. `NotCovered` and `Unsupported` mark
/// questions the library has no proven answer for.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("not covered: {0}")]
    NotCovered(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("coefficient mismatch: {left} vs {right}")]
    CoefficientMismatch { left: String, right: String },

    #[error("stem {stem} is outside the Serre range t < {bound} at p = {p}")]
    OutOfSerreRange { stem: u64, bound: u64, p: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn not_covered(msg: impl Into<String>) -> Self {
        Error::NotCovered(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }

    /// True for errors that mean "outside what is known" rather than "bad input".
    pub fn is_coverage_gap(&self) -> bool {
        matches!(
            self,
            Error::NotCovered(_) | Error::Unsupported(_) | Error::OutOfSerreRange { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
