use thiserror::Error;

/// Errors raised by the solvers and geometry constructors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An input lies outside the domain of the operation.
    #[error("{0}")]
    Domain(String),

    /// A sampled radius of curvature h + h'' was not positive.
    #[error("not strictly convex: radius of curvature {rho:e} at theta = {theta}")]
    NotConvex { theta: f64, rho: f64 },

    /// An iterative solver stopped without meeting its tolerance.
    #[error("solver failure: {0}")]
    Solver(String),

    /// An invariant that the mathematics guarantees was violated.
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for errors caused by the caller's input.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::NotConvex { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_positive(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("{name} must be positive and finite, got {value}")))
    }
}
