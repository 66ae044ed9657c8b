//! Error type shared across the library.

use thiserror::Error;

/// Library-wide error enum.
#[derive(Debug, Error)]
pub enum Error {
    /// A vector or matrix dimension does not match the expected one.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A constructor or operation received an out-of-range parameter.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A step size or mode is outside the range certified by the
    /// convergence theory for the requested method.
    #[error("uncertified configuration: {0}")]
    Uncertified(String),

    /// The linear system inside a resolvent evaluation is singular.
    #[error("singular linear system while evaluating a resolvent")]
    SingularResolvent,

    /// The damped inner iteration for a resolvent hit its iteration cap.
    #[error("resolvent inner iteration exceeded {0} iterations")]
    ResolventIterationCap(usize),

    /// The divergence guard fired: the residual grew past 1e6 times its
    /// initial value.
    #[error("iteration diverged: residual {residual:.6e} exceeds 1e6 x initial residual {initial:.6e}")]
    Diverged { residual: f64, initial: f64 },

    /// An operation that needs a Jacobian was called on an operator
    /// without one.
    #[error("operator provides no jacobian")]
    MissingJacobian,

    /// A custom activation has no rule for the prox of the alpha-scaled
    /// generator.
    #[error("custom activation lacks an alpha-scaling rule for its prox")]
    MissingProxScaling,

    /// An equilibrium or zero-finding run failed to converge.
    #[error("failed to converge within {0} iterations")]
    NotConverged(usize),

    /// File system failure while reading or writing.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// Malformed numeric or key=value content in an input file.
    #[error("parse error in {path} (line {line}): {msg}")]
    Parse {
        path: String,
        line: usize,
        msg: String,
    },
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn dim(expected: usize, got: usize) -> Self {
        Error::DimensionMismatch { expected, got }
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
