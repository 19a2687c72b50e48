use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("domain error in {func}: {reason}")]
    Domain { func: &'static str, reason: String },

    /// A quadrature or series did not reach the requested tolerance.
    #[error("{what} did not converge: error estimate {err:e} exceeds tolerance {tol:e}")]
    Convergence { what: &'static str, err: f64, tol: f64 },

    /// Invalid grid, options or command-line configuration.
    #[error("configuration error: {0}")]
    Config(String),

    /// Root bracketing failed.
    #[error("no sign change on [{lo}, {hi}]")]
    Bracket { lo: f64, hi: f64 },
}

impl Error {
    pub(crate) fn domain(func: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            func,
            reason: reason.into(),
        }
    }
}
