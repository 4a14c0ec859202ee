use thiserror::Error;

/// Everything that can go wrong while building polynomials, rules or zeros.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {field} {message} (got {value})")]
    InvalidParam {
        field: &'static str,
        message: &'static str,
        value: f64,
    },

    #[error("x = {x} lies outside [{lo}, {hi}]")]
    OutOfDomain { x: f64, lo: f64, hi: f64 },

    #[error("x = {x} coincides with a pole at {pole}")]
    Pole { x: f64, pole: f64 },

    #[error("tridiagonal eigen-solve did not converge for rule size {size} ({family})")]
    EigenNoConvergence { size: usize, family: String },

    #[error("adaptive quadrature did not converge after {doublings} doublings (last size {size}, last difference {difference:e})")]
    QuadratureNoConvergence {
        doublings: usize,
        size: usize,
        difference: f64,
    },

    #[error("singular orthogonality system (condition estimate {condition:e}) for {context}")]
    SingularSystem { condition: f64, context: String },

    #[error(
        "root localization failed on ({lo}, {hi}): expected {expected} sign changes, found {found}"
    )]
    Localization {
        lo: f64,
        hi: f64,
        expected: usize,
        found: usize,
    },

    #[error("root solver exceeded {iterations} iterations in bracket ({lo}, {hi}){context}")]
    SolverIterations {
        lo: f64,
        hi: f64,
        iterations: usize,
        context: String,
    },

    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors that come from bad inputs rather than numerical failures.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::InvalidParam { .. } | Error::OutOfDomain { .. } | Error::Config(_)
        )
    }
}
