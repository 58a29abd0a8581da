use thiserror::Error;

/// Errors raised by the exact kernels and the finite-field oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A Laurent polynomial with a negative exponent was evaluated at zero.
    #[error("cannot evaluate a negative power of q at q = 0")]
    ZeroBase,
    /// Polynomial division left a nonzero remainder.
    #[error("inexact polynomial division: remainder {remainder}")]
    InexactDivision { remainder: String },
    /// Back-substitution into the Gaussian basis did not terminate at zero.
    #[error("nonzero residual after basis expansion of x^{n}: {residual}")]
    NonzeroResidual { n: usize, residual: String },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("failed to parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
