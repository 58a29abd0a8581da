//! Exact computation of Gaussian binomial triangles, the Gaussian polynomial
//! basis and the Fibonacci q-Gauss family, together with machine-checked
//! verification of the identities that tie them together.
//!
//! Everything is computed symbolically in `q` with unbounded integer
//! coefficients; numeric values come from exact evaluation at integer or
//! rational points. The [`gf`] module counts subspaces and flags over small
//! prime fields by brute force as an independent oracle.
//!
//! ```
//! use qgauss::{qcomb, family::{fib_q, Convention}};
//!
//! let binom = qcomb::qbinom_rec(4, 2);
//! assert_eq!(binom.to_string(), "1 + q + 2*q^2 + q^3 + q^4");
//! assert_eq!(binom.eval_int(&2.into()).unwrap(), 35.into());
//!
//! let f6 = fib_q(6, 0, Convention::Shifted);
//! assert_eq!(f6.eval_int(&2.into()).unwrap(), 23.into());
//! ```

pub mod arith;
pub mod basis;
pub mod cli;
pub mod error;
pub mod family;
pub mod gf;
pub mod qcomb;
pub mod report;

pub use arith::{ArbInt, ExactRational, LaurentPoly, XPoly};
pub use error::{Error, Result};
pub use report::VerificationReport;
