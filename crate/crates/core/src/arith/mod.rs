//! Exact arithmetic: unbounded integers, rationals, Laurent polynomials in `q`
//! and polynomials in `x` with Laurent coefficients.
//!
//! No floating point is used anywhere in this module tree.

mod laurent;
mod xpoly;

pub use laurent::LaurentPoly;
pub use xpoly::XPoly;

/// Unbounded signed integer; the coefficient domain of every polynomial.
pub type ArbInt = num_bigint::BigInt;

/// Reduced fraction with a positive denominator.
pub type ExactRational = num_rational::BigRational;

/// Converts an integer into an [`ExactRational`] with denominator 1.
pub fn rational_from_int<T: Into<ArbInt>>(v: T) -> ExactRational {
    ExactRational::from_integer(v.into())
}

/// Renders a rational as `a` when integral, otherwise `a/b`.
pub fn render_rational(r: &ExactRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
