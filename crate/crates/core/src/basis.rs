//! The Gaussian polynomial basis `phi_k(x) = (x - 1)(x - q)...(x - q^(k-1))`,
//! its three-term recurrence and the expansion of `x^n` in that basis.

use crate::arith::{LaurentPoly, XPoly};
use crate::error::{Error, Result};
use crate::qcomb::{build_triangle_with_boundary, qbinom_rec, Boundary};
use crate::report::VerificationReport;

/// `phi_k(x)`, monic of degree `k`; `phi_0 = 1`.
pub fn phi(k: usize) -> XPoly {
    phis(k).pop().unwrap()
}

/// `[phi_0, ..., phi_k]`.
pub fn phis(k: usize) -> Vec<XPoly> {
    let mut out = Vec::with_capacity(k + 1);
    out.push(XPoly::one());
    for i in 0..k {
        let factor = XPoly::new(vec![-LaurentPoly::q_pow(i as i64), LaurentPoly::one()]);
        let next = out.last().unwrap() * &factor;
        out.push(next);
    }
    out
}

/// Checks `x phi_k(x) = q^k phi_k(x) + phi_{k+1}(x)` for `0 <= k <= k_max`.
///
/// The identity is also checked at `k = 0`, where it reads `x = 1 + (x - 1)`;
/// `phi_{-1}` never appears.
pub fn check_dual_recurrence(k_max: usize) -> VerificationReport {
    let basis = phis(k_max + 1);
    let mut report = VerificationReport::new("basis/dual-recurrence");
    for k in 0..=k_max {
        let lhs = basis[k].mul_x();
        let rhs = &basis[k].scale(&LaurentPoly::q_pow(k as i64)) + &basis[k + 1];
        report.check(&[("k", k as i64)], &lhs, &rhs);
    }
    report
}

/// Coefficients `c_{n,k}` with `x^n = sum_k c_{n,k} phi_k(x)`, by peeling off
/// the top degree against the monic basis.
pub fn expand_monomial(n: usize) -> Result<Vec<LaurentPoly>> {
    expand_in_basis(&XPoly::monomial(n), &phis(n))
}

fn expand_in_basis(target: &XPoly, basis: &[XPoly]) -> Result<Vec<LaurentPoly>> {
    let n = target.degree();
    let mut residual = target.clone();
    let mut coeffs = vec![LaurentPoly::zero(); n + 1];
    for k in (0..=n).rev() {
        let c = residual.coeff(k);
        if !c.is_zero() {
            residual = &residual - &basis[k].scale(&c);
        }
        coeffs[k] = c;
    }
    if !residual.is_zero() {
        return Err(Error::NonzeroResidual {
            n,
            residual: residual.to_string(),
        });
    }
    Ok(coeffs)
}

/// Checks `expand_monomial(n)[k] == [n choose k]_q` for all `k <= n <= n_max`.
pub fn verify_expansion(n_max: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("basis/expansion");
    let basis = phis(n_max);
    for n in 0..=n_max {
        let coeffs = expand_in_basis(&XPoly::monomial(n), &basis[..=n])?;
        for (k, c) in coeffs.iter().enumerate() {
            report.check(&[("n", n as i64), ("k", k as i64)], c, &qbinom_rec(n, k as i64));
        }
    }
    Ok(report)
}

/// Checks `x^n = sum_k [n choose k]_q phi_k(x)` with the triangle built from
/// the given boundary column. Under [`Boundary::PaperLiteral`] this fails at
/// `n = 1`.
pub fn verify_expansion_with_boundary(n_max: usize, boundary: Boundary) -> VerificationReport {
    let mut report = VerificationReport::new(match boundary {
        Boundary::Standard => "basis/expansion-standard-boundary",
        Boundary::PaperLiteral => "basis/expansion-literal-boundary",
    });
    let triangle = build_triangle_with_boundary(n_max, boundary);
    let basis = phis(n_max);
    for n in 0..=n_max {
        let rhs = (0..=n).fold(XPoly::zero(), |acc, k| {
            &acc + &basis[k].scale(&triangle.entry(n, k as i64))
        });
        report.check(&[("n", n as i64)], &XPoly::monomial(n), &rhs);
    }
    report
}
