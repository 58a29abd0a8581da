//! q-integers, q-factorials, q-falling factorials and Gaussian binomial
//! coefficients.
//!
//! Two independent routes to `[n choose k]_q` are provided: the Pascal-type
//! recurrence [`qbinom_rec`] (memoized, process-wide) and the quotient
//! [`qbinom_product`] of the q-falling factorial by the q-factorial.

use std::sync::RwLock;

use num_traits::Signed;

use crate::arith::{ArbInt, LaurentPoly};
use crate::error::{Error, Result};
use crate::report::VerificationReport;

/// `n_q = 1 + q + ... + q^(n-1)`; zero for `n = 0`.
pub fn q_integer(n: usize) -> LaurentPoly {
    LaurentPoly::from_dense(0, vec![ArbInt::from(1); n])
}

/// `n_q! = 1_q 2_q ... n_q`.
pub fn q_factorial(n: usize) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, i| &acc * &q_integer(i))
}

/// `n_q (n-1)_q ... (n-k+1)_q`, the empty product being 1.
pub fn q_falling(n: usize, k: usize) -> Result<LaurentPoly> {
    if k > n {
        return Err(Error::Domain(format!("q_falling({n}, {k}): k exceeds n")));
    }
    Ok((0..k).fold(LaurentPoly::one(), |acc, i| &acc * &q_integer(n - i)))
}

/// Gaussian binomial as `q_falling(n, k) / q_factorial(k)`, by exact
/// polynomial division. Zero for `k` outside `0..=n`.
pub fn qbinom_product(n: usize, k: i64) -> Result<LaurentPoly> {
    if k < 0 || k as usize > n {
        return Ok(LaurentPoly::zero());
    }
    let k = k as usize;
    q_falling(n, k)?.div_exact(&q_factorial(k))
}

/// Boundary column used when running the recurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Boundary {
    /// `[n choose 0]_q = 1` for every `n`.
    Standard,
    /// `[0 choose 0]_q = 1` but `[n choose 0]_q = 0` for `n > 0`, exactly as
    /// the boundary line is printed in the source. Kept only to demonstrate
    /// that the basis expansion of `x` breaks under it.
    PaperLiteral,
}

fn next_row(prev: &[LaurentPoly], boundary: Boundary) -> Vec<LaurentPoly> {
    let n = prev.len() - 1;
    let zero = LaurentPoly::zero();
    let at = |k: i64| -> &LaurentPoly {
        if k < 0 || k as usize > n {
            &zero
        } else {
            &prev[k as usize]
        }
    };
    let mut row = Vec::with_capacity(n + 2);
    for k in 0..=(n as i64 + 1) {
        let entry = if k == 0 {
            match boundary {
                Boundary::Standard => LaurentPoly::one(),
                Boundary::PaperLiteral => LaurentPoly::zero(),
            }
        } else {
            at(k - 1) + &at(k).shift(k)
        };
        row.push(entry);
    }
    row
}

static STANDARD_ROWS: RwLock<Vec<Vec<LaurentPoly>>> = RwLock::new(Vec::new());

fn ensure_cached_rows(n: usize) {
    if STANDARD_ROWS.read().unwrap().len() > n {
        return;
    }
    let mut rows = STANDARD_ROWS.write().unwrap();
    if rows.is_empty() {
        rows.push(vec![LaurentPoly::one()]);
    }
    while rows.len() <= n {
        let row = next_row(rows.last().unwrap(), Boundary::Standard);
        rows.push(row);
    }
}

/// Gaussian binomial via `[n+1 choose k] = [n choose k-1] + q^k [n choose k]`
/// with the standard boundary. Zero for `k` outside `0..=n`.
pub fn qbinom_rec(n: usize, k: i64) -> LaurentPoly {
    if k < 0 || k as usize > n {
        return LaurentPoly::zero();
    }
    ensure_cached_rows(n);
    STANDARD_ROWS.read().unwrap()[n][k as usize].clone()
}

/// Rows `0..=N` of the q-Gauss Pascal triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QBinomTriangle {
    rows: Vec<Vec<LaurentPoly>>,
    boundary: Boundary,
}

impl QBinomTriangle {
    pub fn rows(&self) -> &[Vec<LaurentPoly>] {
        &self.rows
    }

    /// Number of rows, `N + 1`.
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    /// Entry `(n, k)`; zero outside the triangle.
    pub fn entry(&self, n: usize, k: i64) -> LaurentPoly {
        if k < 0 {
            return LaurentPoly::zero();
        }
        self.rows
            .get(n)
            .and_then(|row| row.get(k as usize))
            .cloned()
            .unwrap_or_default()
    }

    /// `sum_k [n-k choose k]_q` for each `n = 0..=N`.
    pub fn diagonal_sums(&self) -> Vec<LaurentPoly> {
        (0..self.size())
            .map(|n| (0..=n / 2).map(|k| self.entry(n - k, k as i64)).sum())
            .collect()
    }

    /// Entrywise integer evaluation at `q = q0`.
    pub fn eval(&self, q0: &ArbInt) -> Vec<Vec<ArbInt>> {
        self.rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.eval_int(q0).expect("triangle entries are polynomials"))
                    .collect()
            })
            .collect()
    }
}

/// Builds rows `0..=n` from the memoized recurrence.
pub fn build_triangle(n: usize) -> QBinomTriangle {
    ensure_cached_rows(n);
    let rows = STANDARD_ROWS.read().unwrap()[..=n].to_vec();
    QBinomTriangle {
        rows,
        boundary: Boundary::Standard,
    }
}

/// Builds rows `0..=n` with an explicit boundary column (not cached).
pub fn build_triangle_with_boundary(n: usize, boundary: Boundary) -> QBinomTriangle {
    let mut rows = vec![vec![LaurentPoly::one()]];
    while rows.len() <= n {
        let row = next_row(rows.last().unwrap(), boundary);
        rows.push(row);
    }
    QBinomTriangle { rows, boundary }
}

/// Integer triangle `build_triangle(n)` evaluated at `q = q0 >= 1`.
pub fn eval_triangle(n: usize, q0: u64) -> Result<Vec<Vec<ArbInt>>> {
    if q0 == 0 {
        return Err(Error::Domain("q must be at least 1".into()));
    }
    Ok(build_triangle(n).eval(&ArbInt::from(q0)))
}

/// Checks, for every `0 <= k <= n <= n_max`: recurrence equals product
/// formula, symmetry in `k <-> n - k`, the `q = 1` value equals the integer
/// Pascal triangle, and the coefficient list is positive and palindromic with
/// degree `k (n - k)`.
pub fn verify_triangle(n_max: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("qbinom");
    let triangle = build_triangle(n_max);
    let one = ArbInt::from(1);
    let mut pascal: Vec<ArbInt> = vec![one.clone()];
    for n in 0..=n_max {
        if n > 0 {
            let mut next = vec![one.clone(); n + 1];
            for k in 1..n {
                next[k] = &pascal[k - 1] + &pascal[k];
            }
            pascal = next;
        }
        for (k, pascal_value) in pascal.iter().enumerate() {
            let params = [("n", n as i64), ("k", k as i64)];
            let entry = triangle.entry(n, k as i64);
            report.check(&params, &entry, &qbinom_product(n, k as i64)?);
            report.check(&params, &entry, &triangle.entry(n, (n - k) as i64));
            report.check(&params, &entry.eval_int(&one)?, pascal_value);
            let coeffs = entry.dense_coefficients();
            let shape_ok = entry.min_exponent() == Some(0)
                && entry.max_exponent() == Some((k * (n - k)) as i64)
                && coeffs.iter().all(|c| c.is_positive())
                && coeffs.iter().eq(coeffs.iter().rev());
            report.checked += 1;
            if !shape_ok {
                report.fail(&params, entry.to_string(), "positive palindrome of degree k(n-k)".into());
            }
        }
    }
    Ok(report)
}
