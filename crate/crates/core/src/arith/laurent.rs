use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ArbInt, ExactRational};
use crate::error::{Error, Result};

/// A Laurent polynomial in `q` with unbounded integer coefficients.
///
/// Stored as a dense window `coeffs[i]` = coefficient of `q^(low + i)`. The
/// window is always trimmed so that its first and last entries are nonzero;
/// the zero polynomial is the empty window with `low = 0`. Equality is
/// therefore structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<ArbInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<ArbInt>>(c: T) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^e`.
    pub fn monomial<T: Into<ArbInt>>(c: T, e: i64) -> Self {
        Self::from_dense(e, vec![c.into()])
    }

    /// `q^e`.
    pub fn q_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    /// Builds a polynomial from a dense coefficient window starting at `q^low`.
    pub fn from_dense(low: i64, coeffs: Vec<ArbInt>) -> Self {
        let mut p = Self { low, coeffs };
        p.normalize();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, T>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, T)>,
        T: Into<ArbInt>,
    {
        let terms: Vec<(i64, ArbInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(low) = terms.iter().map(|(e, _)| *e).min() else {
            return Self::zero();
        };
        let high = terms.iter().map(|(e, _)| *e).max().unwrap();
        let mut coeffs = vec![ArbInt::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        Self::from_dense(low, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Smallest exponent carrying a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Largest exponent carrying a nonzero coefficient.
    pub fn max_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn coeff(&self, e: i64) -> ArbInt {
        let idx = e - self.low;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            ArbInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &ArbInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Coefficients from the lowest to the highest nonzero exponent, zeros included.
    pub fn dense_coefficients(&self) -> &[ArbInt] {
        &self.coeffs
    }

    /// Multiplies by `q^d`.
    pub fn shift(&self, d: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self {
            low: self.low + d,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &ArbInt) -> Self {
        Self::from_dense(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at `q = q0`.
    pub fn eval(&self, q0: &ExactRational) -> Result<ExactRational> {
        if self.is_zero() {
            return Ok(ExactRational::zero());
        }
        if q0.is_zero() {
            if self.low < 0 {
                return Err(Error::ZeroBase);
            }
            return Ok(ExactRational::from_integer(self.coeff(0)));
        }
        // Horner over the window, then scale by q0^low.
        let mut acc = ExactRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + ExactRational::from_integer(c.clone());
        }
        let base = if self.low < 0 { q0.recip() } else { q0.clone() };
        let mut factor = ExactRational::one();
        for _ in 0..self.low.unsigned_abs() {
            factor *= &base;
        }
        Ok(acc * factor)
    }

    /// Integer value at an integer point; requires nonnegative exponents.
    pub fn eval_int(&self, q0: &ArbInt) -> Result<ArbInt> {
        if self.low < 0 && !self.is_zero() {
            return Err(Error::Domain(format!(
                "{self} has negative exponents; use rational evaluation"
            )));
        }
        let mut acc = ArbInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        for _ in 0..self.low {
            acc *= q0;
        }
        Ok(acc)
    }

    /// Exact quotient `self / divisor`; fails with [`Error::InexactDivision`]
    /// when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        if divisor.is_zero() {
            return Err(Error::Domain("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let dlen = divisor.coeffs.len();
        let lead = divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return Err(Error::InexactDivision {
                remainder: self.to_string(),
            });
        }
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![ArbInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (qc, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision {
                    remainder: Self::from_dense(self.low, rem).to_string(),
                });
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i + j] -= &qc * d;
                }
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision {
                remainder: Self::from_dense(self.low, rem).to_string(),
            });
        }
        Ok(Self::from_dense(self.low - divisor.low, quot))
    }
}

fn add_windows(a: &LaurentPoly, b: &LaurentPoly, negate_b: bool) -> LaurentPoly {
    if b.is_zero() {
        return a.clone();
    }
    if a.is_zero() {
        return if negate_b { -b } else { b.clone() };
    }
    let low = a.low.min(b.low);
    let high = a.max_exponent().unwrap().max(b.max_exponent().unwrap());
    let mut coeffs = vec![ArbInt::zero(); (high - low + 1) as usize];
    for (i, c) in a.coeffs.iter().enumerate() {
        coeffs[(a.low - low) as usize + i] += c;
    }
    for (i, c) in b.coeffs.iter().enumerate() {
        let slot = &mut coeffs[(b.low - low) as usize + i];
        if negate_b {
            *slot -= c;
        } else {
            *slot += c;
        }
    }
    LaurentPoly::from_dense(low, coeffs)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_windows(self, rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        add_windows(self, rhs, true)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![ArbInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                if b.is_one() {
                    coeffs[i + j] += a;
                } else {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, p| &acc + &p)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

fn render_term(f: &mut fmt::Formatter<'_>, magnitude: &ArbInt, e: i64) -> fmt::Result {
    match (e, magnitude.is_one()) {
        (0, _) => write!(f, "{magnitude}"),
        (1, true) => write!(f, "q"),
        (1, false) => write!(f, "{magnitude}*q"),
        (_, true) => write!(f, "q^{e}"),
        (_, false) => write!(f, "{magnitude}*q^{e}"),
    }
}

/// Canonical rendering: ascending exponents, `c*q^e`, unit coefficients and
/// `q^0` elided, e.g. `q^-1 + 1 - 3*q^2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            render_term(f, &c.abs(), e)?;
        }
        Ok(())
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Parses the canonical rendering (and reasonable variations of it:
    /// arbitrary whitespace, unsorted or repeated terms).
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        // Split into signed terms; a sign directly after '^' belongs to the exponent.
        let mut pieces: Vec<String> = Vec::new();
        let mut current = String::new();
        let mut prev: Option<char> = None;
        for ch in compact.chars() {
            if (ch == '+' || ch == '-') && prev.is_some() && prev != Some('^') {
                pieces.push(std::mem::take(&mut current));
            }
            current.push(ch);
            prev = Some(ch);
        }
        pieces.push(current);

        let mut terms: Vec<(i64, ArbInt)> = Vec::new();
        for piece in pieces {
            let (negative, body) = match piece.as_bytes().first() {
                Some(b'-') => (true, &piece[1..]),
                Some(b'+') => (false, &piece[1..]),
                _ => (false, piece.as_str()),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let (coeff_str, var_part) = match body.find('q') {
                None => (body, None),
                Some(idx) => {
                    let head = &body[..idx];
                    let head = head.strip_suffix('*').unwrap_or(head);
                    (head, Some(&body[idx + 1..]))
                }
            };
            let mut coeff = if coeff_str.is_empty() {
                if var_part.is_none() {
                    return Err(err("empty term"));
                }
                ArbInt::one()
            } else {
                coeff_str
                    .parse::<ArbInt>()
                    .map_err(|_| err("invalid coefficient"))?
            };
            let exp = match var_part {
                None => 0,
                Some("") => 1,
                Some(rest) => rest
                    .strip_prefix('^')
                    .ok_or_else(|| err("expected '^' after q"))?
                    .parse::<i64>()
                    .map_err(|_| err("invalid exponent"))?,
            };
            if negative {
                coeff = -coeff;
            }
            terms.push((exp, coeff));
        }
        Ok(Self::from_terms(terms))
    }
}
