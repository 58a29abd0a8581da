use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::LaurentPoly;

/// Dense polynomial in `x` whose coefficients are Laurent polynomials in `q`.
///
/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are trimmed and the
/// zero polynomial is the single entry `[0]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct XPoly {
    coeffs: Vec<LaurentPoly>,
}

impl XPoly {
    pub fn new(mut coeffs: Vec<LaurentPoly>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(LaurentPoly::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(LaurentPoly::zero());
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::new(vec![])
    }

    pub fn one() -> Self {
        Self::constant(LaurentPoly::one())
    }

    pub fn constant(c: LaurentPoly) -> Self {
        Self::new(vec![c])
    }

    /// `x`.
    pub fn x() -> Self {
        Self::new(vec![LaurentPoly::zero(), LaurentPoly::one()])
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(); n + 1];
        coeffs[n] = LaurentPoly::one();
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Degree in `x`; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> LaurentPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> &LaurentPoly {
        self.coeffs.last().unwrap()
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `x`.
    pub fn mul_x(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(LaurentPoly::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }
}

fn zip_with(a: &XPoly, b: &XPoly, f: impl Fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly) -> XPoly {
    let len = a.coeffs.len().max(b.coeffs.len());
    let zero = LaurentPoly::zero();
    XPoly::new(
        (0..len)
            .map(|i| f(a.coeffs.get(i).unwrap_or(&zero), b.coeffs.get(i).unwrap_or(&zero)))
            .collect(),
    )
}

impl Add for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        zip_with(self, rhs, |a, b| a + b)
    }
}

impl Sub for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        zip_with(self, rhs, |a, b| a - b)
    }
}

impl Mul for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![LaurentPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        XPoly::new(coeffs)
    }
}

impl Add for XPoly {
    type Output = XPoly;
    fn add(self, rhs: XPoly) -> XPoly {
        &self + &rhs
    }
}

impl Sub for XPoly {
    type Output = XPoly;
    fn sub(self, rhs: XPoly) -> XPoly {
        &self - &rhs
    }
}

impl Mul for XPoly {
    type Output = XPoly;
    fn mul(self, rhs: XPoly) -> XPoly {
        &self * &rhs
    }
}

/// Ascending powers of `x`, e.g. `q + (-1 - q)*x + x^2`.
impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if i == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{var}")?;
            } else if c.term_count() == 1 && !c.to_string().starts_with('-') {
                write!(f, "{c}*{var}")?;
            } else {
                write!(f, "({c})*{var}")?;
            }
        }
        Ok(())
    }
}
