//! The Fibonacci q-Gauss family `F_n^[q^j]`: weighted diagonal sums of the
//! Gaussian triangle,
//!
//! ```text
//! F_0 = 0,    F_{n+1} = sum_{k=0}^{floor(n/2)} [n-k choose k]_q * w(j, k)
//! ```
//!
//! where the weight `w` depends on the [`Convention`]. At `q = 1` every member
//! of the family is the Fibonacci sequence.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::arith::{rational_from_int, ArbInt, ExactRational, LaurentPoly};
use crate::error::{Error, Result};
use crate::qcomb::qbinom_rec;
use crate::report::VerificationReport;

/// Reading of the diagonal weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// `w(j, k) = q^(j k)`; all exponents nonnegative.
    #[default]
    Shifted,
    /// `w(j, k) = q^(j (k - 1))`; the `k = 0` term carries `q^-j`.
    Literal,
}

impl Convention {
    pub const ALL: [Convention; 2] = [Convention::Shifted, Convention::Literal];

    pub fn as_str(self) -> &'static str {
        match self {
            Convention::Shifted => "shifted",
            Convention::Literal => "literal",
        }
    }

    fn weight_exponent(self, j: usize, k: usize) -> i64 {
        let (j, k) = (j as i64, k as i64);
        match self {
            Convention::Shifted => j * k,
            Convention::Literal => j * (k - 1),
        }
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "shifted" => Ok(Convention::Shifted),
            "literal" => Ok(Convention::Literal),
            _ => Err(Error::Parse {
                input: s.into(),
                reason: "expected 'shifted' or 'literal'".into(),
            }),
        }
    }
}

/// `F_n^[q^j]` as an exact Laurent polynomial.
pub fn fib_q(n: usize, j: usize, conv: Convention) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    let m = n - 1;
    (0..=m / 2)
        .map(|k| qbinom_rec(m - k, k as i64).shift(conv.weight_exponent(j, k)))
        .sum()
}

/// `F_n^[q^j]` evaluated at an integer `q0 >= 1`. Rational only under
/// [`Convention::Literal`] when the `q^-j` term survives.
pub fn fib_q_eval(n: usize, j: usize, q0: u64, conv: Convention) -> Result<ExactRational> {
    if q0 == 0 {
        return Err(Error::Domain("q must be at least 1".into()));
    }
    fib_q(n, j, conv).eval(&rational_from_int(q0))
}

/// Values `F_n^[q^j]` for `n <= n_max`, `j <= j_max` under one convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyTable {
    convention: Convention,
    // columns[j][n]
    columns: Vec<Vec<LaurentPoly>>,
}

impl FamilyTable {
    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn n_max(&self) -> usize {
        self.columns[0].len() - 1
    }

    pub fn j_max(&self) -> usize {
        self.columns.len() - 1
    }

    /// Panics when `(n, j)` lies outside the table.
    pub fn entry(&self, n: usize, j: usize) -> &LaurentPoly {
        &self.columns[j][n]
    }

    /// The sequence `F_0..=F_{n_max}` at level `j`.
    pub fn column(&self, j: usize) -> &[LaurentPoly] {
        &self.columns[j]
    }
}

pub fn family_table(n_max: usize, j_max: usize, conv: Convention) -> FamilyTable {
    let columns = (0..=j_max)
        .map(|j| (0..=n_max).map(|n| fib_q(n, j, conv)).collect())
        .collect();
    FamilyTable {
        convention: conv,
        columns,
    }
}

/// Candidate three-term recurrences for the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RecurrenceVariant {
    /// `F_{n+2}^[j] = F_{n+1}^[j+1] + F_n^[j]`, as printed.
    Paper,
    /// `F_{n+2}^[j] = F_{n+1}^[j+1] + q^j F_n^[j]`.
    ShiftedCorrected,
    /// `F_{n+2}^[j] = q F_{n+1}^[j+1] + F_n^[j]`.
    LiteralCorrected,
}

impl RecurrenceVariant {
    pub const ALL: [RecurrenceVariant; 3] = [
        RecurrenceVariant::Paper,
        RecurrenceVariant::ShiftedCorrected,
        RecurrenceVariant::LiteralCorrected,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RecurrenceVariant::Paper => "paper",
            RecurrenceVariant::ShiftedCorrected => "shifted_corrected",
            RecurrenceVariant::LiteralCorrected => "literal_corrected",
        }
    }

    /// Right-hand side at `(n, j)`; the table must reach `n + 1` and `j + 1`.
    fn rhs(self, table: &FamilyTable, n: usize, j: usize) -> LaurentPoly {
        let up = table.entry(n + 1, j + 1);
        let back = table.entry(n, j);
        match self {
            RecurrenceVariant::Paper => up + back,
            RecurrenceVariant::ShiftedCorrected => up + &back.shift(j as i64),
            RecurrenceVariant::LiteralCorrected => &up.shift(1) + back,
        }
    }
}

impl fmt::Display for RecurrenceVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one variant under one convention, split by level `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceCheck {
    pub variant: RecurrenceVariant,
    pub convention: Convention,
    pub holds_by_j: Vec<bool>,
    pub report: VerificationReport,
}

fn check_variant(variant: RecurrenceVariant, table: &FamilyTable, n_max: usize, j_max: usize) -> RecurrenceCheck {
    let conv = table.convention();
    let mut report = VerificationReport::new(format!("recurrence/{conv}/{variant}"));
    let mut holds_by_j = Vec::with_capacity(j_max + 1);
    for j in 0..=j_max {
        let mut level_ok = true;
        for n in 0..=n_max - 2 {
            let lhs = table.entry(n + 2, j);
            let rhs = variant.rhs(table, n, j);
            level_ok &= report.check(&[("n", n as i64), ("j", j as i64)], lhs, &rhs);
        }
        holds_by_j.push(level_ok);
    }
    RecurrenceCheck {
        variant,
        convention: conv,
        holds_by_j,
        report,
    }
}

/// Compares both sides of `variant` as exact Laurent polynomials for every
/// `0 <= n <= n_max - 2` and `0 <= j <= j_max`.
pub fn verify_recurrence(
    variant: RecurrenceVariant,
    conv: Convention,
    n_max: usize,
    j_max: usize,
) -> Result<RecurrenceCheck> {
    if n_max < 2 {
        return Err(Error::Domain("recurrence check needs n_max >= 2".into()));
    }
    let table = family_table(n_max, j_max + 1, conv);
    Ok(check_variant(variant, &table, n_max, j_max))
}

/// All three variants under one convention.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConventionVerdict {
    pub convention: Convention,
    /// The printed recurrence restricted to `j = 0`.
    pub paper_at_j0: VerificationReport,
    pub variants: Vec<RecurrenceCheck>,
    /// The unique variant that holds at every level, if exactly one does.
    pub verdict: Option<RecurrenceVariant>,
    /// True when at most one variant holds; every failing variant carries a
    /// rendered counterexample.
    pub definitive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceAdjudication {
    pub suite: String,
    pub n_max: usize,
    pub j_max: usize,
    pub conventions: Vec<ConventionVerdict>,
    /// Every convention has a definitive verdict.
    pub holds: bool,
}

impl RecurrenceAdjudication {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("adjudication serializes")
    }

    pub fn for_convention(&self, conv: Convention) -> &ConventionVerdict {
        self.conventions.iter().find(|c| c.convention == conv).unwrap()
    }

    /// Collapses the adjudication into a single report that fails only when
    /// some convention lacks a definitive verdict.
    pub fn summary(&self) -> VerificationReport {
        let mut report = VerificationReport::new("recurrence");
        for cv in &self.conventions {
            report.checked += cv.paper_at_j0.checked;
            report.checked += cv.variants.iter().map(|v| v.report.checked).sum::<u64>();
            if !cv.definitive {
                report.fail(
                    &[],
                    format!("{} variants hold under {}", cv.variants.iter().filter(|v| v.report.holds).count(), cv.convention),
                    "at most one".into(),
                );
            }
        }
        report
    }
}

/// Runs every variant under both conventions and decides which one holds.
pub fn adjudicate_recurrence(n_max: usize, j_max: usize) -> Result<RecurrenceAdjudication> {
    if n_max < 2 {
        return Err(Error::Domain("recurrence check needs n_max >= 2".into()));
    }
    let mut conventions = Vec::new();
    for conv in Convention::ALL {
        let table = family_table(n_max, j_max + 1, conv);
        let mut paper_at_j0 = check_variant(RecurrenceVariant::Paper, &table, n_max, 0).report;
        paper_at_j0.suite = format!("recurrence/{conv}/paper/j=0");
        let variants: Vec<_> = RecurrenceVariant::ALL
            .iter()
            .map(|&v| check_variant(v, &table, n_max, j_max))
            .collect();
        let holding: Vec<_> = variants.iter().filter(|v| v.report.holds).collect();
        let verdict = (holding.len() == 1).then(|| holding[0].variant);
        conventions.push(ConventionVerdict {
            convention: conv,
            definitive: holding.len() <= 1,
            paper_at_j0,
            variants,
            verdict,
        });
    }
    let holds = conventions.iter().all(|c| c.definitive);
    Ok(RecurrenceAdjudication {
        suite: "recurrence".into(),
        n_max,
        j_max,
        conventions,
        holds,
    })
}

/// First `order + 1` coefficients of `F(q^l; x) = sum_m F_m^[q^l] x^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTruncation {
    pub level: usize,
    pub order: usize,
    pub convention: Convention,
    pub coeffs: Vec<LaurentPoly>,
}

pub fn series_truncate(level: usize, order: usize, conv: Convention) -> SeriesTruncation {
    SeriesTruncation {
        level,
        order,
        convention: conv,
        coeffs: (0..=order).map(|m| fib_q(m, level, conv)).collect(),
    }
}

/// Compares the `q = 1`, level-0 truncation against the expansion of
/// `x / (1 - x - x^2)`, whose coefficients satisfy `a_m = a_{m-1} + a_{m-2}`.
pub fn q1_series_check(order: usize) -> Result<VerificationReport> {
    if order < 2 {
        return Err(Error::Domain("series check needs order >= 2".into()));
    }
    let series = series_truncate(0, order, Convention::Shifted);
    let mut expected: Vec<ArbInt> = vec![BigInt::from(0), BigInt::from(1)];
    while expected.len() <= order {
        let m = expected.len();
        expected.push(&expected[m - 1] + &expected[m - 2]);
    }
    let one = ArbInt::from(1);
    let mut report = VerificationReport::new("series/q=1");
    for (m, (c, a)) in series.coeffs.iter().zip(&expected).enumerate() {
        report.check(&[("m", m as i64)], &c.eval_int(&one)?, a);
    }
    Ok(report)
}
