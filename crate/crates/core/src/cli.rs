//! Command-line surface: argument definitions, rendering in pretty/CSV/JSON
//! form and the verification suites.
//!
//! [`run`] returns the text destined for stdout, any warnings for stderr and
//! the exit code, so the binary stays a thin wrapper. Exit codes: 0 success,
//! 1 a verified identity failed, 2 usage error.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Number, Value};

use crate::arith::{rational_from_int, render_rational, ExactRational, LaurentPoly};
use crate::basis::{check_dual_recurrence, verify_expansion, verify_expansion_with_boundary};
use crate::error::{Error, Result};
use crate::family::{adjudicate_recurrence, fib_q, q1_series_check, series_truncate, Convention};
use crate::gf::{verify_remark2, MAX_SUBSPACE_DIM};
use crate::qcomb::{build_triangle, qbinom_rec, verify_triangle, Boundary};
use crate::report::VerificationReport;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "qgauss",
    version,
    about = "Gaussian binomial triangles, the Fibonacci q-Gauss family and exact identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Pretty,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Shifted,
    Literal,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Self {
        match c {
            ConventionArg::Shifted => Convention::Shifted,
            ConventionArg::Literal => Convention::Literal,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Qbinom,
    Basis,
    Recurrence,
    Gf,
    Series,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the Gaussian binomial [n choose k]_q, symbolically or at an integer q.
    Qbinom {
        n: usize,
        k: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        q: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print rows 0..=ROWS of the q-Gauss Pascal triangle.
    Triangle {
        #[arg(long)]
        rows: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        q: Option<u64>,
        /// Also print sum_k [n-k choose k]_q for every row n.
        #[arg(long)]
        diagonal_sums: bool,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print F_0..F_{COUNT-1} of the Fibonacci q-Gauss family at level j.
    Fib {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        q: Option<u64>,
        #[arg(long, default_value_t = 0)]
        j: usize,
        #[arg(long, value_enum, default_value = "shifted")]
        convention: ConventionArg,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Print the coefficients of x^0..x^ORDER of the level-l generating series.
    Series {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        order: usize,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        q: Option<u64>,
        #[arg(long, value_enum, default_value = "shifted")]
        convention: ConventionArg,
        #[arg(long, value_enum, default_value_t)]
        format: OutputFormat,
    },
    /// Run a verification suite and print its JSON report.
    ///
    /// Defaults: qbinom n<=30; basis n,k<=12; recurrence n<=20, j<=5;
    /// gf n<=4 (flags n<=3) over primes 2,3; series order 30.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest n (triangle rows, basis degree, recurrence index, field dimension).
        #[arg(long)]
        nmax: Option<usize>,
        /// Largest k for the basis recurrence.
        #[arg(long)]
        kmax: Option<usize>,
        /// Largest level j for the recurrence suite.
        #[arg(long)]
        jmax: Option<usize>,
        /// Truncation order for the series suite.
        #[arg(long)]
        order: Option<usize>,
        /// Field sizes for the gf suite (at most 3).
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<u64>>,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub warnings: Vec<String>,
    pub exit_code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            stdout,
            warnings: Vec::new(),
            exit_code: EXIT_OK,
        }
    }
}

/// A symbolic or evaluated quantity ready for rendering.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Cell {
    Symbolic(LaurentPoly),
    Number(ExactRational),
}

impl Cell {
    fn new(p: LaurentPoly, q: Option<u64>) -> Result<Self> {
        match q {
            None => Ok(Cell::Symbolic(p)),
            Some(q0) => Ok(Cell::Number(p.eval(&rational_from_int(q0))?)),
        }
    }

    fn text(&self) -> String {
        match self {
            Cell::Symbolic(p) => p.to_string(),
            Cell::Number(r) => render_rational(r),
        }
    }

    /// Integers become JSON numbers of any size; everything else a string.
    fn json(&self) -> Value {
        match self {
            Cell::Number(r) if r.is_integer() => Value::Number(
                r.numer()
                    .to_string()
                    .parse::<Number>()
                    .expect("integers are valid JSON numbers"),
            ),
            other => Value::String(other.text()),
        }
    }
}

fn q_json(q: Option<u64>) -> Value {
    q.map_or_else(|| json!("symbolic"), |v| json!(v))
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json value serializes");
    s.push('\n');
    s
}

fn cells(values: impl IntoIterator<Item = LaurentPoly>, q: Option<u64>) -> Result<Vec<Cell>> {
    values.into_iter().map(|p| Cell::new(p, q)).collect()
}

fn negative_exponent_warning(values: &[LaurentPoly]) -> Option<String> {
    values
        .iter()
        .any(|p| p.min_exponent().is_some_and(|e| e < 0))
        .then(|| "warning: literal convention output contains negative powers of q".to_string())
}

/// Renders an indexed sequence (`fib`, `series`).
fn render_sequence(
    values: &[Cell],
    format: OutputFormat,
    index_name: &str,
    header: Map<String, Value>,
    values_key: &str,
) -> String {
    match format {
        OutputFormat::Pretty => {
            let numeric = values.iter().all(|c| matches!(c, Cell::Number(_)));
            if numeric {
                let line: Vec<_> = values.iter().map(Cell::text).collect();
                format!("{}\n", line.join(" "))
            } else {
                values
                    .iter()
                    .enumerate()
                    .map(|(i, c)| format!("{index_name}={i}: {}\n", c.text()))
                    .collect()
            }
        }
        OutputFormat::Csv => {
            let mut out = format!("{index_name},value\n");
            for (i, c) in values.iter().enumerate() {
                out.push_str(&format!("{i},{}\n", c.text()));
            }
            out
        }
        OutputFormat::Json => {
            let mut obj = header;
            obj.insert(values_key.into(), Value::Array(values.iter().map(Cell::json).collect()));
            to_json(&Value::Object(obj))
        }
    }
}

fn cmd_qbinom(n: usize, k: usize, q: Option<u64>, format: OutputFormat) -> Result<Outcome> {
    if k > n {
        return Err(Error::Domain(format!("k = {k} exceeds n = {n}")));
    }
    let cell = Cell::new(qbinom_rec(n, k as i64), q)?;
    let out = match format {
        OutputFormat::Pretty => format!("{}\n", cell.text()),
        OutputFormat::Csv => format!("n,k,q,value\n{n},{k},{},{}\n", q.map_or("symbolic".into(), |v| v.to_string()), cell.text()),
        OutputFormat::Json => to_json(&json!({"n": n, "k": k, "q": q_json(q), "value": cell.json()})),
    };
    Ok(Outcome::ok(out))
}

fn center_rows(rows: &[Vec<String>]) -> String {
    let lines: Vec<String> = rows.iter().map(|r| r.join("   ")).collect();
    let width = lines.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    lines
        .iter()
        .map(|l| {
            let pad = (width - l.chars().count()) / 2;
            format!("{}{}\n", " ".repeat(pad), l).trim_end().to_string() + "\n"
        })
        .collect()
}

fn cmd_triangle(rows: usize, q: Option<u64>, diagonal_sums: bool, format: OutputFormat) -> Result<Outcome> {
    let triangle = build_triangle(rows);
    let table: Vec<Vec<Cell>> = triangle
        .rows()
        .iter()
        .map(|row| cells(row.iter().cloned(), q))
        .collect::<Result<_>>()?;
    let sums = if diagonal_sums {
        Some(cells(triangle.diagonal_sums(), q)?)
    } else {
        None
    };
    let text_rows: Vec<Vec<String>> = table.iter().map(|r| r.iter().map(Cell::text).collect()).collect();
    let out = match format {
        OutputFormat::Pretty => {
            let mut out = center_rows(&text_rows);
            if let Some(sums) = &sums {
                out.push_str("\ndiagonal sums:\n");
                for (n, s) in sums.iter().enumerate() {
                    out.push_str(&format!("n={n}: {}\n", s.text()));
                }
            }
            out
        }
        OutputFormat::Csv => {
            let mut out: String = text_rows.iter().map(|r| format!("{}\n", r.join(","))).collect();
            if let Some(sums) = &sums {
                out.push_str("\nn,diagonal_sum\n");
                for (n, s) in sums.iter().enumerate() {
                    out.push_str(&format!("{n},{}\n", s.text()));
                }
            }
            out
        }
        OutputFormat::Json => {
            let mut obj = Map::new();
            obj.insert("q".into(), q_json(q));
            obj.insert(
                "rows".into(),
                Value::Array(
                    table
                        .iter()
                        .map(|r| Value::Array(r.iter().map(Cell::json).collect()))
                        .collect(),
                ),
            );
            if let Some(sums) = &sums {
                obj.insert("diagonal_sums".into(), Value::Array(sums.iter().map(Cell::json).collect()));
            }
            to_json(&Value::Object(obj))
        }
    };
    Ok(Outcome::ok(out))
}

fn cmd_fib(count: usize, q: Option<u64>, j: usize, conv: Convention, format: OutputFormat) -> Result<Outcome> {
    let values: Vec<LaurentPoly> = (0..count).map(|n| fib_q(n, j, conv)).collect();
    let mut header = Map::new();
    header.insert("q".into(), q_json(q));
    header.insert("j".into(), json!(j));
    header.insert("convention".into(), json!(conv.as_str()));
    let warnings = negative_exponent_warning(&values).into_iter().collect();
    let out = render_sequence(&cells(values, q)?, format, "n", header, "values");
    Ok(Outcome {
        warnings,
        ..Outcome::ok(out)
    })
}

fn cmd_series(l: usize, order: usize, q: Option<u64>, conv: Convention, format: OutputFormat) -> Result<Outcome> {
    let series = series_truncate(l, order, conv);
    let mut header = Map::new();
    header.insert("q".into(), q_json(q));
    header.insert("l".into(), json!(l));
    header.insert("order".into(), json!(order));
    header.insert("convention".into(), json!(conv.as_str()));
    let warnings = negative_exponent_warning(&series.coeffs).into_iter().collect();
    let out = render_sequence(&cells(series.coeffs, q)?, format, "m", header, "coefficients");
    Ok(Outcome {
        warnings,
        ..Outcome::ok(out)
    })
}

/// Bounds for `verify`; `None` fields take the documented defaults.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyBounds {
    pub nmax: Option<usize>,
    pub kmax: Option<usize>,
    pub jmax: Option<usize>,
    pub order: Option<usize>,
    pub primes: Option<Vec<u64>>,
}

/// The literal boundary column must break the expansion of `x`, i.e. fail
/// first at `n = 1`.
fn literal_boundary_rejection(n_max: usize) -> VerificationReport {
    let literal = verify_expansion_with_boundary(n_max.max(1), Boundary::PaperLiteral);
    let first_failure = literal
        .first_counterexample
        .as_ref()
        .and_then(|c| c.parameters.get("n").copied());
    let mut report = VerificationReport::new("basis/literal-boundary-fails-at-n=1");
    let observed = first_failure.map_or("none".to_string(), |n| n.to_string());
    report.check(&[], &observed, &"1".to_string());
    report
}

/// Runs a suite and returns its JSON document and whether everything held.
pub fn run_verify(suite: Suite, bounds: &VerifyBounds) -> Result<(Value, bool)> {
    let run = |s: Suite| suite == Suite::All || suite == s;
    let mut reports: Vec<VerificationReport> = Vec::new();
    let mut recurrence = None;

    if run(Suite::Qbinom) {
        let n = bounds.nmax.unwrap_or(30);
        if n > 60 {
            return Err(Error::Domain("qbinom suite is capped at nmax = 60".into()));
        }
        reports.push(verify_triangle(n)?);
    }
    if run(Suite::Basis) {
        let n = bounds.nmax.unwrap_or(12);
        let k = bounds.kmax.unwrap_or(12);
        if n > 40 || k > 40 {
            return Err(Error::Domain("basis suite is capped at 40".into()));
        }
        reports.push(check_dual_recurrence(k));
        reports.push(verify_expansion(n)?);
        reports.push(literal_boundary_rejection(n));
    }
    if run(Suite::Recurrence) {
        let n = bounds.nmax.unwrap_or(20);
        let j = bounds.jmax.unwrap_or(5);
        if n > 60 || j > 20 {
            return Err(Error::Domain("recurrence suite is capped at nmax = 60, jmax = 20".into()));
        }
        let adjudication = adjudicate_recurrence(n, j)?;
        reports.push(adjudication.summary());
        recurrence = Some(adjudication);
    }
    if run(Suite::Gf) {
        let n = bounds.nmax.unwrap_or(MAX_SUBSPACE_DIM);
        let primes = bounds.primes.clone().unwrap_or_else(|| vec![2, 3]);
        reports.push(verify_remark2(n, &primes)?);
    }
    if run(Suite::Series) {
        let order = bounds.order.unwrap_or(30);
        if order > 500 {
            return Err(Error::Domain("series suite is capped at order = 500".into()));
        }
        reports.push(q1_series_check(order)?);
    }

    let holds = reports.iter().all(|r| r.holds);
    let mut doc = Map::new();
    doc.insert("suite".into(), json!(format!("{suite:?}").to_lowercase()));
    doc.insert("holds".into(), json!(holds));
    doc.insert("reports".into(), serde_json::to_value(&reports).expect("reports serialize"));
    if let Some(adj) = recurrence {
        doc.insert("recurrence".into(), serde_json::to_value(&adj).expect("adjudication serializes"));
    }
    Ok((Value::Object(doc), holds))
}

/// Executes a parsed command.
pub fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Qbinom { n, k, q, format } => cmd_qbinom(*n, *k, *q, *format),
        Command::Triangle {
            rows,
            q,
            diagonal_sums,
            format,
        } => cmd_triangle(*rows, *q, *diagonal_sums, *format),
        Command::Fib {
            count,
            q,
            j,
            convention,
            format,
        } => cmd_fib(*count as usize, *q, *j, (*convention).into(), *format),
        Command::Series {
            l,
            order,
            q,
            convention,
            format,
        } => cmd_series(*l, *order, *q, (*convention).into(), *format),
        Command::Verify {
            suite,
            nmax,
            kmax,
            jmax,
            order,
            primes,
        } => {
            let bounds = VerifyBounds {
                nmax: *nmax,
                kmax: *kmax,
                jmax: *jmax,
                order: *order,
                primes: primes.clone(),
            };
            let (doc, holds) = run_verify(*suite, &bounds)?;
            Ok(Outcome {
                stdout: to_json(&doc),
                warnings: Vec::new(),
                exit_code: if holds { EXIT_OK } else { EXIT_FAILED },
            })
        }
    }
}

/// Parses `args` (including the program name) and runs the command. Parse
/// failures map to exit code 2 with clap's message on stderr; `--help` and
/// `--version` print to stdout with exit code 0.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    stdout: String::new(),
                    warnings: vec![text],
                    exit_code: code,
                }
            };
        }
    };
    run(&cli).unwrap_or_else(|e| Outcome {
        stdout: String::new(),
        warnings: vec![format!("error: {e}")],
        exit_code: EXIT_USAGE,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        run_from_args(std::iter::once("qgauss").chain(args.iter().copied()))
    }

    #[test]
    fn qbinom_command() {
        assert_eq!(run_args(&["qbinom", "4", "2"]).stdout, "1 + q + 2*q^2 + q^3 + q^4\n");
        assert_eq!(run_args(&["qbinom", "4", "2", "--q", "1"]).stdout, "6\n");
        assert_eq!(run_args(&["qbinom", "4", "2", "--q", "2"]).stdout, "35\n");
        assert_eq!(run_args(&["qbinom", "2", "4"]).exit_code, EXIT_USAGE);
        assert_eq!(run_args(&["qbinom", "4", "2", "--q", "0"]).exit_code, EXIT_USAGE);
        assert_eq!(run_args(&["qbinom", "-1", "0"]).exit_code, EXIT_USAGE);
    }

    #[test]
    fn literal_warning() {
        let out = run_args(&["fib", "--count", "3", "--j", "2", "--convention", "literal"]);
        assert_eq!(out.exit_code, EXIT_OK);
        assert_eq!(out.warnings.len(), 1);
        assert!(run_args(&["fib", "--count", "3", "--j", "2"]).warnings.is_empty());
    }

    #[test]
    fn evaluated_literal_values_stay_exact() {
        let out = run_args(&["fib", "--count", "3", "--j", "2", "--q", "2", "--convention", "literal", "--format", "json"]);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["values"], json!([0, "1/4", "1/4"]));
    }
}
