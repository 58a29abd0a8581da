//! Acceptance criteria, one line per criterion. Runs as a plain binary so the
//! verdict lines are always printed.

mod common;

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use qgauss::basis::{check_dual_recurrence, expand_monomial, verify_expansion_with_boundary};
use qgauss::family::{adjudicate_recurrence, fib_q, q1_series_check, series_truncate, Convention};
use qgauss::gf::{count_maximal_chains, count_subspaces};
use qgauss::qcomb::{build_triangle, q_factorial, qbinom_product, qbinom_rec, Boundary};
use qgauss::LaurentPoly;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn int(v: i64) -> BigInt {
    v.into()
}

fn c1_oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 0..=30 {
        for k in 0..=n as i64 {
            let product = qbinom_product(n, k).map_err(|e| e.to_string())?;
            ensure(qbinom_rec(n, k) == product, format!("mismatch at ({n}, {k})"))?;
            count += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(count == 496, format!("expected 496 pairs, checked {count}"))?;
    ensure(elapsed < Duration::from_secs(5), format!("took {elapsed:?}"))?;
    Ok(format!("{count} identities (0<=k<=n<=30) in {elapsed:.2?}"))
}

fn c2_pascal_specialization() -> Outcome {
    let triangle = build_triangle(30).eval(&int(1));
    ensure(triangle == common::pascal(30), "q=1 triangle differs from Pascal")?;
    Ok("rows 0..=30 equal the integer Pascal triangle".into())
}

fn c3_shape() -> Outcome {
    let t = build_triangle(30);
    for n in 0..=30usize {
        for k in 0..=n {
            let e = t.entry(n, k as i64);
            let coeffs = e.dense_coefficients();
            ensure(e.min_exponent() == Some(0), format!("({n},{k}) min exponent"))?;
            ensure(e.max_exponent() == Some((k * (n - k)) as i64), format!("({n},{k}) degree"))?;
            ensure(coeffs.iter().all(|c| *c > int(0)), format!("({n},{k}) positivity"))?;
            ensure(coeffs.iter().eq(coeffs.iter().rev()), format!("({n},{k}) palindrome"))?;
            ensure(e == t.entry(n, (n - k) as i64), format!("({n},{k}) symmetry"))?;
        }
    }
    Ok("degree k(n-k), positive palindromic coefficients, k<->n-k symmetry for n<=30".into())
}

fn c4_expansion() -> Outcome {
    for n in 0..=12 {
        let coeffs = expand_monomial(n).map_err(|e| e.to_string())?;
        for (k, c) in coeffs.iter().enumerate() {
            ensure(*c == qbinom_rec(n, k as i64), format!("c({n},{k}) = {c}"))?;
        }
    }
    let literal = verify_expansion_with_boundary(12, Boundary::PaperLiteral);
    let first = literal.first_counterexample.as_ref().map(|c| c.parameters["n"]);
    ensure(first == Some(1), format!("literal boundary first failure at {first:?}, expected n=1"))?;
    let cx = literal.first_counterexample.unwrap();
    Ok(format!(
        "x^n expansion matches [n choose k]_q for n<=12; literal boundary fails at n=1 ({} vs {})",
        cx.lhs, cx.rhs
    ))
}

fn c5_dual_recurrence() -> Outcome {
    let r = check_dual_recurrence(12);
    ensure(r.holds && r.checked == 13, format!("{r:?}"))?;
    Ok("x phi_k = q^k phi_k + phi_{k+1} for 0<=k<=12".into())
}

fn c6_fibonacci() -> Outcome {
    let sums = build_triangle(30).diagonal_sums();
    let at1: Vec<BigInt> = sums.iter().map(|s| s.eval_int(&int(1)).unwrap()).collect();
    let expected: Vec<BigInt> = [1, 1, 2, 3, 5, 8, 13, 21, 34, 55].map(int).to_vec();
    ensure(at1[..10] == expected[..], format!("first ten sums {:?}", &at1[..10]))?;
    let fib = common::fibonacci(31);
    // diagonal n sums to F_{n+1}
    for n in 0..=30 {
        ensure(at1[n] == fib[n + 1], format!("diagonal {n}"))?;
    }
    let f30 = fib_q(30, 0, Convention::Shifted).eval_int(&int(1)).unwrap();
    ensure(f30 == int(832040) && fib[30] == f30, format!("F_30 = {f30}"))?;
    Ok("F_1..F_10 = 1..55 and F_30 = 832040".into())
}

fn c7_q2_family() -> Outcome {
    let two = int(2);
    let sums = build_triangle(30).diagonal_sums();
    let mut direct = vec![int(0)];
    for n in 1..=30usize {
        let m = n - 1;
        let mut acc = LaurentPoly::zero();
        for k in 0..=m / 2 {
            acc = &acc + &qbinom_product(m - k, k as i64).map_err(|e| e.to_string())?;
        }
        direct.push(acc.eval_int(&two).unwrap());
    }
    for n in 1..=30 {
        let via_triangle = sums[n - 1].eval_int(&two).unwrap();
        ensure(direct[n] == via_triangle, format!("paths disagree at n={n}"))?;
        ensure(direct[n] == common::family_shifted_at(n, 0, 2), format!("integer oracle at n={n}"))?;
    }
    let head: Vec<BigInt> = [0, 1, 1, 2, 4, 9, 23].map(int).to_vec();
    ensure(direct[..7] == head[..], format!("head {:?}", &direct[..7]))?;
    Ok("0, 1, 1, 2, 4, 9, 23, ... agree on both paths for n<=30".into())
}

fn c8_recurrence() -> Outcome {
    let adj = adjudicate_recurrence(20, 5).map_err(|e| e.to_string())?;
    let again = adjudicate_recurrence(20, 5).map_err(|e| e.to_string())?;
    ensure(adj.to_json() == again.to_json(), "report is not deterministic")?;
    let mut lines = Vec::new();
    let mut problems = Vec::new();
    for cv in &adj.conventions {
        if !cv.paper_at_j0.holds {
            let cx = cv.paper_at_j0.first_counterexample.as_ref().unwrap();
            problems.push(format!(
                "(a) printed recurrence fails at j=0 under {} at {:?}: {} vs {}",
                cv.convention, cx.parameters, cx.lhs, cx.rhs
            ));
        }
        match cv.verdict {
            Some(v) => lines.push(format!("{}: only {v} holds", cv.convention)),
            None => {
                let holding = cv.variants.iter().filter(|v| v.report.holds).count();
                if holding > 1 {
                    problems.push(format!("(b) {holding} variants hold under {}", cv.convention));
                }
                for v in &cv.variants {
                    let cx = v.report.first_counterexample.as_ref();
                    if cx.is_none_or(|c| c.lhs.is_empty() || c.rhs.is_empty()) {
                        problems.push(format!("(b) {} lacks a rendered counterexample", v.variant));
                    }
                }
                lines.push(format!("{}: no variant holds, counterexamples for all three", cv.convention));
            }
        }
    }
    if problems.is_empty() {
        Ok(lines.join("; "))
    } else {
        Err(format!("{}; verdicts: {}", problems.join("; "), lines.join("; ")))
    }
}

fn c9_remark2() -> Outcome {
    for p in [2u64, 3] {
        for n in 0..=4 {
            for k in 0..=n {
                let counted = count_subspaces(n, k, p).map_err(|e| e.to_string())?;
                let formula = qbinom_rec(n, k as i64).eval_int(&p.into()).unwrap();
                ensure(counted == formula, format!("subspaces ({n},{k},{p})"))?;
                ensure(counted == common::gaussian_at(n, k, p), format!("integer oracle ({n},{k},{p})"))?;
            }
        }
        for n in 0..=3 {
            let counted = count_maximal_chains(n, p).map_err(|e| e.to_string())?;
            ensure(counted == q_factorial(n).eval_int(&p.into()).unwrap(), format!("flags ({n},{p})"))?;
        }
    }
    ensure(count_subspaces(4, 2, 2).unwrap() == int(35), "(4,2,2) != 35")?;
    ensure(count_maximal_chains(2, 2).unwrap() == int(3), "flags(2,2) != 3")?;
    ensure(count_maximal_chains(3, 2).unwrap() == int(21), "flags(3,2) != 21")?;
    Ok("subspace counts n<=4 and flag counts n<=3 over GF(2), GF(3); 35, 3, 21 reproduced".into())
}

fn c10_series() -> Outcome {
    let report = q1_series_check(30).map_err(|e| e.to_string())?;
    ensure(report.holds && report.checked == 31, format!("{report:?}"))?;
    let s = series_truncate(0, 30, Convention::Shifted);
    let coeffs: Vec<BigInt> = s.coeffs.iter().map(|c| c.eval_int(&int(1)).unwrap()).collect();
    ensure(coeffs == common::fibonacci(30), "truncation differs from x/(1-x-x^2)")?;
    Ok("order-30 truncation at q=1 equals x/(1-x-x^2)".into())
}

fn c11_bridge() -> Outcome {
    for j in 0..=5 {
        for n in 1..=30 {
            let lit = fib_q(n, j, Convention::Literal);
            let shifted = fib_q(n, j, Convention::Shifted);
            ensure(lit == shifted.shift(-(j as i64)), format!("(n={n}, j={j})"))?;
        }
    }
    Ok("literal = q^-j * shifted for 1<=n<=30, 0<=j<=5".into())
}

fn run_cli(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_qgauss"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn c12_cli() -> Outcome {
    let start = Instant::now();
    let out = run_cli(&["verify", "all"]);
    let elapsed = start.elapsed();
    ensure(
        out.status.code() == Some(0),
        format!("verify all exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stdout)),
    )?;
    ensure(elapsed < Duration::from_secs(60), format!("verify all took {elapsed:?}"))?;
    let second = run_cli(&["verify", "all"]);
    ensure(out.stdout == second.stdout, "verify all output differs between runs")?;
    let invocations: [&[&str]; 6] = [
        &["triangle", "--rows", "8", "--format", "json", "--diagonal-sums"],
        &["triangle", "--rows", "8", "--q", "2", "--format", "csv", "--diagonal-sums"],
        &["fib", "--count", "12", "--j", "2", "--format", "json"],
        &["fib", "--count", "12", "--q", "3", "--convention", "literal", "--format", "csv"],
        &["series", "--l", "1", "--order", "10", "--format", "json"],
        &["qbinom", "9", "4", "--format", "csv"],
    ];
    for args in invocations {
        let a = run_cli(args);
        let b = run_cli(args);
        ensure(a.status.success() && !a.stdout.is_empty(), format!("{args:?} failed"))?;
        ensure(a.stdout == b.stdout, format!("{args:?} is not byte-stable"))?;
    }
    Ok(format!("verify all exit 0 in {elapsed:.2?}; CSV/JSON byte-stable"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("1 oracle equivalence", c1_oracle_equivalence),
        ("2 Pascal specialization", c2_pascal_specialization),
        ("3 shape properties", c3_shape),
        ("4 basis expansion", c4_expansion),
        ("5 dual recurrence", c5_dual_recurrence),
        ("6 Fibonacci reproduction", c6_fibonacci),
        ("7 q=2 family, two paths", c7_q2_family),
        ("8 recurrence adjudication", c8_recurrence),
        ("9 subspace and flag counts", c9_remark2),
        ("10 q=1 series", c10_series),
        ("11 convention bridge", c11_bridge),
        ("12 end-to-end CLI", c12_cli),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  criterion {name}: {detail}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
