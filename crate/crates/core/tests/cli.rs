use std::process::{Command, Output};

use serde_json::Value;

fn qgauss(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qgauss"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qgauss(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    serde_json::from_str(&stdout(args)).unwrap()
}

#[test]
fn qbinom() {
    assert_eq!(stdout(&["qbinom", "4", "2"]), "1 + q + 2*q^2 + q^3 + q^4\n");
    assert_eq!(stdout(&["qbinom", "4", "2", "--q", "1"]), "6\n");
    assert_eq!(stdout(&["qbinom", "4", "2", "--q", "2"]), "35\n");
    let v = json(&["qbinom", "4", "2", "--format", "json"]);
    assert_eq!(v["q"], "symbolic");
    assert_eq!(v["value"], "1 + q + 2*q^2 + q^3 + q^4");
}

#[test]
fn triangle_diagonal_sums() {
    let v = json(&["triangle", "--rows", "6", "--q", "1", "--diagonal-sums", "--format", "json"]);
    assert_eq!(v["diagonal_sums"], serde_json::json!([1, 1, 2, 3, 5, 8, 13]));
    assert_eq!(v["rows"][4], serde_json::json!([1, 4, 6, 4, 1]));
    let v = json(&["triangle", "--rows", "6", "--q", "2", "--diagonal-sums", "--format", "json"]);
    assert_eq!(v["diagonal_sums"], serde_json::json!([1, 1, 2, 4, 9, 23, 68]));
    assert_eq!(v["q"], 2);
    assert_eq!(stdout(&["triangle", "--rows", "0"]), "1\n");
    assert_eq!(stdout(&["triangle", "--rows", "0", "--format", "csv"]), "1\n");
    let csv = stdout(&["triangle", "--rows", "2", "--q", "2", "--format", "csv", "--diagonal-sums"]);
    assert_eq!(csv, "1\n1,1\n1,3,1\n\nn,diagonal_sum\n0,1\n1,1\n2,2\n");
}

#[test]
fn symbolic_triangle_json_round_trips() {
    let v = json(&["triangle", "--rows", "7", "--format", "json"]);
    for row in v["rows"].as_array().unwrap() {
        for entry in row.as_array().unwrap() {
            let s = entry.as_str().unwrap();
            let p: qgauss::LaurentPoly = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
    }
    assert_eq!(v["rows"][2], serde_json::json!(["1", "1 + q", "1"]));
}

#[test]
fn fib_sequences() {
    assert_eq!(stdout(&["fib", "--count", "10", "--q", "1", "--j", "0"]), "0 1 1 2 3 5 8 13 21 34\n");
    assert_eq!(stdout(&["fib", "--count", "7", "--q", "2", "--j", "0"]), "0 1 1 2 4 9 23\n");
    let v = json(&["fib", "--count", "4", "--j", "1", "--format", "json"]);
    assert_eq!(v["values"], serde_json::json!(["0", "1", "1", "1 + q"]));
    assert_eq!(v["convention"], "shifted");
    assert_eq!(v["j"], 1);
    let csv = stdout(&["fib", "--count", "3", "--q", "2", "--format", "csv"]);
    assert_eq!(csv, "n,value\n0,0\n1,1\n2,1\n");
}

#[test]
fn literal_convention_warns_on_stderr() {
    let out = qgauss(&["fib", "--count", "3", "--j", "1", "--convention", "literal"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("negative powers"));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "n=0: 0\nn=1: q^-1\nn=2: q^-1\n");
}

#[test]
fn series_command() {
    assert_eq!(stdout(&["series", "--l", "0", "--order", "5", "--q", "1"]), "0 1 1 2 3 5\n");
    assert_eq!(stdout(&["series", "--l", "0", "--order", "6", "--q", "2"]), "0 1 1 2 4 9 23\n");
    assert_eq!(stdout(&["series", "--l", "0", "--order", "0"]), "m=0: 0\n");
    let v = json(&["series", "--l", "2", "--order", "3", "--format", "json"]);
    assert_eq!(v["coefficients"].as_array().unwrap().len(), 4);
    assert_eq!(v["l"], 2);
}

#[test]
fn verify_suites() {
    let v = json(&["verify", "qbinom", "--nmax", "30"]);
    assert_eq!(v["holds"], true);
    let v = json(&["verify", "gf", "--nmax", "4"]);
    assert_eq!(v["holds"], true);
    assert_eq!(v["reports"][0]["suite"], "gf");
    let v = json(&["verify", "series", "--order", "30"]);
    assert_eq!(v["holds"], true);
    let v = json(&["verify", "basis"]);
    assert_eq!(v["reports"].as_array().unwrap().len(), 3);
    let v = json(&["verify", "recurrence", "--nmax", "10", "--jmax", "2"]);
    let convs = v["recurrence"]["conventions"].as_array().unwrap();
    assert_eq!(convs[0]["convention"], "shifted");
    assert_eq!(convs[0]["verdict"], "shifted_corrected");
    assert!(convs[1]["verdict"].is_null());
    assert_eq!(convs[0]["variants"].as_array().unwrap().len(), 3);
    let paper = &convs[0]["variants"][0]["report"]["first_counterexample"];
    assert_eq!(paper["lhs"], "1 + q");
    assert_eq!(paper["rhs"], "2");
}

#[test]
fn exit_codes() {
    assert_eq!(qgauss(&["qbinom", "2", "5"]).status.code(), Some(2));
    assert_eq!(qgauss(&["triangle"]).status.code(), Some(2));
    assert_eq!(qgauss(&["fib", "--count", "0"]).status.code(), Some(2));
    assert_eq!(qgauss(&["fib", "--count", "3", "--convention", "other"]).status.code(), Some(2));
    assert_eq!(qgauss(&["verify", "gf", "--nmax", "5"]).status.code(), Some(2));
    assert_eq!(qgauss(&["verify", "gf", "--primes", "4"]).status.code(), Some(2));
    assert_eq!(qgauss(&["verify", "recurrence", "--nmax", "1"]).status.code(), Some(2));
    assert_eq!(qgauss(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qgauss(&["--help"]).status.code(), Some(0));
}
