//! Truncated generating series of the family and the q = 1 comparison with
//! x / (1 - x - x^2).
//!
//! cargo run -p qgauss --example generating_series

use qgauss::family::{q1_series_check, series_truncate, Convention};

fn main() -> qgauss::Result<()> {
    for level in 0..=2 {
        let s = series_truncate(level, 6, Convention::Shifted);
        let terms: Vec<String> = s
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| format!("({c}) x^{m}"))
            .collect();
        println!("F(q^{level}; x) = {} + O(x^7)", terms.join(" + "));
    }
    println!("\n{}", q1_series_check(30)?.to_json());
    Ok(())
}
