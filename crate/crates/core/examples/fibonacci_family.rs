//! The Fibonacci q-Gauss family under both weight conventions.
//!
//! cargo run -p qgauss --example fibonacci_family

use qgauss::family::{family_table, fib_q_eval, Convention};
use qgauss::arith::render_rational;

fn main() -> qgauss::Result<()> {
    let shifted = family_table(8, 2, Convention::Shifted);
    let literal = family_table(8, 2, Convention::Literal);

    for j in 0..=2 {
        println!("level j = {j}");
        for n in 0..=6 {
            println!(
                "  F_{n}: shifted {:<28} literal {}",
                shifted.entry(n, j).to_string(),
                literal.entry(n, j)
            );
        }
    }

    for (q, conv) in [(1, Convention::Shifted), (2, Convention::Shifted), (2, Convention::Literal)] {
        let values: Vec<String> = (0..12)
            .map(|n| fib_q_eval(n, 1, q, conv).map(|v| render_rational(&v)))
            .collect::<qgauss::Result<_>>()?;
        println!("\nj = 1, q = {q}, {conv}: {}", values.join(" "));
    }
    Ok(())
}
