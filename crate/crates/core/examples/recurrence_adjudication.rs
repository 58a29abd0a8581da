//! Decides which three-term recurrence the family satisfies under each
//! convention, with counterexamples for the ones that fail.
//!
//! cargo run -p qgauss --example recurrence_adjudication

use qgauss::family::adjudicate_recurrence;

fn main() -> qgauss::Result<()> {
    let adj = adjudicate_recurrence(20, 5)?;
    for cv in &adj.conventions {
        println!("convention {}:", cv.convention);
        println!("  printed recurrence at j = 0 holds: {}", cv.paper_at_j0.holds);
        for check in &cv.variants {
            let status = if check.report.holds { "holds" } else { "fails" };
            println!("  {:<18} {status:<6} by level: {:?}", check.variant.as_str(), check.holds_by_j);
            if let Some(cx) = &check.report.first_counterexample {
                println!("      first counterexample {:?}: {}  vs  {}", cx.parameters, cx.lhs, cx.rhs);
            }
        }
        match cv.verdict {
            Some(v) => println!("  verdict: {v}"),
            None => println!("  verdict: none of the candidates"),
        }
    }
    Ok(())
}
