//! The q-Gauss Pascal triangle, symbolically and at q = 1 and q = 2, with its
//! diagonal sums.
//!
//! cargo run -p qgauss --example gaussian_triangle

use qgauss::qcomb::{build_triangle, qbinom_product, qbinom_rec};

fn main() -> qgauss::Result<()> {
    let rows = 6;
    let triangle = build_triangle(rows);

    println!("symbolic rows:");
    for (n, row) in triangle.rows().iter().enumerate().take(5) {
        let row: Vec<String> = row.iter().map(|e| format!("[{e}]")).collect();
        println!("  n={n}: {}", row.join("  "));
    }

    for q in [1u64, 2] {
        println!("\nq = {q}:");
        for row in triangle.eval(&q.into()) {
            let row: Vec<String> = row.iter().map(ToString::to_string).collect();
            println!("  {}", row.join(" "));
        }
        let sums: Vec<String> = triangle
            .diagonal_sums()
            .iter()
            .map(|s| s.eval_int(&q.into()).map(|v| v.to_string()))
            .collect::<qgauss::Result<_>>()?;
        println!("  diagonal sums: {}", sums.join(", "));
    }

    // The recurrence and the falling-factorial quotient are independent routes.
    let (n, k) = (9, 4);
    assert_eq!(qbinom_rec(n, k), qbinom_product(n, k)?);
    println!("\n[{n} choose {k}]_q = {}", qbinom_rec(n, k));
    Ok(())
}
