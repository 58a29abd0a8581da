//! Laurent polynomials in q: parsing, arithmetic, exact evaluation.
//!
//! cargo run -p qgauss --example exact_arithmetic

use qgauss::arith::{render_rational, ExactRational};
use qgauss::LaurentPoly;

fn main() -> qgauss::Result<()> {
    let a: LaurentPoly = "q^-1 + 1".parse()?;
    let b: LaurentPoly = "1 + 2*q + q^2".parse()?;

    println!("a         = {a}");
    println!("b         = {b}");
    println!("a + b     = {}", &a + &b);
    println!("a * b     = {}", &a * &b);
    println!("b / (1+q) = {}", b.div_exact(&"1 + q".parse()?)?);
    println!("q^3 * a   = {}", a.shift(3));

    for q0 in [ExactRational::from_integer(2.into()), ExactRational::new(1.into(), 3.into())] {
        println!("a at q = {:<4} -> {}", render_rational(&q0), render_rational(&a.eval(&q0)?));
    }
    match a.eval(&ExactRational::from_integer(0.into())) {
        Ok(v) => println!("unexpected value {v}"),
        Err(e) => println!("a at q = 0    -> error: {e}"),
    }
    Ok(())
}
