//! The basis phi_k(x) = (x - 1)(x - q)...(x - q^(k-1)) and the expansion of
//! x^n in it, whose coefficients are the Gaussian binomials.
//!
//! cargo run -p qgauss --example gaussian_basis

use qgauss::basis::{check_dual_recurrence, expand_monomial, phi, verify_expansion, verify_expansion_with_boundary};
use qgauss::qcomb::Boundary;

fn main() -> qgauss::Result<()> {
    for k in 0..=3 {
        println!("phi_{k}(x) = {}", phi(k));
    }

    let n = 4;
    println!("\nx^{n} in the phi basis:");
    for (k, c) in expand_monomial(n)?.iter().enumerate() {
        println!("  phi_{k}: {c}");
    }

    println!("\n{}", check_dual_recurrence(12).to_json());
    println!("{}", verify_expansion(12)?.to_json());

    // With the first column zeroed below the apex, x itself no longer expands.
    println!("{}", verify_expansion_with_boundary(4, Boundary::PaperLiteral).to_json());
    Ok(())
}
