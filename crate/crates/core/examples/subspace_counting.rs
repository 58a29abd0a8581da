//! Counts subspaces and complete flags of GF(p)^n by enumeration and compares
//! them with Gaussian binomials and q-factorials evaluated at q = p.
//!
//! cargo run -p qgauss --example subspace_counting

use qgauss::gf::{count_maximal_chains, count_subspaces, enumerate_rref, verify_remark2, PrimeField};
use qgauss::qcomb::{q_factorial, qbinom_rec};

fn main() -> qgauss::Result<()> {
    let field = PrimeField::new(2)?;
    println!("2-dimensional subspaces of GF(2)^3 as RREF bases:");
    for m in enumerate_rref(3, 2, field)? {
        println!("  {m:?}");
    }

    for p in [2u64, 3] {
        println!("\np = {p}");
        for n in 0..=4 {
            let counts: Vec<String> = (0..=n)
                .map(|k| count_subspaces(n, k, p).map(|c| c.to_string()))
                .collect::<qgauss::Result<_>>()?;
            let formula: Vec<String> = (0..=n)
                .map(|k| qbinom_rec(n, k as i64).eval_int(&p.into()).map(|c| c.to_string()))
                .collect::<qgauss::Result<_>>()?;
            println!("  n={n}: enumerated {:<24} formula {}", counts.join(" "), formula.join(" "));
        }
        for n in 0..=3 {
            println!(
                "  flags in GF({p})^{n}: {} (n_q! at q={p}: {})",
                count_maximal_chains(n, p)?,
                q_factorial(n).eval_int(&p.into())?
            );
        }
    }

    println!("\n{}", verify_remark2(4, &[2, 3])?.to_json());
    Ok(())
}
