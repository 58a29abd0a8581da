//! Oracles shared by the integration tests. Nothing here calls into the
//! library's polynomial kernels; values are computed with plain integers.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Integer Pascal triangle, rows `0..=n`.
pub fn pascal(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for r in 1..=n {
        let prev = &rows[r - 1];
        let mut row = vec![BigInt::one(); r + 1];
        for k in 1..r {
            row[k] = &prev[k - 1] + &prev[k];
        }
        rows.push(row);
    }
    rows
}

/// `[n choose k]` at an integer `q >= 1` from the product
/// `prod_{i<k} (q^(n-i) - 1) / (q^(i+1) - 1)`; Pascal's value at `q = 1`.
pub fn gaussian_at(n: usize, k: usize, q: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if q == 1 {
        return pascal(n)[n][k].clone();
    }
    let q = BigInt::from(q);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1u32;
        den *= q.pow((i + 1) as u32) - 1u32;
    }
    assert!((&num % &den).is_zero());
    num / den
}

/// `F_n` with `F_0 = 0`, `F_1 = 1`.
pub fn fibonacci(upto: usize) -> Vec<BigInt> {
    let mut f = vec![BigInt::zero(), BigInt::one()];
    while f.len() <= upto {
        let m = f.len();
        f.push(&f[m - 1] + &f[m - 2]);
    }
    f.truncate(upto + 1);
    f
}

/// `F_n^[q^j]` at integer `q` with weights `q^(j k)`, summed directly.
pub fn family_shifted_at(n: usize, j: usize, q: u64) -> BigInt {
    if n == 0 {
        return BigInt::zero();
    }
    let m = n - 1;
    (0..=m / 2)
        .map(|k| gaussian_at(m - k, k, q) * BigInt::from(q).pow((j * k) as u32))
        .sum()
}
