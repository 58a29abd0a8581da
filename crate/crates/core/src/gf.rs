//! Brute-force subspace and flag counting over small prime fields.
//!
//! Subspaces of `GF(p)^n` are enumerated through their unique reduced
//! row-echelon bases, so the counts are independent of any q-analog formula
//! and serve as an oracle for Gaussian binomials and q-factorials.

use std::collections::BTreeSet;

use crate::arith::{ArbInt, ExactRational};
use crate::error::{Error, Result};
use crate::qcomb::{q_factorial, qbinom_rec};
use crate::report::VerificationReport;

/// Largest ambient dimension for subspace enumeration.
pub const MAX_SUBSPACE_DIM: usize = 4;
/// Largest ambient dimension for flag enumeration.
pub const MAX_CHAIN_DIM: usize = 3;
/// Largest field size accepted by the enumerators.
pub const MAX_PRIME: u64 = 3;

/// The field of integers modulo a prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
        if prime {
            Ok(Self { p })
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn order(self) -> u64 {
        self.p
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        (a * b) % self.p
    }
}

/// Row-major `k x n` matrix over `GF(p)`.
pub type Matrix = Vec<Vec<u64>>;

/// Canonical key of a subspace: the sorted set of its vectors, each encoded
/// in base `p`.
pub type Subspace = BTreeSet<u64>;

fn encode(v: &[u64], p: u64) -> u64 {
    v.iter().fold(0, |acc, &x| acc * p + x)
}

/// All vectors spanned by `rows`.
pub fn row_space(rows: &[Vec<u64>], n: usize, field: PrimeField) -> Subspace {
    let p = field.order();
    let k = rows.len();
    let mut out = BTreeSet::new();
    let mut scalars = vec![0u64; k];
    loop {
        let mut v = vec![0u64; n];
        for (row, &s) in rows.iter().zip(&scalars) {
            for (slot, &x) in v.iter_mut().zip(row) {
                *slot = field.add(*slot, field.mul(s, x));
            }
        }
        out.insert(encode(&v, p));
        // odometer increment
        let mut i = 0;
        while i < k {
            scalars[i] += 1;
            if scalars[i] < p {
                break;
            }
            scalars[i] = 0;
            i += 1;
        }
        if i == k {
            return out;
        }
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for c in start..n {
            cur.push(c);
            go(c + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

fn check_bounds(n: usize, k: usize, cap: usize, field: PrimeField) -> Result<()> {
    if k > n {
        return Err(Error::Domain(format!("subspace dimension {k} exceeds ambient dimension {n}")));
    }
    if n > cap {
        return Err(Error::Domain(format!("dimension {n} exceeds the enumeration cap {cap}")));
    }
    if field.order() > MAX_PRIME {
        return Err(Error::Domain(format!(
            "field size {} exceeds the enumeration cap {MAX_PRIME}",
            field.order()
        )));
    }
    Ok(())
}

/// Every `k x n` matrix in reduced row-echelon form with `k` pivots.
pub fn enumerate_rref(n: usize, k: usize, field: PrimeField) -> Result<Vec<Matrix>> {
    check_bounds(n, k, MAX_SUBSPACE_DIM, field)?;
    let p = field.order();
    let mut out = Vec::new();
    for pivots in combinations(n, k) {
        // Free slots: right of the row's pivot, outside every pivot column.
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| {
                let pivots = &pivots;
                (pc + 1..n).filter(move |c| !pivots.contains(c)).map(move |c| (r, c))
            })
            .collect();
        let mut template = vec![vec![0u64; n]; k];
        for (r, &pc) in pivots.iter().enumerate() {
            template[r][pc] = 1;
        }
        let total = p.pow(free.len() as u32);
        for mut idx in 0..total {
            let mut m = template.clone();
            for &(r, c) in &free {
                m[r][c] = idx % p;
                idx /= p;
            }
            out.push(m);
        }
    }
    Ok(out)
}

/// Number of `k`-dimensional subspaces of `GF(p)^n`.
pub fn count_subspaces(n: usize, k: usize, p: u64) -> Result<ArbInt> {
    let field = PrimeField::new(p)?;
    Ok(ArbInt::from(enumerate_rref(n, k, field)?.len()))
}

/// Every `k`-dimensional subspace of `GF(p)^n`, as vector sets.
pub fn subspaces(n: usize, k: usize, field: PrimeField) -> Result<Vec<Subspace>> {
    Ok(enumerate_rref(n, k, field)?
        .iter()
        .map(|m| row_space(m, n, field))
        .collect())
}

/// Number of complete flags `0 = V_0 < V_1 < ... < V_n = GF(p)^n`.
pub fn count_maximal_chains(n: usize, p: u64) -> Result<ArbInt> {
    let field = PrimeField::new(p)?;
    check_bounds(n, 0, MAX_CHAIN_DIM, field)?;
    let levels: Vec<Vec<Subspace>> = (0..=n)
        .map(|d| subspaces(n, d, field))
        .collect::<Result<_>>()?;

    fn extend(current: &Subspace, dim: usize, levels: &[Vec<Subspace>]) -> u64 {
        if dim + 1 == levels.len() {
            return 1;
        }
        levels[dim + 1]
            .iter()
            .filter(|w| current.is_subset(w))
            .map(|w| extend(w, dim + 1, levels))
            .sum()
    }
    Ok(ArbInt::from(extend(&levels[0][0], 0, &levels)))
}

/// Checks the subspace and flag counts against `[n choose k]_p` and `n_p!`
/// for every `k <= n <= n_max` and each prime.
pub fn verify_remark2(n_max: usize, primes: &[u64]) -> Result<VerificationReport> {
    if n_max > MAX_SUBSPACE_DIM {
        return Err(Error::Domain(format!(
            "n_max {n_max} exceeds the enumeration cap {MAX_SUBSPACE_DIM}"
        )));
    }
    let mut report = VerificationReport::new("gf");
    for &p in primes {
        let field = PrimeField::new(p)?;
        let q0 = ExactRational::from_integer(p.into());
        for n in 0..=n_max {
            for k in 0..=n {
                let counted = count_subspaces(n, k, field.order())?;
                let formula = qbinom_rec(n, k as i64).eval(&q0)?.to_integer();
                report.check(
                    &[("n", n as i64), ("k", k as i64), ("p", p as i64)],
                    &counted,
                    &formula,
                );
            }
        }
        for n in 0..=n_max.min(MAX_CHAIN_DIM) {
            let counted = count_maximal_chains(n, p)?;
            let formula = q_factorial(n).eval(&q0)?.to_integer();
            report.check(&[("flag_dim", n as i64), ("p", p as i64)], &counted, &formula);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ArbInt {
        v.into()
    }

    #[test]
    fn primality() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(3).is_ok());
        assert!(PrimeField::new(7).is_ok());
        for bad in [0, 1, 4, 9] {
            assert_eq!(PrimeField::new(bad), Err(Error::NotPrime(bad)));
        }
    }

    #[test]
    fn subspace_counts() {
        for p in [2, 3] {
            for n in 0..=4 {
                assert_eq!(count_subspaces(n, 0, p).unwrap(), int(1));
                assert_eq!(count_subspaces(n, n, p).unwrap(), int(1));
            }
        }
        assert_eq!(count_subspaces(2, 1, 2).unwrap(), int(3));
        assert_eq!(count_subspaces(4, 2, 2).unwrap(), int(35));
        assert_eq!(count_subspaces(2, 1, 4), Err(Error::NotPrime(4)));
        assert!(matches!(count_subspaces(2, 3, 2), Err(Error::Domain(_))));
        assert!(matches!(count_subspaces(5, 1, 2), Err(Error::Domain(_))));
        assert!(matches!(count_subspaces(2, 1, 5), Err(Error::Domain(_))));
    }

    #[test]
    fn lines_of_the_plane_are_spanned_by_nonzero_vectors() {
        // Over GF(2) the three nonzero vectors each span their own line.
        let field = PrimeField::new(2).unwrap();
        let lines: BTreeSet<Subspace> = [[0, 1], [1, 0], [1, 1]]
            .iter()
            .map(|v| row_space(&[v.to_vec()], 2, field))
            .collect();
        let enumerated: BTreeSet<Subspace> = subspaces(2, 1, field).unwrap().into_iter().collect();
        assert_eq!(lines, enumerated);
    }

    #[test]
    fn rref_representatives_are_distinct() {
        for p in [2, 3] {
            let field = PrimeField::new(p).unwrap();
            for n in 0..=3 {
                for k in 0..=n {
                    let spaces = subspaces(n, k, field).unwrap();
                    let distinct: BTreeSet<_> = spaces.iter().cloned().collect();
                    assert_eq!(distinct.len(), spaces.len(), "n={n} k={k} p={p}");
                    let size = p.pow(k as u32) as usize;
                    assert!(spaces.iter().all(|s| s.len() == size));
                }
            }
        }
    }

    #[test]
    fn duality() {
        for p in [2, 3] {
            for n in 0..=4 {
                for k in 0..=n {
                    assert_eq!(count_subspaces(n, k, p).unwrap(), count_subspaces(n, n - k, p).unwrap());
                }
            }
        }
    }

    #[test]
    fn flag_counts() {
        for p in [2, 3] {
            assert_eq!(count_maximal_chains(0, p).unwrap(), int(1));
            assert_eq!(count_maximal_chains(1, p).unwrap(), int(1));
        }
        assert_eq!(count_maximal_chains(2, 2).unwrap(), int(3));
        assert_eq!(count_maximal_chains(3, 2).unwrap(), int(21));
        assert!(matches!(count_maximal_chains(4, 2), Err(Error::Domain(_))));
        // product over i of the number of lines in an i-dimensional space
        for p in [2u64, 3] {
            for n in 0..=3 {
                let lines: ArbInt = (1..=n).map(|i| count_subspaces(i, 1, p).unwrap()).product();
                assert_eq!(count_maximal_chains(n, p).unwrap(), lines);
                let closed: u64 = (1..=n as u32).map(|i| (p.pow(i) - 1) / (p - 1)).product();
                assert_eq!(lines, ArbInt::from(closed));
            }
        }
    }

    #[test]
    fn remark_sweep() {
        assert!(verify_remark2(2, &[2]).unwrap().holds);
        let full = verify_remark2(4, &[2, 3]).unwrap();
        assert!(full.holds);
        assert_eq!(full.checked, 2 * (15 + 4));
        assert!(verify_remark2(5, &[2]).is_err());
        assert!(verify_remark2(2, &[6]).is_err());
    }
}
