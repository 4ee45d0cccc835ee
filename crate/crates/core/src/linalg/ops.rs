use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::abelian::AbelianGroup;
use super::matrix::IntMatrix;
use super::smith::smith_normal_form;
use crate::error::{Error, Result};

/// `Z^rows / M·Z^cols` in invariant-factor form.
pub fn cokernel(m: &IntMatrix) -> AbelianGroup {
    smith_normal_form(m).cokernel()
}

/// gcd of all `k × k` minors (0 when they all vanish).
///
/// Brute-force enumeration; only meant for small matrices.
pub fn minors_gcd(m: &IntMatrix, k: usize) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::Invalid("minor size must be positive".into()));
    }
    if k > m.rows().min(m.cols()) {
        return Err(Error::Invalid(format!(
            "no {k}x{k} minors in a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let row_sets = subsets(m.rows(), k);
    let col_sets = subsets(m.cols(), k);
    let mut g = BigInt::zero();
    for rs in &row_sets {
        for cs in &col_sets {
            let d = m.submatrix(rs, cs).determinant()?;
            g = g.gcd(&d);
            if g.is_one() {
                return Ok(g);
            }
        }
    }
    Ok(g)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Smith diagonal of a semisimple integer matrix whose `M + tI` has a Smith
/// form over `Z[t]`, read off from its spectrum:
/// `s_{n+1-i} = ∏_{k : m(k) ≥ i} k`. Returned in chain order, nonnegative.
pub fn snf_from_eigenvalues(spectrum: &[(BigInt, usize)]) -> Result<Vec<BigInt>> {
    let mut mult: BTreeMap<BigInt, usize> = BTreeMap::new();
    for (ev, m) in spectrum {
        if *m == 0 {
            return Err(Error::Invalid(format!("eigenvalue {ev} has zero multiplicity")));
        }
        *mult.entry(ev.clone()).or_default() += m;
    }
    let n: usize = mult.values().sum();
    if n == 0 {
        return Err(Error::Invalid("empty spectrum".into()));
    }
    let mut s = vec![BigInt::one(); n];
    let max_mult = mult.values().copied().max().unwrap_or(0);
    for i in 1..=max_mult {
        let prod = mult
            .iter()
            .filter(|(_, &m)| m >= i)
            .fold(BigInt::one(), |acc, (k, _)| acc * k);
        s[n - i] = prod.abs();
    }
    Ok(s)
}

/// Some integer `X` with `A·X = B`, or `None` if no integer solution exists.
pub fn solve_integer(a: &IntMatrix, b: &IntMatrix) -> Result<Option<IntMatrix>> {
    if a.rows() != b.rows() {
        return Err(Error::Dimension(format!(
            "A has {} rows but B has {}",
            a.rows(),
            b.rows()
        )));
    }
    let snf = smith_normal_form(a);
    // D·Y = P·B with X = Q·Y
    let pb = snf.p.mul(b)?;
    let mut y = IntMatrix::zeros(a.cols(), b.cols());
    for i in 0..a.rows() {
        let d = snf.diagonal.get(i).cloned().unwrap_or_default();
        for j in 0..b.cols() {
            let v = &pb[(i, j)];
            if d.is_zero() {
                if !v.is_zero() {
                    return Ok(None);
                }
            } else {
                let (q, r) = v.div_rem(&d);
                if !r.is_zero() {
                    return Ok(None);
                }
                y[(i, j)] = q;
            }
        }
    }
    Ok(Some(snf.q.mul(&y)?))
}

/// Whether the column lattices of `a` and `b` (same row count) coincide.
pub fn same_column_lattice(a: &IntMatrix, b: &IntMatrix) -> Result<bool> {
    Ok(solve_integer(a, b)?.is_some() && solve_integer(b, a)?.is_some())
}

/// Integer basis (as columns) of `{x : M·x = 0}`.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let snf = smith_normal_form(m);
    let rank = snf.rank();
    let cols: Vec<usize> = (rank..m.cols()).collect();
    snf.q.select_columns(&cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn minors_gcd_examples() {
        let d = IntMatrix::from_diagonal(&[4, 6]);
        assert_eq!(minors_gcd(&d, 1).unwrap(), BigInt::from(2));
        assert_eq!(minors_gcd(&d, 2).unwrap(), BigInt::from(24));
        assert_eq!(minors_gcd(&IntMatrix::identity(3), 2).unwrap(), BigInt::one());
        assert!(minors_gcd(&d, 0).is_err());
        assert!(minors_gcd(&d, 3).is_err());
        assert!(minors_gcd(&IntMatrix::zeros(2, 2), 1).unwrap().is_zero());
    }

    #[test]
    fn eigenvalue_formula() {
        let spec = [(0, 1), (2, 1), (3, 1), (4, 2)].map(|(e, m)| (BigInt::from(e), m));
        assert_eq!(snf_from_eigenvalues(&spec).unwrap(), ints(&[1, 1, 1, 4, 0]));
        let zeros = [(BigInt::zero(), 3)];
        assert_eq!(snf_from_eigenvalues(&zeros).unwrap(), ints(&[0, 0, 0]));
        let twos = [(BigInt::from(2), 3)];
        assert_eq!(snf_from_eigenvalues(&twos).unwrap(), ints(&[2, 2, 2]));
        assert!(snf_from_eigenvalues(&[]).is_err());
    }

    #[test]
    fn solve_examples() {
        let b = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(solve_integer(&IntMatrix::identity(2), &b).unwrap(), Some(b.clone()));
        let two = IntMatrix::from_diagonal(&[2, 2]);
        assert_eq!(solve_integer(&two, &IntMatrix::identity(2)).unwrap(), None);
        let x = solve_integer(&IntMatrix::from_rows(&[vec![2]]), &IntMatrix::from_rows(&[vec![6]]))
            .unwrap()
            .unwrap();
        assert_eq!(x, IntMatrix::from_rows(&[vec![3]]));
    }

    #[test]
    fn solve_with_rank_deficiency() {
        let a = IntMatrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        let ok = IntMatrix::from_rows(&[vec![3], vec![6]]);
        let x = solve_integer(&a, &ok).unwrap().unwrap();
        assert_eq!(a.mul(&x).unwrap(), ok);
        let bad = IntMatrix::from_rows(&[vec![3], vec![5]]);
        assert!(solve_integer(&a, &bad).unwrap().is_none());
    }

    #[test]
    fn kernel_basis() {
        let m = IntMatrix::from_rows(&[vec![1, 1, 1]]);
        let k = integer_kernel(&m);
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).unwrap().is_zero());
    }
}
