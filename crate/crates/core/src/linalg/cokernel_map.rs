use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::abelian::AbelianGroup;
use super::matrix::IntMatrix;
use super::ops::{cokernel, integer_kernel, solve_integer};
use super::smith::{divides, smith_normal_form};
use crate::error::{Error, Result};

/// Homomorphism `coker(M) → coker(N)` induced by an ambient map `F`,
/// written in the Smith generators of both sides (unit summands dropped).
#[derive(Clone, Debug)]
pub struct CokernelMap {
    pub source: AbelianGroup,
    pub target: AbelianGroup,
    /// Entry `(j, i)` is the `j`-th target coordinate of the image of the
    /// `i`-th source generator, reduced modulo target factor `j`.
    pub matrix: IntMatrix,
    pub surjective: bool,
    pub injective: bool,
    /// The ambient map it was induced from.
    pub ambient: IntMatrix,
}

impl CokernelMap {
    pub fn is_isomorphism(&self) -> bool {
        self.surjective && self.injective
    }

    /// True when source and target agree and the map is the identity on
    /// Smith generators.
    pub fn is_identity(&self) -> bool {
        if self.source != self.target {
            return false;
        }
        let f = self.target.invariant_factors();
        (0..self.matrix.rows()).all(|j| {
            (0..self.matrix.cols()).all(|i| {
                let want = if i == j { BigInt::one() } else { BigInt::zero() };
                let diff = &self.matrix[(j, i)] - want;
                divides(&f[j], &diff)
            })
        })
    }
}

/// Map `coker(M) → coker(N)` induced by `F`, where `F·im(M) ⊆ im(N)`.
///
/// `M` is `m × a`, `N` is `n × b` and `F` is `n × m`. Fails with
/// [`Error::NonCommuting`] when no integer `X` satisfies `F·M = N·X`.
pub fn induced_cokernel_map(f: &IntMatrix, m: &IntMatrix, n: &IntMatrix) -> Result<CokernelMap> {
    if f.cols() != m.rows() || f.rows() != n.rows() {
        return Err(Error::Dimension(format!(
            "F is {}x{}, M has {} rows, N has {} rows",
            f.rows(),
            f.cols(),
            m.rows(),
            n.rows()
        )));
    }
    let fm = f.mul(m)?;
    if solve_integer(n, &fm)?.is_none() {
        return Err(Error::NonCommuting(
            "F·im(M) is not contained in im(N)".into(),
        ));
    }

    let snf_m = smith_normal_form(m);
    let snf_n = smith_normal_form(n);
    let src = snf_m.cokernel_factors();
    let tgt = snf_n.cokernel_factors();
    let full = snf_n.p.mul(f)?.mul(snf_m.p_inverse())?;

    let src_idx: Vec<usize> = (0..src.len()).filter(|&i| !src[i].is_one()).collect();
    let tgt_idx: Vec<usize> = (0..tgt.len()).filter(|&j| !tgt[j].is_one()).collect();
    let mut matrix = full.submatrix(&tgt_idx, &src_idx);
    for (a, &j) in tgt_idx.iter().enumerate() {
        for (b, &i) in src_idx.iter().enumerate() {
            let e = &mut matrix[(a, b)];
            if !tgt[j].is_zero() {
                *e = e.mod_floor(&tgt[j]);
            }
            let order_image = &src[i] * &*e;
            if !divides(&tgt[j], &order_image) {
                return Err(Error::Internal(format!(
                    "induced map not well defined at generator {i} -> {j}"
                )));
            }
        }
    }

    let stacked = f.hstack(n)?;
    let surjective = cokernel(&stacked).is_trivial();

    // {v : F·v ∈ im(N)} is the projection of ker [F | N]
    let ker = integer_kernel(&stacked);
    let v_rows: Vec<usize> = (0..f.cols()).collect();
    let preimage = ker.select_rows(&v_rows);
    let injective = solve_integer(m, &preimage)?.is_some();

    Ok(CokernelMap {
        source: AbelianGroup::from_chain(&src),
        target: AbelianGroup::from_chain(&tgt),
        matrix,
        surjective,
        injective,
        ambient: f.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_square() {
        let id = IntMatrix::identity(3);
        let map = induced_cokernel_map(&id, &id, &id).unwrap();
        assert!(map.surjective && map.injective);
        assert!(map.source.is_trivial());
        assert!(map.is_identity());
    }

    #[test]
    fn identity_on_nontrivial_cokernel() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![0, 6]]);
        let map = induced_cokernel_map(&IntMatrix::identity(2), &m, &m).unwrap();
        assert!(map.is_identity());
        assert!(map.is_isomorphism());
    }

    #[test]
    fn reduction_mod_two() {
        // Z/4 -> Z/2, the natural surjection
        let m = IntMatrix::from_rows(&[vec![4]]);
        let n = IntMatrix::from_rows(&[vec![2]]);
        let map = induced_cokernel_map(&IntMatrix::identity(1), &m, &n).unwrap();
        assert!(map.surjective);
        assert!(!map.injective);
        // multiplication by 2: Z/2 -> Z/4 is injective, not surjective
        let map = induced_cokernel_map(&IntMatrix::from_rows(&[vec![2]]), &n, &m).unwrap();
        assert!(map.injective && !map.surjective);
        assert_eq!(map.matrix, IntMatrix::from_rows(&[vec![2]]));
    }

    #[test]
    fn rejects_noncommuting() {
        let m = IntMatrix::from_rows(&[vec![2]]);
        let n = IntMatrix::from_rows(&[vec![4]]);
        let err = induced_cokernel_map(&IntMatrix::identity(1), &m, &n).unwrap_err();
        assert!(matches!(err, Error::NonCommuting(_)));
    }
}
