//! Representations `V(f)_n` of the wreath-product tower realizing `Y^r`,
//! their critical groups, closed forms and ones-counts.

mod conjecture;
mod ones;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

pub use conjecture::{check_conjecture_56, n_minus_two_closed_form, ConjectureReport};
pub use ones::{ones_count, unitriangular_submatrix, OnesReport, Prediction, Unitriangular};

use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, AbelianGroup, IntMatrix, JsonInt};
use crate::posets::{alpha_values, delta_p, m0, path_count, poly_operator_matrix, rank_basis, WordPolynomial};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `V(f)_n` together with the matrix of `[V(f)_n]·(−)` on `R(G_n)`.
#[derive(Clone, Debug)]
pub struct TowerRep {
    pub r: usize,
    pub n: usize,
    pub f: WordPolynomial,
    pub dimension: BigInt,
    pub operator: IntMatrix,
}

impl TowerRep {
    /// `C̃ = dim·I − f(U,D)_n`.
    pub fn ctilde(&self) -> IntMatrix {
        self.operator
            .shifted_negation(&self.dimension)
            .expect("operator is square")
    }
}

/// Assembles `V(f)_n`, checking its dimension against the path counts of the
/// image of the trivial representation.
pub fn tower_rep(f: &WordPolynomial, n: usize) -> Result<TowerRep> {
    if f.is_zero() {
        return Err(Error::Invalid("f must be a nonzero sum of words".into()));
    }
    if !f.is_nonnegative() {
        return Err(Error::Invalid(format!("f = {f} has a negative coefficient")));
    }
    let r = f.r();
    let operator = poly_operator_matrix(f, n);
    let dimension = alpha_values(f, n).pop().expect("n + 1 values");
    let basis = rank_basis(r, n);
    let triv = basis.trivial_index();
    let from_paths: BigInt = basis
        .elements()
        .iter()
        .enumerate()
        .map(|(i, x)| &operator[(i, triv)] * path_count(x))
        .sum();
    if from_paths != dimension {
        return Err(Error::Internal(format!(
            "dimension {dimension} disagrees with path count {from_paths}"
        )));
    }
    Ok(TowerRep {
        r,
        n,
        f: f.clone(),
        dimension,
        operator,
    })
}

/// `K(V(f)_n)`: the torsion of `coker(α_n·I − f(U,D)_n)`.
pub fn tower_critical_group(f: &WordPolynomial, n: usize) -> Result<AbelianGroup> {
    let rep = tower_rep(f, n)?;
    let snf = smith_normal_form(&rep.ctilde());
    if snf.zeros_count() != 1 {
        return Err(Error::Internal(format!(
            "C̃ has {} zero invariant factors, expected exactly 1",
            snf.zeros_count()
        )));
    }
    Ok(snf.cokernel().torsion())
}

/// Closed form for `K(V(UD)_n)`: factors `q_i = r^{n−m₀(i)+1}·n!/(m₀(i)−1)!`
/// for `i = 2, …, p_n`, where `q_i = 1` when no `m ≤ n` has `Δp_m ≥ i`.
pub fn gen_perm_rep_critical_group(r: usize, n: usize) -> AbelianGroup {
    let p_n = crate::posets::rank_size(r, n as i64) as i64;
    let rb = BigInt::from(r);
    let mut q = Vec::new();
    for i in 2..=p_n {
        match m0(r, i, n) {
            Some(m) if m >= 1 => {
                let num = factorial(n) / factorial(m - 1);
                q.push(rb.pow((n - m + 1) as u32) * num);
            }
            _ => {}
        }
    }
    AbelianGroup::from_cyclic_orders(&q)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureBounds {
    pub order: JsonInt,
    /// Pairs `(α_n − α_i, Δp_{n−i} − 1)` with positive exponent.
    pub subgroups: Vec<(JsonInt, usize)>,
}

/// Order formula `(1/(rⁿ n!)) ∏_{i<n} (α_n − α_i)^{Δp_{n−i}}` and the
/// guaranteed subgroups `(Z/(α_n − α_i))^{Δp_{n−i} − 1}` for `0 ≤ i < n`.
pub fn structure_bounds(f: &WordPolynomial, n: usize) -> Result<StructureBounds> {
    if f.is_zero() {
        return Err(Error::Invalid("f must be a nonzero sum of words".into()));
    }
    let r = f.r();
    let alpha = alpha_values(f, n);
    let top = &alpha[n];
    let mut prod = BigInt::one();
    let mut subgroups = Vec::new();
    for (i, a) in alpha.iter().enumerate().take(n) {
        let mult = delta_p(r, (n - i) as i64);
        let diff = top - a;
        if mult > 0 {
            prod *= diff.pow(mult as u32);
        }
        if mult > 1 {
            subgroups.push((JsonInt(diff), (mult - 1) as usize));
        }
    }
    let denom = BigInt::from(r).pow(n as u32) * factorial(n);
    if !(&prod % &denom).is_zero() || prod.is_negative() {
        return Err(Error::Internal(format!("order product {prod} is not divisible by {denom}")));
    }
    Ok(StructureBounds {
        order: JsonInt(prod / denom),
        subgroups,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{minors_gcd, snf_from_eigenvalues};
    use crate::posets::UDWord;

    fn word(r: usize, s: &str) -> WordPolynomial {
        WordPolynomial::from_word(&s.parse::<UDWord>().unwrap(), r).unwrap()
    }

    fn factors(g: &AbelianGroup) -> Vec<i64> {
        g.factors_i64().unwrap()
    }

    #[test]
    fn tower_dimensions() {
        assert_eq!(tower_rep(&word(1, "UD"), 4).unwrap().dimension, BigInt::from(4));
        for r in 1..=3 {
            let rep = tower_rep(&word(r, "UD"), 1).unwrap();
            assert_eq!(rep.dimension, BigInt::from(r));
        }
        // r^k n!/(n−k)!
        let rep = tower_rep(&word(2, "UUDD"), 4).unwrap();
        assert_eq!(rep.dimension, BigInt::from(4 * 12));
        assert!(tower_rep(&WordPolynomial::new(1, vec![]), 3).is_err());
    }

    #[test]
    fn small_critical_groups() {
        assert_eq!(factors(&tower_critical_group(&word(1, "UD"), 4).unwrap()), vec![4]);
        assert_eq!(factors(&tower_critical_group(&word(1, "UD"), 5).unwrap()), vec![20]);
        assert_eq!(factors(&tower_critical_group(&word(2, "UD"), 2).unwrap()), vec![4, 4]);
    }

    #[test]
    fn brute_force_oracle_for_ud5() {
        // determinantal divisors of 5I − UD_5 give the invariant factors
        let c = tower_rep(&word(1, "UD"), 5).unwrap().ctilde();
        let d6 = minors_gcd(&c, 6).unwrap();
        let d5 = minors_gcd(&c, 5).unwrap();
        assert_eq!(d6 / d5, BigInt::from(20));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(factors(&gen_perm_rep_critical_group(1, 4)), vec![4]);
        assert_eq!(factors(&gen_perm_rep_critical_group(1, 5)), vec![20]);
        assert_eq!(factors(&gen_perm_rep_critical_group(2, 2)), vec![4, 4]);
        assert!(gen_perm_rep_critical_group(1, 1).is_trivial());
    }

    #[test]
    fn closed_form_agrees_with_snf() {
        for (r, nmax) in [(1, 6), (2, 4), (3, 3)] {
            for n in 1..=nmax {
                assert_eq!(
                    tower_critical_group(&word(r, "UD"), n).unwrap(),
                    gen_perm_rep_critical_group(r, n),
                    "r={r} n={n}"
                );
            }
        }
    }

    #[test]
    fn structure_bound_examples() {
        let b = structure_bounds(&word(1, "UD"), 4).unwrap();
        assert_eq!(b.order.0, BigInt::from(4));
        assert_eq!(b.subgroups, vec![(JsonInt(BigInt::from(4)), 1)]);
        assert_eq!(structure_bounds(&word(1, "UD"), 1).unwrap().order.0, BigInt::one());
        let u2d2 = structure_bounds(&word(1, "UUDD"), 5).unwrap();
        assert_eq!(u2d2.order.0, BigInt::from(336_000));
        let u3d3 = structure_bounds(&word(1, "UUUDDD"), 5).unwrap();
        assert_eq!(u3d3.order.0, BigInt::from(349_920_000u64));
        for s in ["UUDD", "UUUDDD", "UDUD"] {
            let f = word(1, s);
            let g = tower_critical_group(&f, 5).unwrap();
            let b = structure_bounds(&f, 5).unwrap();
            assert_eq!(g.order().unwrap(), b.order.0, "{s}");
            for (d, k) in &b.subgroups {
                assert!(g.contains_power_of_cyclic(&d.0, *k));
            }
        }
    }

    #[test]
    fn snf_matches_planted_spectrum() {
        // only UD is covered: UDUD at r = 2, n = 3 already has a different SNF
        for (r, n) in [(1, 5), (1, 7), (2, 3), (2, 5), (3, 4)] {
            let f = word(r, "UD");
            let rep = tower_rep(&f, n).unwrap();
            let alpha = alpha_values(&f, n);
            let spec: Vec<(BigInt, usize)> = (0..=n)
                .filter(|&i| delta_p(r, (n - i) as i64) > 0)
                .map(|i| (&alpha[n] - &alpha[i], delta_p(r, (n - i) as i64) as usize))
                .collect();
            let want = snf_from_eigenvalues(&spec).unwrap();
            assert_eq!(smith_normal_form(&rep.ctilde()).diagonal, want, "r={r} n={n}");
        }
    }
}
