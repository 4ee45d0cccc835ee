use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::{factorial, tower_critical_group};
use crate::error::{Error, Result};
use crate::linalg::{AbelianGroup, JsonInt};
use crate::posets::{partition_counts, rank_size, UDWord, WordPolynomial};

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub r: usize,
    pub n: usize,
    pub k: usize,
    /// The conjectured elementary-divisor list, units included.
    pub predicted_list: Vec<JsonInt>,
    /// Prime-power parts of the non-unit entries of `predicted_list`.
    pub predicted: Vec<JsonInt>,
    /// Prime-power parts of `K(V(U^kD^k)_n)`.
    pub computed: Vec<JsonInt>,
    pub computed_invariant_factors: Vec<JsonInt>,
    #[serde(rename = "match")]
    pub matches: bool,
    /// Exponent of `d` in the conjectured list; negative means the list is
    /// ill-formed and the cell counts as a mismatch.
    pub d_multiplicity: i64,
}

fn json(v: &[BigInt]) -> Vec<JsonInt> {
    v.iter().cloned().map(JsonInt).collect()
}

/// Compares `K(V(U^kD^k)_n)` with the list
/// `1^{p_{n−k}}, d^{p_n − 2p_{n−k} + p_{n−2k}}, d·e_i` where
/// `d = r^k n!/(n−k)!` and `e_i` runs over the invariant factors of
/// `K(V(D^kU^k)_{n−k})`.
pub fn check_conjecture_56(r: usize, n: usize, k: usize) -> Result<ConjectureReport> {
    if r == 0 || k > n {
        return Err(Error::Invalid(format!("need r ≥ 1 and k ≤ n, got r={r} n={n} k={k}")));
    }
    if k == 0 {
        let ones = vec![JsonInt(BigInt::one()); rank_size(r, n as i64) as usize];
        return Ok(ConjectureReport {
            r,
            n,
            k,
            predicted_list: ones,
            predicted: vec![],
            computed: vec![],
            computed_invariant_factors: vec![],
            matches: true,
            d_multiplicity: 0,
        });
    }
    let p = |m: i64| rank_size(r, m) as i64;
    let (ni, ki) = (n as i64, k as i64);
    let d = BigInt::from(r).pow(k as u32) * factorial(n) / factorial(n - k);

    let inner_f = WordPolynomial::from_word(&UDWord::down_up_power(k), r)?;
    let inner = tower_critical_group(&inner_f, n - k)?;

    let d_multiplicity = p(ni) - 2 * p(ni - ki) + p(ni - 2 * ki);
    let mut nonunit: Vec<BigInt> = vec![d.clone(); d_multiplicity.max(0) as usize];
    nonunit.extend(inner.torsion_factors().iter().map(|e| &d * e));
    let mut list = vec![BigInt::one(); p(ni - ki) as usize];
    list.extend(nonunit.iter().cloned());

    let predicted = AbelianGroup::from_cyclic_orders(&nonunit).elementary_divisors();
    let computed_group = tower_critical_group(&WordPolynomial::from_word(&UDWord::up_down_power(k), r)?, n)?;
    let computed = computed_group.elementary_divisors();
    Ok(ConjectureReport {
        r,
        n,
        k,
        predicted_list: json(&list),
        matches: d_multiplicity >= 0 && predicted == computed,
        d_multiplicity,
        predicted: json(&predicted),
        computed: json(&computed),
        computed_invariant_factors: json(computed_group.torsion_factors()),
    })
}

/// `K(V(U^{n−2}D^{n−2})_n)` at `r = 1`:
/// `(Z/(n!/2))^{p(n)−4} ⊕ Z/(n!(n−2)!(n−2)(n+1)/8)`, for `n ≥ 4`.
pub fn n_minus_two_closed_form(n: usize) -> Result<AbelianGroup> {
    if n < 4 {
        return Err(Error::Invalid(format!("closed form needs n ≥ 4, got {n}")));
    }
    let pn = partition_counts(n)[n] as usize;
    let half = factorial(n) / 2;
    let last = factorial(n) * factorial(n - 2) * BigInt::from((n - 2) * (n + 1)) / 8;
    let mut orders = vec![half; pn - 4];
    orders.push(last);
    Ok(AbelianGroup::from_cyclic_orders(&orders))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ud(k: usize, r: usize) -> WordPolynomial {
        WordPolynomial::from_word(&UDWord::up_down_power(k), r).unwrap()
    }

    #[test]
    fn closed_form_values() {
        let g = n_minus_two_closed_form(4).unwrap();
        assert_eq!(g.factors_i64().unwrap(), vec![12, 60]);
        assert_eq!(g.order().unwrap(), BigInt::from(720));
        let g = n_minus_two_closed_form(5).unwrap();
        assert_eq!(g.factors_i64().unwrap(), vec![60, 60, 60, 1620]);
        assert_eq!(g.order().unwrap(), BigInt::from(349_920_000u64));
        assert!(n_minus_two_closed_form(3).is_err());
    }

    #[test]
    fn closed_form_matches_snf() {
        for n in 4..=6 {
            assert_eq!(
                tower_critical_group(&ud(n - 2, 1), n).unwrap(),
                n_minus_two_closed_form(n).unwrap(),
                "n={n}"
            );
        }
    }

    #[test]
    fn degenerate_k0() {
        let rep = check_conjecture_56(2, 3, 0).unwrap();
        assert!(rep.matches);
        assert_eq!(rep.predicted_list.len(), 10);
    }

    #[test]
    fn report_shape() {
        let rep = check_conjecture_56(1, 5, 3).unwrap();
        assert!(rep.matches);
        let v = serde_json::to_value(&rep).unwrap();
        for key in ["predicted", "computed", "match", "r", "n", "k"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        // the conjectured list has one entry per basis element minus the zero
        assert_eq!(rep.predicted_list.len(), 6);
    }

    #[test]
    fn negative_multiplicity_is_a_mismatch() {
        let rep = check_conjecture_56(1, 1, 1).unwrap();
        assert_eq!(rep.d_multiplicity, -1);
        assert!(!rep.matches);
    }

    #[test]
    fn list_length_at_n_equal_2k_overshoots() {
        // the formula lists p_n entries here instead of p_n − 1
        let rep = check_conjecture_56(1, 4, 2).unwrap();
        assert_eq!(rep.predicted_list.len(), 5);
        assert!(!rep.matches);
    }
}
