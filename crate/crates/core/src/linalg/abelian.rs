use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::{IntMatrix, JsonInt};
use super::smith::{divides, smith_normal_form};

/// Finitely generated abelian group in invariant-factor form.
///
/// Factors are > 1 or 0, form a divisibility chain, and zeros (free
/// summands) come last. Units are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// From a diagonal already in chain order (units and sign allowed).
    pub(crate) fn from_chain(chain: &[BigInt]) -> Self {
        let factors: Vec<BigInt> = chain
            .iter()
            .map(|x| x.abs())
            .filter(|x| !x.is_one())
            .collect();
        debug_assert!(factors.windows(2).all(|w| divides(&w[0], &w[1])));
        AbelianGroup { factors }
    }

    /// Canonical form of `⊕ Z/n_i` for an arbitrary list of cyclic orders
    /// (0 meaning `Z`).
    pub fn from_cyclic_orders<T: Into<BigInt> + Clone>(orders: &[T]) -> Self {
        let diag: Vec<BigInt> = orders.iter().cloned().map(Into::into).collect();
        smith_normal_form(&IntMatrix::from_diagonal(&diag)).cokernel()
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.factors
    }

    pub fn torsion_factors(&self) -> &[BigInt] {
        let n = self.factors.iter().take_while(|x| !x.is_zero()).count();
        &self.factors[..n]
    }

    pub fn torsion(&self) -> AbelianGroup {
        AbelianGroup {
            factors: self.torsion_factors().to_vec(),
        }
    }

    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|x| x.is_zero()).count()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// Order, or `None` when the group is infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.factors.iter().fold(BigInt::one(), |acc, x| acc * x))
    }

    /// Whether `(Z/d)^k` embeds. In chain form this happens exactly when at
    /// least `k` factors are divisible by `d`.
    pub fn contains_power_of_cyclic(&self, d: &BigInt, k: usize) -> bool {
        let d = d.abs();
        if k == 0 || d.is_one() {
            return true;
        }
        let count = self.factors.iter().filter(|a| divides(&d, a)).count();
        count >= k
    }

    /// Prime-power decomposition of the torsion part, sorted ascending.
    ///
    /// Trial division up to 10^6; a cofactor left over after that is kept
    /// whole. Orders met in this crate are products of small integers.
    pub fn elementary_divisors(&self) -> Vec<BigInt> {
        let mut out = Vec::new();
        for f in self.torsion_factors() {
            out.extend(prime_power_parts(f));
        }
        out.sort();
        out
    }

    /// Factors as `i64`, if they all fit.
    pub fn factors_i64(&self) -> Option<Vec<i64>> {
        self.factors.iter().map(|x| x.to_i64()).collect()
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("group serialization")
    }
}

fn prime_power_parts(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut push_power = |n: &mut BigInt, p: &BigInt| {
        let mut q = BigInt::one();
        while (&*n % p).is_zero() {
            *n /= p;
            q *= p;
        }
        if !q.is_one() {
            out.push(q);
        }
    };
    let mut p = 2u64;
    while p <= 1_000_000 {
        let pb = BigInt::from(p);
        if &pb * &pb > n {
            break;
        }
        push_power(&mut n, &pb);
        p += if p == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push(n);
    }
    out
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial");
        }
        let mut parts: Vec<String> = self
            .torsion_factors()
            .iter()
            .map(|x| format!("Z/{x}"))
            .collect();
        match self.free_rank() {
            0 => {}
            1 => parts.push("Z".into()),
            k => parts.push(format!("Z^{k}")),
        }
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

impl Serialize for AbelianGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.factors
            .iter()
            .cloned()
            .map(JsonInt)
            .collect::<Vec<_>>()
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for AbelianGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<JsonInt>::deserialize(d)?;
        let v: Vec<BigInt> = raw.into_iter().map(|x| x.0).collect();
        Ok(AbelianGroup::from_cyclic_orders(&v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalizes_arbitrary_lists() {
        let g = AbelianGroup::from_cyclic_orders(&[6, 4, 1, 0]);
        assert_eq!(g.factors_i64().unwrap(), vec![2, 12, 0]);
        assert_eq!(g.to_string(), "Z/2 ⊕ Z/12 ⊕ Z");
        assert_eq!(g.order(), None);
        assert_eq!(g.torsion().order(), Some(BigInt::from(24)));
    }

    #[test]
    fn trivial_group() {
        let g = AbelianGroup::from_cyclic_orders(&[1, 1, -1]);
        assert!(g.is_trivial());
        assert_eq!(g.to_string(), "trivial");
        assert_eq!(g.order(), Some(BigInt::one()));
    }

    #[test]
    fn elementary_divisors_of_chain() {
        let g = AbelianGroup::from_cyclic_orders(&[12, 60]);
        let ed: Vec<i64> = g.elementary_divisors().iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(ed, vec![3, 3, 4, 4, 5]);
    }

    #[test]
    fn subgroup_containment() {
        let g = AbelianGroup::from_cyclic_orders(&[6, 6, 120]);
        assert!(g.contains_power_of_cyclic(&BigInt::from(6), 3));
        assert!(!g.contains_power_of_cyclic(&BigInt::from(4), 2));
        assert!(g.contains_power_of_cyclic(&BigInt::from(8), 1));
        let free = AbelianGroup::from_cyclic_orders(&[0, 0]);
        assert!(free.contains_power_of_cyclic(&BigInt::from(7), 2));
    }

    #[test]
    fn json_round_trip() {
        let g = AbelianGroup::from_cyclic_orders(&[3, 90, 47520]);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, "[3,90,47520]");
        assert_eq!(serde_json::from_str::<AbelianGroup>(&s).unwrap(), g);
    }
}
