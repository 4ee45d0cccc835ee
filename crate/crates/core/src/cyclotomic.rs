//! Exact arithmetic in the cyclotomic integers `Z[ζ_m]`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{IntPoly, JsonInt};

/// The `m`-th cyclotomic polynomial, memoized.
pub fn cyclotomic_polynomial(m: usize) -> Arc<IntPoly> {
    assert!(m >= 1, "conductor must be positive");
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<IntPoly>>>> = OnceLock::new();
    let lock = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = lock.read().expect("cache poisoned").get(&m) {
        return Arc::clone(p);
    }
    let mut num = vec![BigInt::zero(); m + 1];
    num[0] = -BigInt::one();
    num[m] = BigInt::one();
    let mut p = IntPoly::new(num);
    for d in 1..m {
        if m % d == 0 {
            p = exact_div(&p, &cyclotomic_polynomial(d));
        }
    }
    let p = Arc::new(p);
    let mut w = lock.write().expect("cache poisoned");
    Arc::clone(w.entry(m).or_insert(p))
}

fn exact_div(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (q, r) = div_rem_monic(a.coeffs(), b);
    debug_assert!(r.iter().all(Zero::is_zero));
    IntPoly::new(q)
}

/// Division by a monic polynomial.
fn div_rem_monic(a: &[BigInt], b: &IntPoly) -> (Vec<BigInt>, Vec<BigInt>) {
    let db = b.degree().expect("nonzero divisor");
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let mut q = vec![BigInt::zero(); rem.len() - db];
    for i in (db..rem.len()).rev() {
        let c = std::mem::take(&mut rem[i]);
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs()[..db].iter().enumerate() {
            rem[i - db + j] -= &c * bj;
        }
        q[i - db] = c;
    }
    rem.truncate(db);
    (q, rem)
}

pub fn euler_phi(m: usize) -> usize {
    (1..=m).filter(|&k| k.gcd(&m) == 1).count()
}

/// Element of `Z[ζ_m]`, stored in the power basis `1, ζ, …, ζ^{φ(m)−1}`.
#[derive(Clone, Debug)]
pub struct CyclotomicInt {
    conductor: usize,
    coeffs: Vec<BigInt>,
}

impl CyclotomicInt {
    /// Reduces `Σ a_j ζ^j` (any length) modulo the cyclotomic polynomial.
    pub fn new(conductor: usize, coeffs: Vec<BigInt>) -> Self {
        assert!(conductor >= 1, "conductor must be positive");
        let mut folded = vec![BigInt::zero(); conductor];
        for (j, c) in coeffs.into_iter().enumerate() {
            folded[j % conductor] += c;
        }
        let phi = cyclotomic_polynomial(conductor);
        let (_, mut rem) = div_rem_monic(&folded, &phi);
        rem.resize(euler_phi(conductor), BigInt::zero());
        CyclotomicInt {
            conductor,
            coeffs: rem,
        }
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        CyclotomicInt {
            conductor: 1,
            coeffs: vec![n.into()],
        }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `ζ_m^k`.
    pub fn zeta_power(m: usize, k: usize) -> Self {
        let mut c = vec![BigInt::zero(); m];
        c[k % m] = BigInt::one();
        Self::new(m, c)
    }

    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The same number written over `Z[ζ_l]`, where `m | l`.
    pub fn lift(&self, l: usize) -> Self {
        assert!(l % self.conductor == 0, "conductor must divide target");
        if l == self.conductor {
            return self.clone();
        }
        let step = l / self.conductor;
        let mut c = vec![BigInt::zero(); l];
        for (j, a) in self.coeffs.iter().enumerate() {
            c[j * step] += a;
        }
        Self::new(l, c)
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let l = self.conductor.lcm(&other.conductor);
        (self.lift(l), other.lift(l))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CyclotomicInt {
            conductor: a.conductor,
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        CyclotomicInt {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.common(other);
        let mut c = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        Self::new(a.conductor, c)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        CyclotomicInt {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|x| x * k).collect(),
        }
    }

    /// Complex conjugate, `ζ ↦ ζ^{m−1}`.
    pub fn conj(&self) -> Self {
        let m = self.conductor;
        let mut c = vec![BigInt::zero(); m];
        for (j, a) in self.coeffs.iter().enumerate() {
            c[(m - j) % m] += a;
        }
        Self::new(m, c)
    }

    /// Exact division by a rational integer, if the quotient is integral.
    pub fn div_exact(&self, k: &BigInt) -> Option<Self> {
        if k.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.coeffs.len());
        for x in &self.coeffs {
            let (q, r) = x.div_rem(k);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
        }
        Some(CyclotomicInt {
            conductor: self.conductor,
            coeffs: out,
        })
    }

    pub fn is_rational_integer(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.is_rational_integer()
            .then(|| self.coeffs.first().cloned().unwrap_or_default())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl PartialEq for CyclotomicInt {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicInt {}

impl From<i64> for CyclotomicInt {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = self.to_integer() {
            return write!(f, "{n}");
        }
        let mut terms = Vec::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match j {
                0 => String::new(),
                1 => "ζ".to_string(),
                _ => format!("ζ^{j}"),
            };
            let t = if j == 0 {
                c.to_string()
            } else if c.is_one() {
                mono
            } else if *c == -BigInt::one() {
                format!("-{mono}")
            } else {
                format!("{c}{mono}")
            };
            terms.push(t);
        }
        write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CyclotomicJson {
    Int(JsonInt),
    Full { conductor: usize, coeffs: Vec<JsonInt> },
}

impl Serialize for CyclotomicInt {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.to_integer() {
            Some(n) => CyclotomicJson::Int(JsonInt(n)),
            None => CyclotomicJson::Full {
                conductor: self.conductor,
                coeffs: self.coeffs.iter().cloned().map(JsonInt).collect(),
            },
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CyclotomicInt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match CyclotomicJson::deserialize(d)? {
            CyclotomicJson::Int(n) => Ok(CyclotomicInt::from_int(n.0)),
            CyclotomicJson::Full { conductor, coeffs } => {
                if conductor == 0 {
                    return Err(serde::de::Error::custom("conductor must be positive"));
                }
                Ok(CyclotomicInt::new(
                    conductor,
                    coeffs.into_iter().map(|c| c.0).collect(),
                ))
            }
        }
    }
}

/// Sum of a list of cyclotomic integers.
pub fn sum<'a>(items: impl IntoIterator<Item = &'a CyclotomicInt>) -> CyclotomicInt {
    items
        .into_iter()
        .fold(CyclotomicInt::zero(), |acc, x| acc.add(x))
}

/// Product of a list, with the conductor growing as needed.
pub fn product<'a>(items: impl IntoIterator<Item = &'a CyclotomicInt>) -> CyclotomicInt {
    items
        .into_iter()
        .fold(CyclotomicInt::one(), |acc, x| acc.mul(x))
}

pub(crate) fn require_integer(x: &CyclotomicInt, what: &str) -> Result<BigInt> {
    x.to_integer()
        .ok_or_else(|| Error::TableIntegrity(format!("{what} is {x}, not a rational integer")))
}
