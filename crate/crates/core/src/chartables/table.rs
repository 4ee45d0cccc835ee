use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{require_integer, CyclotomicInt};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyClass {
    pub name: String,
    pub size: u64,
}

/// Character table over cyclotomic integers. Rows are irreducibles, columns
/// conjugacy classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    name: String,
    order: u64,
    exponent: usize,
    classes: Vec<ConjugacyClass>,
    irreps: Vec<String>,
    characters: Vec<Vec<CyclotomicInt>>,
    identity: usize,
    trivial: usize,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    name: String,
    order: u64,
    exponent: usize,
    classes: Vec<ConjugacyClass>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    irreps: Option<Vec<String>>,
    characters: Vec<Vec<CyclotomicInt>>,
}

impl CharacterTable {
    /// Builds and validates a table. Fails with the first offending class or
    /// pair of characters.
    pub fn new(
        name: impl Into<String>,
        order: u64,
        exponent: usize,
        classes: Vec<ConjugacyClass>,
        irreps: Option<Vec<String>>,
        characters: Vec<Vec<CyclotomicInt>>,
    ) -> Result<Self> {
        let name = name.into();
        let k = classes.len();
        if characters.len() != k {
            return Err(Error::TableIntegrity(format!(
                "{name}: {} characters for {k} classes",
                characters.len()
            )));
        }
        if let Some(i) = characters.iter().position(|row| row.len() != k) {
            return Err(Error::TableIntegrity(format!("{name}: row {i} has wrong length")));
        }
        let total: u64 = classes.iter().map(|c| c.size).sum();
        if total != order {
            return Err(Error::TableIntegrity(format!(
                "{name}: class sizes sum to {total}, not {order}"
            )));
        }
        let irreps = irreps.unwrap_or_else(|| (0..k).map(|i| format!("X{i}")).collect());
        if irreps.len() != k {
            return Err(Error::TableIntegrity(format!("{name}: wrong number of irrep names")));
        }
        let identity = find_identity(&characters, order)
            .ok_or_else(|| Error::TableIntegrity(format!("{name}: no identity class")))?;
        if classes[identity].size != 1 {
            return Err(Error::TableIntegrity(format!("{name}: identity class has size > 1")));
        }
        let one = CyclotomicInt::one();
        let trivial = characters
            .iter()
            .position(|row| row.iter().all(|x| *x == one))
            .ok_or_else(|| Error::TableIntegrity(format!("{name}: no trivial character")))?;
        let table = CharacterTable {
            name,
            order,
            exponent,
            classes,
            irreps,
            characters,
            identity,
            trivial,
        };
        table.check_orthogonality()?;
        Ok(table)
    }

    fn check_orthogonality(&self) -> Result<()> {
        for i in 0..self.num_irreps() {
            for j in i..self.num_irreps() {
                let ip = self
                    .inner_product(&self.characters[i], &self.characters[j])
                    .map_err(|_| self.pair_error(i, j))?;
                let want = if i == j { BigInt::one() } else { BigInt::zero() };
                if ip != want {
                    return Err(self.pair_error(i, j));
                }
            }
        }
        Ok(())
    }

    fn pair_error(&self, i: usize, j: usize) -> Error {
        Error::TableIntegrity(format!(
            "{}: characters {} and {} fail orthogonality",
            self.name, self.irreps[i], self.irreps[j]
        ))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn irreps(&self) -> &[String] {
        &self.irreps
    }

    pub fn irrep_index(&self, name: &str) -> Option<usize> {
        self.irreps.iter().position(|x| x == name)
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.name == name)
    }

    pub fn num_irreps(&self) -> usize {
        self.characters.len()
    }

    pub fn characters(&self) -> &[Vec<CyclotomicInt>] {
        &self.characters
    }

    pub fn value(&self, irrep: usize, class: usize) -> &CyclotomicInt {
        &self.characters[irrep][class]
    }

    pub fn identity_class(&self) -> usize {
        self.identity
    }

    pub fn trivial_index(&self) -> usize {
        self.trivial
    }

    pub fn dims(&self) -> Vec<BigInt> {
        self.characters
            .iter()
            .map(|row| row[self.identity].to_integer().expect("validated"))
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.dims().iter().all(One::is_one)
    }

    /// `⟨a, b⟩ = (1/|G|) Σ_c |c| a(c) conj(b(c))`, required to be a rational
    /// integer.
    pub fn inner_product(&self, a: &[CyclotomicInt], b: &[CyclotomicInt]) -> Result<BigInt> {
        let mut acc = CyclotomicInt::zero();
        for (c, class) in self.classes.iter().enumerate() {
            let term = a[c].mul(&b[c].conj()).scale(&BigInt::from(class.size));
            acc = acc.add(&term);
        }
        let q = acc.div_exact(&BigInt::from(self.order)).ok_or_else(|| {
            Error::TableIntegrity(format!("{}: inner product {acc} not divisible by |G|", self.name))
        })?;
        require_integer(&q, "inner product")
    }

    /// Decomposes a class function into irreducible multiplicities.
    pub fn decompose(&self, f: &[CyclotomicInt]) -> Result<Vec<BigInt>> {
        self.characters
            .iter()
            .map(|row| self.inner_product(f, row))
            .collect()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let t: TableJson = serde_json::from_str(s)?;
        CharacterTable::new(t.name, t.order, t.exponent, t.classes, t.irreps, t.characters)
    }

    pub fn to_json(&self) -> String {
        let t = TableJson {
            name: self.name.clone(),
            order: self.order,
            exponent: self.exponent,
            classes: self.classes.clone(),
            irreps: Some(self.irreps.clone()),
            characters: self.characters.clone(),
        };
        serde_json::to_string_pretty(&t).expect("table serialization")
    }

    /// Copy with one entry replaced and no validation, for fault-injection tests.
    #[doc(hidden)]
    pub fn corrupted(&self, irrep: usize, class: usize, value: CyclotomicInt) -> Self {
        let mut t = self.clone();
        t.characters[irrep][class] = value;
        t
    }

    /// Re-runs the orthogonality check.
    pub fn validate(&self) -> Result<()> {
        self.check_orthogonality()
    }
}

/// The identity class is the unique column of positive rational integers
/// whose squares sum to `|G|`.
fn find_identity(chars: &[Vec<CyclotomicInt>], order: u64) -> Option<usize> {
    let k = chars.first()?.len();
    let mut found = None;
    for c in 0..k {
        let col: Option<Vec<BigInt>> = chars.iter().map(|row| row[c].to_integer()).collect();
        let Some(col) = col else { continue };
        if !col.iter().all(Signed::is_positive) {
            continue;
        }
        let sq: BigInt = col.iter().map(|x| x * x).sum();
        if sq == BigInt::from(order) {
            if found.is_some() {
                return None;
            }
            found = Some(c);
        }
    }
    found
}

pub(crate) fn lcm_all(values: impl IntoIterator<Item = usize>) -> usize {
    values.into_iter().fold(1, |acc, x| acc.lcm(&x))
}
