use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::table::CharacterTable;
use crate::cyclotomic::CyclotomicInt;
use crate::error::{Error, Result};

/// A (possibly virtual) representation as multiplicities over the
/// irreducibles of a table, in table order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepVector(pub Vec<i64>);

impl RepVector {
    pub fn new(mult: Vec<i64>) -> Self {
        RepVector(mult)
    }

    pub fn zero(len: usize) -> Self {
        RepVector(vec![0; len])
    }

    /// A single irreducible.
    pub fn irreducible(table: &CharacterTable, index: usize) -> Self {
        let mut v = vec![0; table.num_irreps()];
        v[index] = 1;
        RepVector(v)
    }

    /// Sum of irreducibles given by name, repeats allowed.
    pub fn from_names(table: &CharacterTable, names: &[&str]) -> Result<Self> {
        let mut v = vec![0; table.num_irreps()];
        for n in names {
            let i = table
                .irrep_index(n)
                .ok_or_else(|| Error::Invalid(format!("no irreducible named {n:?} in {}", table.name())))?;
            v[i] += 1;
        }
        Ok(RepVector(v))
    }

    /// The regular representation.
    pub fn regular(table: &CharacterTable) -> Self {
        RepVector(
            table
                .dims()
                .iter()
                .map(|d| i64::try_from(d).expect("small dimension"))
                .collect(),
        )
    }

    pub fn multiplicities(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_genuine(&self) -> bool {
        self.0.iter().all(|&m| m >= 0)
    }

    pub fn check_table(&self, table: &CharacterTable) -> Result<()> {
        if self.0.len() != table.num_irreps() {
            return Err(Error::Dimension(format!(
                "representation has {} multiplicities, {} has {} irreducibles",
                self.0.len(),
                table.name(),
                table.num_irreps()
            )));
        }
        Ok(())
    }

    pub fn dimension(&self, table: &CharacterTable) -> BigInt {
        table
            .dims()
            .iter()
            .zip(&self.0)
            .map(|(d, &m)| d * m)
            .sum()
    }

    /// Character values on each class.
    pub fn character(&self, table: &CharacterTable) -> Vec<CyclotomicInt> {
        (0..table.classes().len())
            .map(|c| {
                self.0
                    .iter()
                    .enumerate()
                    .filter(|(_, &m)| m != 0)
                    .fold(CyclotomicInt::zero(), |acc, (i, &m)| {
                        acc.add(&table.value(i, c).scale(&BigInt::from(m)))
                    })
            })
            .collect()
    }
}

impl fmt::Display for RepVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for RepVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad multiplicity {t:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(RepVector)
    }
}
