use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Integer partition: weakly decreasing positive parts.
///
/// Ordered first by size, then lexicographically on the part list, so that
/// among partitions of one number `(1,1,1) < (2,1) < (3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Invalid(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// Number of parts equal to 1.
    pub fn ones(&self) -> usize {
        self.0.iter().filter(|&&p| p == 1).count()
    }

    /// All partitions obtained by adding one box.
    pub fn add_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.0.len() {
            let cur = self.0.get(i).copied().unwrap_or(0);
            if i == 0 || self.0[i - 1] > cur {
                let mut p = self.0.clone();
                if i == p.len() {
                    p.push(1);
                } else {
                    p[i] += 1;
                }
                out.push(Partition(p));
            }
        }
        out
    }

    /// All partitions obtained by removing one box.
    pub fn remove_box(&self) -> Vec<Partition> {
        let n = self.0.len();
        let mut out = Vec::new();
        for i in 0..n {
            let next = self.0.get(i + 1).copied().unwrap_or(0);
            if self.0[i] > next {
                let mut p = self.0.clone();
                p[i] -= 1;
                if p[i] == 0 {
                    p.pop();
                }
                out.push(Partition(p));
            }
        }
        out
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn standard_tableaux(&self) -> num_bigint::BigInt {
        use num_bigint::BigInt;
        use num_traits::One;
        let conj = self.conjugate();
        let mut num = BigInt::one();
        for k in 2..=self.size() {
            num *= k;
        }
        let mut den = BigInt::one();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                den *= (row - j - 1) + (conj.0[j] - i - 1) + 1;
            }
        }
        num / den
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n`, each once, in ascending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for first in 1..=n.min(max) {
            cur.push(first);
            rec(n - first, first, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// `p(0), …, p(n)`.
pub fn partition_counts(n: usize) -> Vec<u64> {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            p[m] += p[m - part];
        }
    }
    p
}
