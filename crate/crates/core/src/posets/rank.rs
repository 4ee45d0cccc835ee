use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::{partition_counts, partitions_of, Partition};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;

/// An element of `Y^r`: an `r`-tuple of partitions.
///
/// `Ord` is the r-lexicographic order: component 1 first (larger size wins,
/// then lexicographic on parts), then component 2, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPartition(Vec<Partition>);

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Invalid("a multipartition needs at least one component".into()));
        }
        Ok(MultiPartition(components))
    }

    pub fn empty(r: usize) -> Self {
        assert!(r >= 1, "r must be positive");
        MultiPartition(vec![Partition::empty(); r])
    }

    pub fn r(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.0[i]
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(Partition::size).sum()
    }

    /// Elements covering this one.
    pub fn up_covers(&self) -> Vec<MultiPartition> {
        let mut out = Vec::new();
        for (i, c) in self.0.iter().enumerate() {
            for q in c.add_box() {
                let mut next = self.0.clone();
                next[i] = q;
                out.push(MultiPartition(next));
            }
        }
        out
    }

    /// Elements covered by this one.
    pub fn down_covers(&self) -> Vec<MultiPartition> {
        let mut out = Vec::new();
        for (i, c) in self.0.iter().enumerate() {
            for q in c.remove_box() {
                let mut next = self.0.clone();
                next[i] = q;
                out.push(MultiPartition(next));
            }
        }
        out
    }
}

impl Ord for MultiPartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for MultiPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join("|"))
    }
}

impl FromStr for MultiPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let comps = s
            .split('|')
            .map(str::parse::<Partition>)
            .collect::<Result<Vec<_>>>()?;
        MultiPartition::new(comps)
    }
}

/// The rank `(Y^r)_n`, sorted ascending in r-lexicographic order.
#[derive(Debug)]
pub struct RankBasis {
    pub r: usize,
    pub n: usize,
    elements: Vec<MultiPartition>,
    index: HashMap<MultiPartition, usize>,
}

impl RankBasis {
    pub fn elements(&self) -> &[MultiPartition] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, x: &MultiPartition) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// The element `((n), ∅, …, ∅)`, which plays the trivial representation.
    pub fn trivial_index(&self) -> usize {
        self.elements.len() - 1
    }
}

fn build_rank(r: usize, n: usize) -> RankBasis {
    let mut elements = Vec::new();
    let by_size: Vec<Vec<Partition>> = (0..=n).map(partitions_of).collect();
    fn rec(
        r: usize,
        remaining: usize,
        by_size: &[Vec<Partition>],
        cur: &mut Vec<Partition>,
        out: &mut Vec<MultiPartition>,
    ) {
        if cur.len() == r - 1 {
            for p in &by_size[remaining] {
                let mut comps = cur.clone();
                comps.push(p.clone());
                out.push(MultiPartition(comps));
            }
            return;
        }
        for s in 0..=remaining {
            for p in &by_size[s] {
                cur.push(p.clone());
                rec(r, remaining - s, by_size, cur, out);
                cur.pop();
            }
        }
    }
    rec(r, n, &by_size, &mut Vec::new(), &mut elements);
    elements.sort();
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, x)| (x.clone(), i))
        .collect();
    RankBasis {
        r,
        n,
        elements,
        index,
    }
}

type Cache<K, V> = OnceLock<RwLock<HashMap<K, Arc<V>>>>;

fn cached<K, V>(cache: &'static Cache<K, V>, key: K, make: impl FnOnce() -> V) -> Arc<V>
where
    K: std::hash::Hash + Eq + Clone,
{
    let lock = cache.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = lock.read().expect("cache poisoned").get(&key) {
        return Arc::clone(v);
    }
    let v = Arc::new(make());
    // first writer wins; later identical values are dropped
    let mut w = lock.write().expect("cache poisoned");
    Arc::clone(w.entry(key).or_insert(v))
}

/// Rank `n` of `Y^r`, memoized.
pub fn rank_basis(r: usize, n: usize) -> Arc<RankBasis> {
    assert!(r >= 1, "r must be positive");
    static CACHE: Cache<(usize, usize), RankBasis> = OnceLock::new();
    cached(&CACHE, (r, n), || build_rank(r, n))
}

/// `p_m = |(Y^r)_m|`, zero for negative `m`.
pub fn rank_size(r: usize, m: i64) -> u64 {
    if m < 0 {
        return 0;
    }
    let m = m as usize;
    let p = partition_counts(m);
    let mut acc = vec![0u64; m + 1];
    acc[0] = 1;
    for _ in 0..r {
        let mut next = vec![0u64; m + 1];
        for i in 0..=m {
            if acc[i] == 0 {
                continue;
            }
            for j in 0..=m - i {
                next[i + j] += acc[i] * p[j];
            }
        }
        acc = next;
    }
    acc[m]
}

/// `Δp_m = p_m − p_{m−1}`.
pub fn delta_p(r: usize, m: i64) -> i64 {
    rank_size(r, m) as i64 - rank_size(r, m - 1) as i64
}

/// Smallest `m ≤ search_bound` with `Δp_m ≥ i`.
pub fn m0(r: usize, i: i64, search_bound: usize) -> Option<usize> {
    (0..=search_bound).find(|&m| delta_p(r, m as i64) >= i)
}

/// Number of saturated chains from the minimum up to `x`.
pub fn path_count(x: &MultiPartition) -> BigInt {
    fn rec(x: &MultiPartition, memo: &mut HashMap<MultiPartition, BigInt>) -> BigInt {
        if x.size() == 0 {
            return BigInt::one();
        }
        if let Some(v) = memo.get(x) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for y in x.down_covers() {
            total += rec(&y, memo);
        }
        memo.insert(x.clone(), total.clone());
        total
    }
    rec(x, &mut HashMap::new())
}

/// `U_n : Z^{P_n} → Z^{P_{n+1}}` as a `p_{n+1} × p_n` 0/1 matrix.
pub fn up_matrix(r: usize, n: usize) -> Arc<IntMatrix> {
    static CACHE: Cache<(usize, usize), IntMatrix> = OnceLock::new();
    cached(&CACHE, (r, n), || {
        let src = rank_basis(r, n);
        let dst = rank_basis(r, n + 1);
        let mut m = IntMatrix::zeros(dst.len(), src.len());
        for (j, x) in src.elements().iter().enumerate() {
            for y in x.up_covers() {
                let i = dst.index_of(&y).expect("cover lies in the next rank");
                m[(i, j)] = BigInt::one();
            }
        }
        m
    })
}

/// `D_n : Z^{P_n} → Z^{P_{n−1}}` as a `p_{n−1} × p_n` matrix; `D_0` is the
/// `0 × 1` zero map.
pub fn down_matrix(r: usize, n: usize) -> Arc<IntMatrix> {
    static CACHE: Cache<(usize, usize), IntMatrix> = OnceLock::new();
    cached(&CACHE, (r, n), || {
        if n == 0 {
            return IntMatrix::zeros(0, 1);
        }
        up_matrix(r, n - 1).transpose()
    })
}

/// Up map out of rank `m`, with the empty space below rank 0.
pub(crate) fn up_at(r: usize, m: i64) -> IntMatrix {
    if m < 0 {
        IntMatrix::zeros(rank_size(r, m + 1) as usize, 0)
    } else {
        (*up_matrix(r, m as usize)).clone()
    }
}

/// Down map out of rank `m`, with the empty space below rank 0.
pub(crate) fn down_at(r: usize, m: i64) -> IntMatrix {
    if m < 0 {
        IntMatrix::zeros(0, 0)
    } else {
        (*down_matrix(r, m as usize)).clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(r: usize, n: usize) -> Vec<String> {
        rank_basis(r, n).elements().iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn rank_cardinalities() {
        assert_eq!(rank_basis(2, 3).len(), 10);
        assert_eq!(rank_basis(1, 4).len(), 5);
        assert_eq!(rank_basis(3, 0).len(), 1);
        for r in 1..=3 {
            for n in 0..=5 {
                assert_eq!(rank_basis(r, n).len() as u64, rank_size(r, n as i64));
            }
        }
        assert_eq!(rank_size(2, -1), 0);
    }

    #[test]
    fn r_lex_order_for_y2_rank3() {
        assert_eq!(
            labels(2, 3),
            vec![
                "|1,1,1", "|2,1", "|3", "1|1,1", "1|2", "1,1|1", "2|1", "1,1,1|", "2,1|", "3|"
            ]
        );
        assert_eq!(rank_basis(2, 3).trivial_index(), 9);
    }

    #[test]
    fn text_form() {
        let x: MultiPartition = "3,1|2".parse().unwrap();
        assert_eq!(x.r(), 2);
        assert_eq!(x.size(), 6);
        assert_eq!(x.to_string(), "3,1|2");
        let e: MultiPartition = "|".parse().unwrap();
        assert_eq!(e, MultiPartition::empty(2));
    }

    #[test]
    fn delta_p_and_m0() {
        assert_eq!(delta_p(1, 2), 1);
        assert_eq!(delta_p(1, 4), 2);
        assert_eq!(m0(1, 1, 10), Some(0));
        assert_eq!(m0(1, 2, 10), Some(4));
        assert_eq!(delta_p(2, 1), 1);
        assert_eq!(delta_p(2, 2), 3);
        assert_eq!(m0(2, 2, 10), Some(2));
        assert_eq!(m0(2, 3, 10), Some(2));
        assert_eq!(m0(1, 50, 5), None);
        for r in 1..4 {
            assert_eq!(delta_p(r, 0), 1);
            assert_eq!(delta_p(r, -3), 0);
        }
    }

    #[test]
    fn path_counts() {
        let x: MultiPartition = "2,1".parse().unwrap();
        assert_eq!(path_count(&x), 2.into());
        assert_eq!(path_count(&MultiPartition::empty(3)), 1.into());
        let total: BigInt = rank_basis(2, 3)
            .elements()
            .iter()
            .map(|x| path_count(x).pow(2))
            .sum();
        assert_eq!(total, 48.into());
    }

    #[test]
    fn up_down_shapes_and_entries() {
        let u1 = up_matrix(1, 1);
        assert_eq!((u1.rows(), u1.cols()), (2, 1));
        assert!(u1.entries().iter().all(|x| x.is_one()));
        assert_eq!(down_matrix(1, 0).rows(), 0);
        assert_eq!(down_matrix(1, 0).cols(), 1);

        let d4 = down_matrix(1, 4);
        let basis3 = rank_basis(1, 3);
        let basis4 = rank_basis(1, 4);
        let col = basis4.index_of(&"3,1".parse().unwrap()).unwrap();
        let hits: Vec<String> = (0..d4.rows())
            .filter(|&i| d4[(i, col)].is_one())
            .map(|i| basis3.elements()[i].to_string())
            .collect();
        assert_eq!(hits, vec!["2,1", "3"]);
    }

    #[test]
    fn concurrent_cache_reads() {
        let handles: Vec<_> = (0..4)
            .map(|_| std::thread::spawn(|| rank_basis(3, 4).len()))
            .collect();
        for h in handles {
            assert_eq!(h.join().unwrap(), 51);
        }
    }
}
