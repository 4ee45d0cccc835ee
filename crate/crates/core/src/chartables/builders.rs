use std::collections::HashMap;


use super::table::{lcm_all, CharacterTable, ConjugacyClass};
use crate::cyclotomic::CyclotomicInt;
use crate::error::{Error, Result};
use crate::posets::{partitions_of, Partition};

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Size of the class of permutations with cycle type `mu`.
pub fn cycle_type_class_size(mu: &Partition) -> u64 {
    let n = mu.size();
    let mut z: u64 = 1;
    let mut counts: HashMap<usize, u64> = HashMap::new();
    for &p in mu.parts() {
        *counts.entry(p).or_default() += 1;
    }
    for (p, m) in counts {
        z *= (p as u64).pow(m as u32) * factorial(m as usize);
    }
    factorial(n) / z
}

type MnMemo = HashMap<(Vec<usize>, Vec<usize>), i64>;

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule, removing rim hooks on β-sets.
pub fn murnaghan_nakayama(lambda: &Partition, mu: &Partition) -> i64 {
    fn rec(lambda: &[usize], mu: &[usize], memo: &mut MnMemo) -> i64 {
        let Some((&k, rest)) = mu.split_first() else {
            return i64::from(lambda.is_empty());
        };
        let key = (lambda.to_vec(), mu.to_vec());
        if let Some(&v) = memo.get(&key) {
            return v;
        }
        let len = lambda.len();
        let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
        let mut total = 0;
        for &b in &beta {
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
            let sign = if between % 2 == 0 { 1 } else { -1 };
            let mut nb: Vec<usize> = beta.iter().map(|&x| if x == b { b - k } else { x }).collect();
            nb.sort_unstable_by(|a, b| b.cmp(a));
            let parts: Vec<usize> = nb
                .iter()
                .enumerate()
                .map(|(i, &x)| x - (len - 1 - i))
                .filter(|&p| p > 0)
                .collect();
            total += sign * rec(&parts, rest, memo);
        }
        memo.insert(key, total);
        total
    }
    assert_eq!(lambda.size(), mu.size(), "sizes must agree");
    rec(lambda.parts(), mu.parts(), &mut HashMap::new())
}

/// Character table of `S_n`.
///
/// Rows are partitions in descending lexicographic order, so the trivial
/// character `(n)` is row 0 and the sign `(1^n)` the last row. Columns are
/// cycle types in ascending lexicographic order, identity first.
pub fn build_symmetric_table(n: usize) -> Result<CharacterTable> {
    if !(1..=8).contains(&n) {
        return Err(Error::Invalid(format!("symmetric tables are built for 1 ≤ n ≤ 8, got {n}")));
    }
    let cols = partitions_of(n);
    let mut rows = cols.clone();
    rows.reverse();
    let classes = cols
        .iter()
        .map(|mu| ConjugacyClass {
            name: mu.to_string(),
            size: cycle_type_class_size(mu),
        })
        .collect();
    let mut memo = HashMap::new();
    let mut chars = Vec::with_capacity(rows.len());
    for lam in &rows {
        let row = cols
            .iter()
            .map(|mu| {
                let v = mn_cached(lam, mu, &mut memo);
                CyclotomicInt::from_int(v)
            })
            .collect();
        chars.push(row);
    }
    let exponent = lcm_all(1..=n);
    CharacterTable::new(
        format!("S{n}"),
        factorial(n),
        exponent,
        classes,
        Some(rows.iter().map(|p| p.to_string()).collect()),
        chars,
    )
}

fn mn_cached(lam: &Partition, mu: &Partition, memo: &mut HashMap<(Partition, Partition), i64>) -> i64 {
    *memo
        .entry((lam.clone(), mu.clone()))
        .or_insert_with(|| murnaghan_nakayama(lam, mu))
}

/// Elements of `⊕ Z/n_i` in odometer order, last coordinate fastest.
pub fn abelian_elements(factors: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &f in factors {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..f).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

fn element_name(factors: &[usize], a: &[usize], cyclic: &str) -> String {
    if factors.len() == 1 {
        match a[0] {
            0 => "e".to_string(),
            1 => cyclic.to_string(),
            k => format!("{cyclic}^{k}"),
        }
    } else {
        let s: Vec<String> = a.iter().map(|x| x.to_string()).collect();
        format!("({})", s.join(","))
    }
}

/// Character table of `Z/n_1 ⊕ … ⊕ Z/n_t`.
///
/// Classes are the elements and characters are indexed the same way:
/// `χ_b(a) = ζ_m^{Σ a_i b_i m/n_i}` with `m` the exponent.
pub fn build_abelian_table(factors: &[usize]) -> Result<CharacterTable> {
    if factors.iter().any(|&f| f < 2) {
        return Err(Error::Invalid("abelian factors must be at least 2".into()));
    }
    let m = lcm_all(factors.iter().copied());
    let elems = abelian_elements(factors);
    let order = elems.len() as u64;
    let classes = elems
        .iter()
        .map(|a| ConjugacyClass {
            name: element_name(factors, a, "g"),
            size: 1,
        })
        .collect();
    let irreps = elems
        .iter()
        .map(|b| {
            if factors.len() == 1 {
                format!("chi{}", b[0])
            } else {
                format!("chi{}", element_name(factors, b, ""))
            }
        })
        .collect();
    let chars = elems
        .iter()
        .map(|b| {
            elems
                .iter()
                .map(|a| {
                    let e: usize = (0..factors.len()).map(|i| a[i] * b[i] * (m / factors[i])).sum();
                    CyclotomicInt::zeta_power(m, e % m)
                })
                .collect()
        })
        .collect();
    let name = if factors.is_empty() {
        "1".to_string()
    } else {
        let s: Vec<String> = factors.iter().map(|f| format!("Z{f}")).collect();
        s.join("x")
    };
    CharacterTable::new(name, order, m, classes, Some(irreps), chars)
}

/// Character table of the dihedral group of order `2n`.
///
/// Classes: `e`, `r^j` for `1 ≤ j ≤ ⌊n/2⌋`, then the reflection classes
/// (`s` for odd `n`; `s` and `sr` for even `n`). Irreducibles: the linear
/// characters (`trivial`, `sign`, and `chi3`, `chi4` for even `n`), then
/// `psi1, psi2, …` with `psi_h(r^j) = ζ^{hj} + ζ^{−hj}`.
pub fn build_dihedral_table(n: usize) -> Result<CharacterTable> {
    if n < 3 {
        return Err(Error::Invalid(format!("dihedral tables need n ≥ 3, got {n}")));
    }
    let even = n % 2 == 0;
    let half = n / 2;
    let mut classes = vec![ConjugacyClass {
        name: "e".into(),
        size: 1,
    }];
    for j in 1..=half {
        classes.push(ConjugacyClass {
            name: if j == 1 { "r".into() } else { format!("r^{j}") },
            size: if even && j == half { 1 } else { 2 },
        });
    }
    if even {
        classes.push(ConjugacyClass { name: "s".into(), size: half as u64 });
        classes.push(ConjugacyClass { name: "sr".into(), size: half as u64 });
    } else {
        classes.push(ConjugacyClass { name: "s".into(), size: n as u64 });
    }
    let int = |v: i64| CyclotomicInt::from_int(v);
    let rot_sign = |j: usize| if j % 2 == 0 { 1 } else { -1 };
    let mut irreps = vec!["trivial".to_string(), "sign".to_string()];
    let mut chars: Vec<Vec<CyclotomicInt>> = Vec::new();
    let reflections = if even { 2 } else { 1 };
    let mut row = vec![int(1); half + 1 + reflections];
    chars.push(row.clone());
    for v in row.iter_mut().skip(half + 1) {
        *v = int(-1);
    }
    chars.push(row);
    if even {
        irreps.push("chi3".into());
        irreps.push("chi4".into());
        for (s_val, sr_val) in [(1, -1), (-1, 1)] {
            let mut row: Vec<CyclotomicInt> = (0..=half).map(|j| int(rot_sign(j))).collect();
            row.push(int(s_val));
            row.push(int(sr_val));
            chars.push(row);
        }
    }
    for h in 1..=(n - 1) / 2 {
        irreps.push(format!("psi{h}"));
        let mut row: Vec<CyclotomicInt> = (0..=half)
            .map(|j| {
                CyclotomicInt::zeta_power(n, (h * j) % n)
                    .add(&CyclotomicInt::zeta_power(n, (n - (h * j) % n) % n))
            })
            .collect();
        row.extend((0..reflections).map(|_| int(0)));
        chars.push(row);
    }
    CharacterTable::new(format!("D{n}"), 2 * n as u64, n, classes, Some(irreps), chars)
}

/// A built-in table by name: `S<n>`, `D<n>`, `Z<n>` or `Z<a>xZ<b>…`.
pub fn builtin_table(name: &str) -> Result<CharacterTable> {
    let bad = || Error::Parse(format!("unknown built-in table {name:?}"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    if let Some(rest) = name.strip_prefix('S') {
        return build_symmetric_table(num(rest)?);
    }
    if let Some(rest) = name.strip_prefix('D') {
        return build_dihedral_table(num(rest)?);
    }
    if name == "1" || name == "trivial" {
        return build_abelian_table(&[]);
    }
    if name.starts_with('Z') || name.starts_with('C') {
        let factors = name
            .split('x')
            .map(|t| num(t.trim_start_matches(['Z', 'C'])))
            .collect::<Result<Vec<_>>>()?;
        return build_abelian_table(&factors);
    }
    Err(bad())
}
