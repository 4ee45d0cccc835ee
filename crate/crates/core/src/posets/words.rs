use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rank::{down_at, rank_size, up_at};
use crate::error::{Error, Result};
use crate::linalg::{IntMatrix, IntPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    U,
    D,
}

/// A word in `U` and `D`, read as an operator product: the rightmost letter
/// acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UDWord(Vec<Letter>);

impl UDWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        UDWord(letters)
    }

    /// `U^k D^k`.
    pub fn up_down_power(k: usize) -> Self {
        let mut v = vec![Letter::U; k];
        v.extend(std::iter::repeat(Letter::D).take(k));
        UDWord(v)
    }

    /// `D^k U^k`.
    pub fn down_up_power(k: usize) -> Self {
        let mut v = vec![Letter::D; k];
        v.extend(std::iter::repeat(Letter::U).take(k));
        UDWord(v)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn ups(&self) -> usize {
        self.0.iter().filter(|&&l| l == Letter::U).count()
    }

    pub fn is_balanced(&self) -> bool {
        2 * self.ups() == self.0.len()
    }

    /// Half the length of a balanced word.
    pub fn half_length(&self) -> usize {
        self.0.len() / 2
    }

    /// Lowest rank reached when the word is applied at rank `n`, relative to `n`.
    pub fn max_descent(&self) -> usize {
        let mut h: i64 = 0;
        let mut low: i64 = 0;
        for l in self.0.iter().rev() {
            h += if *l == Letter::U { 1 } else { -1 };
            low = low.min(h);
        }
        (-low) as usize
    }
}

impl fmt::Display for UDWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            f.write_str(if *l == Letter::U { "U" } else { "D" })?;
        }
        Ok(())
    }
}

impl FromStr for UDWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Letter::U),
                'D' | 'd' => Ok(Letter::D),
                _ => Err(Error::Parse(format!("letter {c:?} is not U or D"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(UDWord)
    }
}

/// Normal form of a balanced word with `r` kept symbolic: entry `i` is the
/// coefficient of `U^i D^i`, a polynomial in `r`.
pub fn symbolic_normal_form(w: &UDWord) -> Result<Vec<IntPoly>> {
    if !w.is_balanced() {
        return Err(Error::Invalid(format!("word {w} is not balanced")));
    }
    // terms U^a D^b ↦ coefficient, multiplied on the right letter by letter
    let mut state: BTreeMap<(usize, usize), IntPoly> = BTreeMap::new();
    state.insert((0, 0), IntPoly::constant(BigInt::one()));
    let r = IntPoly::x();
    for l in w.letters() {
        let mut next: BTreeMap<(usize, usize), IntPoly> = BTreeMap::new();
        let mut push = |k: (usize, usize), c: IntPoly| {
            let e = next.entry(k).or_insert_with(IntPoly::zero);
            *e = e.add(&c);
        };
        for ((a, b), c) in state {
            match l {
                Letter::D => push((a, b + 1), c),
                Letter::U => {
                    // D^b U = U D^b + b r D^{b-1}
                    if b > 0 {
                        push((a, b - 1), c.mul(&r).scale(&BigInt::from(b)));
                    }
                    push((a + 1, b), c);
                }
            }
        }
        state = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    }
    let k = w.half_length();
    let mut out = vec![IntPoly::zero(); k + 1];
    for ((a, b), c) in state {
        debug_assert_eq!(a, b);
        out[a] = c;
    }
    Ok(out)
}

/// `Σ c_i U^i D^i` for a fixed `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordPolynomial {
    r: usize,
    coeffs: Vec<BigInt>,
}

/// `∏_{t<i} (x − t r)`, the expansion of `U^i D^i` in powers of `UD`.
fn falling(r: usize, i: usize) -> IntPoly {
    let mut p = IntPoly::constant(BigInt::one());
    for t in 0..i {
        p = p.mul(&IntPoly::new(vec![-BigInt::from(t * r), BigInt::one()]));
    }
    p
}

impl WordPolynomial {
    pub fn new(r: usize, coeffs: Vec<BigInt>) -> Self {
        let mut coeffs = coeffs;
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        WordPolynomial { r, coeffs }
    }

    pub fn from_word(w: &UDWord, r: usize) -> Result<Self> {
        word_to_normal_form(w, r)
    }

    /// From coefficients `β_j` of `(UD)^j`.
    pub fn from_betas(r: usize, betas: &[BigInt]) -> Self {
        let mut rest = IntPoly::new(betas.to_vec());
        let mut coeffs = vec![BigInt::zero(); betas.len()];
        while let Some(d) = rest.degree() {
            let c = rest.coeff(d);
            rest = rest.sub(&falling(r, d).scale(&c));
            coeffs[d] = c;
        }
        WordPolynomial::new(r, coeffs)
    }

    /// Parses `"c_0,c_1,…"` as `Σ c_i U^i D^i`.
    pub fn parse_coeffs(r: usize, s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<BigInt>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WordPolynomial::new(r, coeffs))
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn c(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Largest `i` with `c_i ≠ 0`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Smallest `i` with `c_i ≠ 0`.
    pub fn ell(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Coefficients `β_j` of `(UD)^j`.
    pub fn betas(&self) -> Vec<BigInt> {
        let mut acc = IntPoly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc = acc.add(&falling(self.r, i).scale(c));
        }
        acc.coeffs().to_vec()
    }

    /// The same operator with `β_0` removed.
    pub fn without_constant(&self) -> Self {
        let mut c = self.coeffs.clone();
        if let Some(c0) = c.first_mut() {
            *c0 = BigInt::zero();
        }
        WordPolynomial::new(self.r, c)
    }

    pub fn add(&self, other: &WordPolynomial) -> Result<Self> {
        if self.r != other.r {
            return Err(Error::Invalid("word polynomials over different r".into()));
        }
        let len = self.coeffs.len().max(other.coeffs.len());
        Ok(WordPolynomial::new(
            self.r,
            (0..len).map(|i| self.c(i) + other.c(i)).collect(),
        ))
    }
}

impl fmt::Display for WordPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "UD".to_string(),
                _ => format!("U^{i}D^{i}"),
            };
            let coef = if c.is_one() && i > 0 {
                String::new()
            } else {
                c.to_string()
            };
            terms.push(format!("{coef}{mono}"));
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// `w(U,D) = Σ c_i U^i D^i` at the given `r`.
pub fn word_to_normal_form(w: &UDWord, r: usize) -> Result<WordPolynomial> {
    let rb = BigInt::from(r);
    let coeffs = symbolic_normal_form(w)?
        .iter()
        .map(|p| p.eval(&rb))
        .collect();
    Ok(WordPolynomial::new(r, coeffs))
}

/// Matrix of the word acting on rank `m`; possibly between different ranks
/// when the word is unbalanced.
fn raw_word_matrix(w: &UDWord, r: usize, n: usize) -> IntMatrix {
    let mut m = n as i64;
    let mut acc = IntMatrix::identity(rank_size(r, m) as usize);
    for l in w.letters().iter().rev() {
        let step = match l {
            Letter::U => up_at(r, m),
            Letter::D => down_at(r, m),
        };
        acc = step.mul(&acc).expect("rank shapes agree");
        m += if *l == Letter::U { 1 } else { -1 };
    }
    acc
}

/// `p_n × p_n` matrix of a balanced word at rank `n`.
pub fn word_operator_matrix(w: &UDWord, r: usize, n: usize) -> Result<IntMatrix> {
    if !w.is_balanced() {
        return Err(Error::Invalid(format!("word {w} is not balanced")));
    }
    Ok(raw_word_matrix(w, r, n))
}

/// `p_n × p_n` matrix of `f(U,D)` at rank `n`.
pub fn poly_operator_matrix(f: &WordPolynomial, n: usize) -> IntMatrix {
    let r = f.r();
    let size = rank_size(r, n as i64) as usize;
    let mut acc = IntMatrix::zeros(size, size);
    for (i, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let m = raw_word_matrix(&UDWord::up_down_power(i), r, n);
        acc = acc.add(&m.scale(c)).expect("square of equal size");
    }
    acc
}

/// Eigenvalues `α_0, …, α_n` of `f(U,D)_n`; `α_i = Σ_j β_j (r i)^j`.
pub fn alpha_values(f: &WordPolynomial, n: usize) -> Vec<BigInt> {
    let betas = IntPoly::new(f.betas());
    (0..=n)
        .map(|i| betas.eval(&BigInt::from(f.r() * i)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{char_poly, smith_normal_form};
    use crate::posets::rank::{delta_p, down_matrix, up_matrix};

    fn w(s: &str) -> UDWord {
        s.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn parse_and_balance() {
        assert!(w("UDUD").is_balanced());
        assert!(!w("UUD").is_balanced());
        assert!("UXD".parse::<UDWord>().is_err());
        assert_eq!(w("UUDD").to_string(), "UUDD");
        assert_eq!(UDWord::up_down_power(2), w("UUDD"));
        assert_eq!(w("UDDU").max_descent(), 1);
        assert_eq!(w("DDUU").max_descent(), 0);
        assert_eq!(w("UUDD").max_descent(), 2);
    }

    #[test]
    fn symbolic_forms() {
        let f = symbolic_normal_form(&w("UDUD")).unwrap();
        assert_eq!(f[2], IntPoly::from_i64(&[1]));
        assert_eq!(f[1], IntPoly::from_i64(&[0, 1]));
        assert!(f[0].is_zero());
        let f = symbolic_normal_form(&w("DU")).unwrap();
        assert_eq!(f[1], IntPoly::from_i64(&[1]));
        assert_eq!(f[0], IntPoly::from_i64(&[0, 1]));
        assert!(symbolic_normal_form(&w("UUD")).is_err());
        assert_eq!(symbolic_normal_form(&UDWord::default()).unwrap().len(), 1);
    }

    #[test]
    fn udud_normal_form_r2() {
        let f = word_to_normal_form(&w("UDUD"), 2).unwrap();
        assert_eq!(f.coeffs(), ints(&[0, 2, 1]).as_slice());
        assert_eq!(f.to_string(), "U^2D^2 + 2UD");
    }

    #[test]
    fn betas_round_trip() {
        let f = WordPolynomial::new(1, ints(&[0, 0, 1]));
        assert_eq!(f.betas(), ints(&[0, -1, 1]));
        assert_eq!(WordPolynomial::from_betas(1, &f.betas()), f);
        let g = word_to_normal_form(&w("DDUUUD"), 3).unwrap();
        assert_eq!(WordPolynomial::from_betas(3, &g.betas()), g);
    }

    #[test]
    fn alpha_examples() {
        let f = WordPolynomial::new(1, ints(&[0, 0, 1]));
        assert_eq!(alpha_values(&f, 4), ints(&[0, 0, 2, 6, 12]));
        let ud = WordPolynomial::new(3, ints(&[0, 1]));
        assert_eq!(alpha_values(&ud, 3), ints(&[0, 3, 6, 9]));
        let f = word_to_normal_form(&w("UDUD"), 2).unwrap();
        assert_eq!(alpha_values(&f, 3), ints(&[0, 4, 16, 36]));
    }

    #[test]
    fn small_matrices() {
        let m = word_operator_matrix(&w("UD"), 1, 2).unwrap();
        assert_eq!(m, IntMatrix::from_rows(&[vec![1, 1], vec![1, 1]]));
        assert_eq!(
            word_operator_matrix(&UDWord::default(), 2, 3).unwrap(),
            IntMatrix::identity(10)
        );
        // D at rank 0 is zero, so U D vanishes there
        assert!(word_operator_matrix(&w("UD"), 2, 0).unwrap().is_zero());
        let du = word_operator_matrix(&w("DU"), 3, 0).unwrap();
        assert_eq!(du, IntMatrix::from_rows(&[vec![3]]));
    }

    #[test]
    fn dp2_relation() {
        for r in 1..=3 {
            for n in 0..=6usize {
                let du = down_matrix(r, n + 1).mul(&up_matrix(r, n)).unwrap();
                let ud = up_at(r, n as i64 - 1).mul(&down_matrix(r, n)).unwrap();
                let size = du.rows();
                let want = IntMatrix::identity(size).scale(&BigInt::from(r));
                assert_eq!(du.sub(&ud).unwrap(), want, "r={r} n={n}");
            }
        }
    }

    #[test]
    fn ud_spectrum() {
        for (r, n) in [(1, 5), (2, 3), (3, 2)] {
            let m = word_operator_matrix(&w("UD"), r, n).unwrap();
            let roots: Vec<(BigInt, usize)> = (0..=n)
                .map(|i| (BigInt::from(r * i), delta_p(r, (n - i) as i64) as usize))
                .collect();
            let want = IntPoly::from_roots(roots.iter().map(|(a, m)| (a, *m)));
            assert_eq!(char_poly(&m).unwrap(), want);
        }
    }

    #[test]
    fn both_evaluation_paths_agree() {
        for s in ["UDUD", "DUUD", "DDUU", "UDDU", "DUDU"] {
            for r in 1..=2 {
                let word = w(s);
                let f = word_to_normal_form(&word, r).unwrap();
                assert_eq!(
                    word_operator_matrix(&word, r, 3).unwrap(),
                    poly_operator_matrix(&f, 3),
                    "{s} r={r}"
                );
            }
        }
    }

    #[test]
    fn down_maps_surjective() {
        for n in 1..=5 {
            let s = smith_normal_form(&down_matrix(2, n));
            assert!(s.diagonal.iter().all(One::is_one));
        }
    }
}
