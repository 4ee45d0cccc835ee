use num_traits::{One, Zero};
use serde::Serialize;

use super::tower_rep;
use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form, IntMatrix};
use crate::posets::{poly_operator_matrix, rank_basis, rank_size, UDWord, WordPolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Prediction {
    Exact(u64),
    Bounds(u64, u64),
}

impl Prediction {
    pub fn admits(&self, x: u64) -> bool {
        match *self {
            Prediction::Exact(v) => x == v,
            Prediction::Bounds(lo, hi) => lo <= x && x <= hi,
        }
    }
}

/// Rows `S_k`, columns `T_k` and whether `M_{S_k,T_k}` is lower unitriangular.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Unitriangular {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub verified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct OnesReport {
    pub word: String,
    pub normal_form: String,
    pub r: usize,
    pub n: usize,
    pub k: usize,
    pub ones_count: u64,
    pub predicted: Prediction,
    pub witness: Unitriangular,
    pub consistent: bool,
}

fn witness_sets(r: usize, n: usize, k: usize) -> (Vec<usize>, Vec<usize>) {
    let basis = rank_basis(r, n);
    let mut rows = Vec::new();
    let mut cols = Vec::new();
    for (i, x) in basis.elements().iter().enumerate() {
        if x.component(r - 1).ones() >= k {
            rows.push(i);
        }
        if x.component(0).conjugate().ones() >= k {
            cols.push(i);
        }
    }
    (rows, cols)
}

fn is_lower_unitriangular(m: &IntMatrix) -> bool {
    m.is_square()
        && (0..m.rows()).all(|i| {
            m[(i, i)].is_one() && (i + 1..m.cols()).all(|j| m[(i, j)].is_zero())
        })
}

fn check_witness(m: &IntMatrix, r: usize, n: usize, k: usize) -> Unitriangular {
    let (rows, cols) = witness_sets(r, n, k);
    let verified = rows.len() == cols.len() && is_lower_unitriangular(&m.submatrix(&rows, &cols));
    Unitriangular { rows, cols, verified }
}

/// The index sets `S_k = {λ : λ^{(r)} has ≥ k ones}` and
/// `T_k = {λ : (λ^{(1)})′ has ≥ k ones}` in ascending r-lex order, with a
/// check that `U^kD^k` restricted to them is lower unitriangular.
pub fn unitriangular_submatrix(r: usize, n: usize, k: usize) -> Result<Unitriangular> {
    if k > n {
        return Err(Error::Invalid(format!("k = {k} exceeds n = {n}")));
    }
    let mut c = vec![num_bigint::BigInt::zero(); k + 1];
    c[k] = num_bigint::BigInt::one();
    let m = poly_operator_matrix(&WordPolynomial::new(r, c), n);
    Ok(check_witness(&m, r, n, k))
}

/// Counts unit invariant factors of `C̃` for `V(w)_n` and attaches the
/// predicted value.
pub fn ones_count(r: usize, w: &UDWord, n: usize) -> Result<OnesReport> {
    if r == 0 {
        return Err(Error::Invalid("r must be positive".into()));
    }
    if !w.is_balanced() || w.is_empty() {
        return Err(Error::Invalid(format!("word {w:?} must be nonempty and balanced")));
    }
    let k = w.half_length();
    if k > n {
        return Err(Error::Invalid(format!("word of length {} exceeds rank {n}", 2 * k)));
    }
    let f = WordPolynomial::from_word(w, r)?;
    let rep = tower_rep(&f, n)?;
    let snf = smith_normal_form(&rep.ctilde());
    let ones = snf.ones_count() as u64;
    let p = |m: usize| rank_size(r, m as i64);
    let pure = f.coeffs().len() == k + 1 && f.c(k).is_one() && f.ell() == Some(k);
    let predicted = if r >= 2 || pure {
        Prediction::Exact(p(n - k))
    } else {
        let ell = f.ell().expect("nonzero normal form");
        Prediction::Bounds(p(n - k), p(n - ell))
    };
    let witness = check_witness(&rep.operator, r, n, k);
    Ok(OnesReport {
        word: w.to_string(),
        normal_form: f.to_string(),
        r,
        n,
        k,
        ones_count: ones,
        predicted,
        consistent: predicted.admits(ones),
        witness,
    })
}
