use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::abelian::AbelianGroup;
use super::matrix::IntMatrix;

/// `P · M · Q = diag(diagonal)` with `P`, `Q` unimodular.
///
/// `diagonal` has `min(rows, cols)` entries, is nonnegative, forms a
/// divisibility chain and keeps all zeros at the end.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub p: IntMatrix,
    pub q: IntMatrix,
    pub diagonal: Vec<BigInt>,
    p_inv: IntMatrix,
    rows: usize,
    cols: usize,
}

impl SmithDecomposition {
    /// Inverse of `P`. Column `i` is the ambient lattice vector of the `i`-th
    /// Smith generator of the cokernel.
    pub fn p_inverse(&self) -> &IntMatrix {
        &self.p_inv
    }

    pub fn source_shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|d| !d.is_zero()).count()
    }

    pub fn ones_count(&self) -> usize {
        self.diagonal.iter().filter(|d| d.is_one()).count()
    }

    pub fn zeros_count(&self) -> usize {
        self.diagonal.iter().filter(|d| d.is_zero()).count()
    }

    /// Diagonal padded with zeros up to the row count: one entry per cyclic
    /// summand (including units) of `Z^rows / im(M)`.
    pub fn cokernel_factors(&self) -> Vec<BigInt> {
        let mut v = self.diagonal.clone();
        v.resize(self.rows, BigInt::zero());
        v
    }

    pub fn cokernel(&self) -> AbelianGroup {
        AbelianGroup::from_chain(&self.cokernel_factors())
    }

    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.rows, self.cols);
        for (i, x) in self.diagonal.iter().enumerate() {
            d[(i, i)] = x.clone();
        }
        d
    }
}

struct Work {
    a: IntMatrix,
    p: IntMatrix,
    p_inv: IntMatrix,
    q: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.p.swap_rows(i, j);
        self.p_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.q.swap_cols(i, j);
    }

    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_row_multiple(dst, src, c);
        self.p.add_row_multiple(dst, src, c);
        self.p_inv.add_col_multiple(src, dst, &-c);
    }

    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_col_multiple(dst, src, c);
        self.q.add_col_multiple(dst, src, c);
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        self.p.negate_row(i);
        // column i of P^{-1} flips too
        let m1 = BigInt::from(-1);
        let n = self.p_inv.rows();
        for r in 0..n {
            self.p_inv[(r, i)] *= &m1;
        }
    }

    fn combine_cols(&mut self, a: usize, b: usize, coeffs: [&BigInt; 4]) {
        self.a.combine_cols(a, b, coeffs);
        self.q.combine_cols(a, b, coeffs);
    }

    /// Position of the nonzero entry of least absolute value in the block
    /// `[t.., t..]`, ties broken row-major.
    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                match best {
                    Some((bi, bj)) if self.a[(bi, bj)].magnitude() <= x.magnitude() => {}
                    _ => best = Some((i, j)),
                }
            }
        }
        best
    }
}

/// Smith normal form of an arbitrary integer matrix.
///
/// Pivoting takes the nonzero entry of least absolute value in the remaining
/// block (row-major tie break); the divisibility chain is enforced afterwards
/// with explicit unimodular gcd/lcm fix-ups of diagonal pairs.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        p: IntMatrix::identity(rows),
        p_inv: IntMatrix::identity(rows),
        q: IntMatrix::identity(cols),
    };
    let k = rows.min(cols);

    for t in 0..k {
        let Some((pi, pj)) = w.min_pivot(t) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if w.a[(i, t)].is_zero() {
                    continue;
                }
                let quo = &w.a[(i, t)] / &w.a[(t, t)];
                w.add_row(i, t, &-quo);
                clean &= w.a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if w.a[(t, j)].is_zero() {
                    continue;
                }
                let quo = &w.a[(t, j)] / &w.a[(t, t)];
                w.add_col(j, t, &-quo);
                clean &= w.a[(t, j)].is_zero();
            }
            if clean {
                break;
            }
            // a remainder survived; it is smaller than the pivot
            let (pi, pj) = w.min_pivot(t).expect("nonzero remainder exists");
            w.swap_rows(t, pi);
            w.swap_cols(t, pj);
        }
    }

    for i in 0..k {
        if w.a[(i, i)].is_negative() {
            w.negate_row(i);
        }
    }

    for i in 0..k {
        for j in i + 1..k {
            if !divides(&w.a[(i, i)], &w.a[(j, j)]) {
                gcd_lcm_fixup(&mut w, i, j);
            }
        }
    }

    for i in 0..k {
        if w.a[(i, i)].is_negative() {
            w.negate_row(i);
        }
    }

    let diagonal = (0..k).map(|i| w.a[(i, i)].clone()).collect();
    SmithDecomposition {
        p: w.p,
        q: w.q,
        diagonal,
        p_inv: w.p_inv,
        rows,
        cols,
    }
}

/// `a | b` with the convention that only 0 is divisible by 0.
pub(crate) fn divides(a: &BigInt, b: &BigInt) -> bool {
    if a.is_zero() {
        b.is_zero()
    } else {
        (b % a).is_zero()
    }
}

/// Extended gcd with nonnegative gcd: returns (g, s, t), g = s·a + t·b.
pub(crate) fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Turns diag entries (a at i, b at j) into (gcd, lcm) by unimodular moves.
fn gcd_lcm_fixup(w: &mut Work, i: usize, j: usize) {
    let a = w.a[(i, i)].clone();
    let b = w.a[(j, j)].clone();
    let (g, s, t) = ext_gcd(&a, &b);
    debug_assert!(!g.is_zero());
    // row i picks up b in column j
    w.add_row(i, j, &BigInt::one());
    let bg = &b / &g;
    let ag = &a / &g;
    let neg_bg = -&bg;
    w.combine_cols(i, j, [&s, &t, &neg_bg, &ag]);
    // row j now reads (t·b, a·b/g); clear the first entry
    let c = -(&t * &bg);
    w.add_row(j, i, &c);
    debug_assert!(w.a[(i, j)].is_zero() && w.a[(j, i)].is_zero());
}
