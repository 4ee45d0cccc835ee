use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::rep::RepVector;
use super::table::CharacterTable;
use crate::cyclotomic::{product, require_integer, CyclotomicInt};
use crate::error::{Error, Result};
use crate::linalg::{cokernel, induced_cokernel_map, AbelianGroup, CokernelMap, IntMatrix};

/// Matrix of `[V]·(−)` on `R(G)`: entry `(i, j)` is `⟨χ_V χ_i, χ_j⟩`, so row
/// `i` decomposes `V ⊗ V_i`.
pub fn tensor_action_matrix(table: &CharacterTable, v: &RepVector) -> Result<IntMatrix> {
    v.check_table(table)?;
    let chi = v.character(table);
    let k = table.num_irreps();
    let mut m = IntMatrix::zeros(k, k);
    for i in 0..k {
        let prod: Vec<CyclotomicInt> = chi
            .iter()
            .zip(&table.characters()[i])
            .map(|(a, b)| a.mul(b))
            .collect();
        for j in 0..k {
            m[(i, j)] = table.inner_product(&prod, &table.characters()[j])?;
        }
    }
    Ok(m)
}

/// `C̃_V = dim(V)·I − T`, with `T` from [`tensor_action_matrix`].
pub fn ctilde(table: &CharacterTable, v: &RepVector) -> Result<IntMatrix> {
    tensor_action_matrix(table, v)?.shifted_negation(&v.dimension(table))
}

/// `C̃_V` as a map acting on column vectors of multiplicities.
pub(crate) fn ctilde_map(table: &CharacterTable, v: &RepVector) -> Result<IntMatrix> {
    Ok(ctilde(table, v)?.transpose())
}

/// Restricts a map `R(A) → R(B)` (acting on columns) to the bases
/// `{[V_i] − dim(V_i)[1]}` of `R_0`. The map must preserve virtual dimension
/// zero.
pub(crate) fn restrict_to_r0(
    phi: &IntMatrix,
    src_dims: &[BigInt],
    src_trivial: usize,
    tgt_trivial: usize,
) -> IntMatrix {
    let rows: Vec<usize> = (0..phi.rows()).filter(|&j| j != tgt_trivial).collect();
    let cols: Vec<usize> = (0..phi.cols()).filter(|&i| i != src_trivial).collect();
    let mut out = IntMatrix::zeros(rows.len(), cols.len());
    for (a, &j) in rows.iter().enumerate() {
        for (b, &i) in cols.iter().enumerate() {
            out[(a, b)] = &phi[(j, i)] - &src_dims[i] * &phi[(j, src_trivial)];
        }
    }
    out
}

/// Relation matrix of `K(V) = R_0(G) / C̃_V(R(G))`: columns are the images
/// `C̃_V[V_i]` for `i` non-trivial, written in the basis
/// `{[V_j] − dim(V_j)[1]}` of `R_0(G)`. This is `C̃_V` with the trivial row and
/// column deleted.
pub fn reduced_critical_matrix(table: &CharacterTable, v: &RepVector) -> Result<IntMatrix> {
    let a = ctilde_map(table, v)?;
    let t = table.trivial_index();
    let keep: Vec<usize> = (0..a.rows()).filter(|&i| i != t).collect();
    Ok(a.submatrix(&keep, &keep))
}

/// True when `χ_V(g) ≠ dim V` off the identity class.
pub fn is_faithful(table: &CharacterTable, v: &RepVector) -> bool {
    let chi = v.character(table);
    let dim = CyclotomicInt::from_int(v.dimension(table));
    (0..chi.len())
        .filter(|&c| c != table.identity_class())
        .all(|c| chi[c] != dim)
}

fn require_faithful(table: &CharacterTable, v: &RepVector) -> Result<()> {
    v.check_table(table)?;
    if !is_faithful(table, v) {
        return Err(Error::NotFaithful(format!(
            "representation {v} of {} is not faithful",
            table.name()
        )));
    }
    Ok(())
}

/// `K(V) = coker(C_V)`, cross-checked against the torsion of `coker(C̃_V)`.
pub fn critical_group(table: &CharacterTable, v: &RepVector) -> Result<AbelianGroup> {
    require_faithful(table, v)?;
    let on_r0 = cokernel(&reduced_critical_matrix(table, v)?);
    let full = cokernel(&ctilde_map(table, v)?);
    if full.free_rank() != 1 {
        return Err(Error::Internal(format!(
            "coker of C̃ has free rank {}, expected 1",
            full.free_rank()
        )));
    }
    if !on_r0.is_finite() || on_r0 != full.torsion() {
        return Err(Error::Internal(format!(
            "critical group paths disagree: {on_r0} vs {}",
            full.torsion()
        )));
    }
    Ok(on_r0)
}

/// `(1/|G|) ∏_{c ≠ e} (dim V − χ_V(c))`, one factor per non-identity class.
pub fn critical_group_order(table: &CharacterTable, v: &RepVector) -> Result<BigInt> {
    require_faithful(table, v)?;
    let chi = v.character(table);
    let dim = CyclotomicInt::from_int(v.dimension(table));
    let factors: Vec<CyclotomicInt> = (0..chi.len())
        .filter(|&c| c != table.identity_class())
        .map(|c| dim.sub(&chi[c]))
        .collect();
    let p = product(&factors);
    let q = p.div_exact(&BigInt::from(table.order())).ok_or_else(|| {
        Error::TableIntegrity(format!("order product {p} not divisible by |G|"))
    })?;
    require_integer(&q, "order formula")
}

/// For every integer character value `a ≠ dim V` taken on `m ≥ 2` classes,
/// the pair `(dim V − a, m − 1)`: `K(V)` contains `(Z/(dim V − a))^{m−1}`.
pub fn repeated_value_subgroups(table: &CharacterTable, v: &RepVector) -> Result<Vec<(BigInt, usize)>> {
    require_faithful(table, v)?;
    let chi = v.character(table);
    let dim = v.dimension(table);
    let mut counts: BTreeMap<BigInt, usize> = BTreeMap::new();
    for x in chi.iter().filter_map(CyclotomicInt::to_integer) {
        if x != dim {
            *counts.entry(x).or_default() += 1;
        }
    }
    let mut out: Vec<(BigInt, usize)> = counts
        .into_iter()
        .filter(|&(_, m)| m >= 2)
        .map(|(a, m)| (&dim - a, m - 1))
        .collect();
    out.sort();
    Ok(out)
}

/// Decomposition of `V ⊗ W`.
pub fn tensor_product(table: &CharacterTable, v: &RepVector, w: &RepVector) -> Result<RepVector> {
    v.check_table(table)?;
    w.check_table(table)?;
    let prod: Vec<CyclotomicInt> = v
        .character(table)
        .iter()
        .zip(w.character(table))
        .map(|(a, b)| a.mul(&b))
        .collect();
    let mult = table.decompose(&prod)?;
    Ok(RepVector(
        mult.iter()
            .map(|m| m.to_i64().ok_or_else(|| Error::Internal("huge multiplicity".into())))
            .collect::<Result<_>>()?,
    ))
}

fn check_permutation(table: &CharacterTable, sigma: &[usize]) -> Result<()> {
    let k = table.num_irreps();
    let mut seen = vec![false; k];
    if sigma.len() != k || sigma.iter().any(|&s| s >= k || std::mem::replace(&mut seen[s], true)) {
        return Err(Error::Invalid("sigma is not a permutation of the irreducibles".into()));
    }
    let dims = table.dims();
    if let Some(i) = (0..k).find(|&i| dims[i] != dims[sigma[i]]) {
        return Err(Error::Dimension(format!(
            "sigma sends {} to {} of different dimension",
            table.irreps()[i],
            table.irreps()[sigma[i]]
        )));
    }
    Ok(())
}

/// `V^σ`, where `sigma[i]` is the image of irreducible `i`.
pub fn twist(table: &CharacterTable, v: &RepVector, sigma: &[usize]) -> Result<RepVector> {
    v.check_table(table)?;
    check_permutation(table, sigma)?;
    let mut out = vec![0; v.len()];
    for (i, &m) in v.0.iter().enumerate() {
        out[sigma[i]] = m;
    }
    Ok(RepVector(out))
}

/// The isomorphism `K(V) → K(V^σ)` induced by permuting irreducibles.
pub fn twist_map_on_critical_groups(
    table: &CharacterTable,
    v: &RepVector,
    sigma: &[usize],
) -> Result<CokernelMap> {
    let tv = twist(table, v, sigma)?;
    require_faithful(table, v)?;
    let k = table.num_irreps();
    let mut p = IntMatrix::zeros(k, k);
    for (i, &s) in sigma.iter().enumerate() {
        p[(s, i)] = BigInt::one();
    }
    let t = table.trivial_index();
    if sigma[t] != t {
        return Err(Error::Invalid("sigma must fix the trivial character".into()));
    }
    let f = restrict_to_r0(&p, &table.dims(), t, t);
    induced_cokernel_map(
        &f,
        &reduced_critical_matrix(table, v)?,
        &reduced_critical_matrix(table, &tv)?,
    )
}

/// Permutation of the irreducibles of `S_6` induced by its outer
/// automorphism: `(5,1)↔(2,2,2)`, `(2,1⁴)↔(3,3)`, `(4,1,1)↔(3,1³)`, all
/// others fixed.
pub fn s6_outer_automorphism(table: &CharacterTable) -> Result<Vec<usize>> {
    let pairs = [
        ("5,1", "2,2,2"),
        ("2,1,1,1,1", "3,3"),
        ("4,1,1", "3,1,1,1"),
    ];
    let mut sigma: Vec<usize> = (0..table.num_irreps()).collect();
    for (a, b) in pairs {
        let ia = table.irrep_index(a);
        let ib = table.irrep_index(b);
        let (Some(ia), Some(ib)) = (ia, ib) else {
            return Err(Error::Invalid(format!("{} is not the S6 table", table.name())));
        };
        sigma.swap(ia, ib);
    }
    check_permutation(table, &sigma)?;
    Ok(sigma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartables::builders::{build_abelian_table, build_dihedral_table, build_symmetric_table};
    use crate::linalg::smith_normal_form;

    fn s4_perm() -> (CharacterTable, RepVector) {
        let t = build_symmetric_table(4).unwrap();
        let v = RepVector::from_names(&t, &["4", "3,1"]).unwrap();
        (t, v)
    }

    #[test]
    fn s4_permutation_representation() {
        let (t, v) = s4_perm();
        assert_eq!(v.dimension(&t), BigInt::from(4));
        assert!(is_faithful(&t, &v));
        let c = ctilde(&t, &v).unwrap();
        let printed = IntMatrix::from_rows(&[
            vec![3, -1, 0, 0, 0],
            vec![-1, 2, -1, -1, 0],
            vec![0, -1, 3, -1, 0],
            vec![0, -1, -1, 2, -1],
            vec![0, 0, 0, -1, 3],
        ]);
        assert_eq!(c, printed);
        let d: Vec<i64> = smith_normal_form(&c).diagonal.iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(d, vec![1, 1, 1, 4, 0]);
        assert_eq!(critical_group(&t, &v).unwrap().factors_i64().unwrap(), vec![4]);
        assert_eq!(critical_group_order(&t, &v).unwrap(), BigInt::from(4));
        assert_eq!(
            repeated_value_subgroups(&t, &v).unwrap(),
            vec![(BigInt::from(4), 1)]
        );
    }

    #[test]
    fn trivial_rep_acts_as_identity() {
        let t = build_symmetric_table(4).unwrap();
        let one = RepVector::irreducible(&t, t.trivial_index());
        assert_eq!(tensor_action_matrix(&t, &one).unwrap(), IntMatrix::identity(5));
        assert!(!is_faithful(&t, &one));
        assert!(matches!(critical_group(&t, &one), Err(Error::NotFaithful(_))));
        let reg = RepVector::regular(&t);
        assert!(is_faithful(&t, &reg));
    }

    #[test]
    fn dihedral_example() {
        let t = build_dihedral_table(5).unwrap();
        for psi in ["psi1", "psi2"] {
            let v = RepVector::from_names(&t, &[psi, "sign"]).unwrap();
            assert_eq!(critical_group(&t, &v).unwrap().factors_i64().unwrap(), vec![2]);
            assert_eq!(critical_group_order(&t, &v).unwrap(), BigInt::from(2));
        }
    }

    #[test]
    fn small_z2_cases() {
        let t = build_abelian_table(&[2]).unwrap();
        let reg = RepVector::regular(&t);
        assert_eq!(critical_group_order(&t, &reg).unwrap(), BigInt::one());
        assert!(critical_group(&t, &reg).unwrap().is_trivial());
        let double_sign = RepVector::new(vec![0, 2]);
        assert_eq!(critical_group_order(&t, &double_sign).unwrap(), BigInt::from(2));
        assert_eq!(critical_group(&t, &double_sign).unwrap().factors_i64().unwrap(), vec![2]);
    }

    #[test]
    fn tensor_matrices_multiply() {
        let t = build_symmetric_table(4).unwrap();
        let v = RepVector::from_names(&t, &["3,1"]).unwrap();
        let w = RepVector::from_names(&t, &["2,2", "1,1,1,1"]).unwrap();
        let vw = tensor_product(&t, &v, &w).unwrap();
        let lhs = tensor_action_matrix(&t, &v)
            .unwrap()
            .mul(&tensor_action_matrix(&t, &w).unwrap())
            .unwrap();
        assert_eq!(lhs, tensor_action_matrix(&t, &vw).unwrap());
    }

    #[test]
    fn s6_twists() {
        let t = build_symmetric_table(6).unwrap();
        let sigma = s6_outer_automorphism(&t).unwrap();
        let v = RepVector::from_names(&t, &["5,1"]).unwrap();
        let tv = twist(&t, &v, &sigma).unwrap();
        assert_eq!(tv, RepVector::from_names(&t, &["2,2,2"]).unwrap());
        let g = critical_group(&t, &v).unwrap();
        assert_eq!(g.factors_i64().unwrap(), vec![6, 6, 120]);
        assert_eq!(critical_group(&t, &tv).unwrap(), g);
        let map = twist_map_on_critical_groups(&t, &v, &sigma).unwrap();
        assert!(map.is_isomorphism());
        let id: Vec<usize> = (0..t.num_irreps()).collect();
        assert_eq!(twist(&t, &v, &id).unwrap(), v);
        let mut bad = id.clone();
        bad.swap(0, 1);
        assert!(twist(&t, &v, &bad).is_err());
    }
}
