use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::builders::abelian_elements;
use super::critical::{reduced_critical_matrix, restrict_to_r0};
use super::rep::RepVector;
use super::table::CharacterTable;
use crate::cyclotomic::CyclotomicInt;
use crate::error::{Error, Result};
use crate::linalg::{induced_cokernel_map, CokernelMap, IntMatrix};
use crate::posets::Partition;

/// Sends each class of a subgroup `H` to the class of `G` containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFusion {
    pub fusion: Vec<usize>,
    #[serde(default)]
    pub index: u64,
}

impl ClassFusion {
    /// Validates against the two tables and fills in the index.
    pub fn new(g: &CharacterTable, h: &CharacterTable, fusion: Vec<usize>) -> Result<Self> {
        if fusion.len() != h.classes().len() {
            return Err(Error::Invalid(format!(
                "fusion has {} entries, {} has {} classes",
                fusion.len(),
                h.name(),
                h.classes().len()
            )));
        }
        if fusion.iter().any(|&c| c >= g.classes().len()) {
            return Err(Error::Invalid("fusion points past the group's classes".into()));
        }
        if fusion[h.identity_class()] != g.identity_class() {
            return Err(Error::Invalid("fusion does not send identity to identity".into()));
        }
        let nontrivial_to_identity = (0..fusion.len())
            .any(|c| c != h.identity_class() && fusion[c] == g.identity_class());
        if nontrivial_to_identity {
            return Err(Error::Invalid("fusion sends a non-identity class to the identity".into()));
        }
        if g.order() % h.order() != 0 {
            return Err(Error::Invalid(format!(
                "|{}| = {} does not divide |{}| = {}",
                h.name(),
                h.order(),
                g.name(),
                g.order()
            )));
        }
        let f = ClassFusion {
            fusion,
            index: g.order() / h.order(),
        };
        restriction_matrix(g, h, &f)?;
        Ok(f)
    }

    pub fn from_json(g: &CharacterTable, h: &CharacterTable, s: &str) -> Result<Self> {
        let raw: ClassFusion = serde_json::from_str(s)?;
        ClassFusion::new(g, h, raw.fusion)
    }

    pub fn identity(g: &CharacterTable) -> Self {
        ClassFusion {
            fusion: (0..g.classes().len()).collect(),
            index: 1,
        }
    }
}

/// `S_{n−1} < S_n`: a cycle type gains a fixed point.
pub fn symmetric_fusion(g: &CharacterTable, h: &CharacterTable) -> Result<ClassFusion> {
    let fusion = h
        .classes()
        .iter()
        .map(|c| {
            let mu: Partition = c.name.parse()?;
            let mut parts = mu.parts().to_vec();
            parts.push(1);
            let name = Partition::new(parts)?.to_string();
            g.class_index(&name)
                .ok_or_else(|| Error::Invalid(format!("class {name} missing from {}", g.name())))
        })
        .collect::<Result<Vec<_>>>()?;
    ClassFusion::new(g, h, fusion)
}

/// `C_n < D_n`: rotation `r^a` lies in the class of `r^{min(a, n−a)}`.
pub fn cyclic_in_dihedral_fusion(g: &CharacterTable, h: &CharacterTable) -> Result<ClassFusion> {
    let n = h.classes().len();
    if g.order() != 2 * n as u64 {
        return Err(Error::Invalid("expected C_n inside D_n".into()));
    }
    let fusion = (0..n).map(|a| a.min(n - a) % n).collect();
    ClassFusion::new(g, h, fusion)
}

/// Subgroup of an abelian group given by generator images: row `j` of
/// `images` is the image of the `j`-th generator of `⊕ Z/h_j` in `⊕ Z/g_i`.
pub fn abelian_subgroup_fusion(
    g: &CharacterTable,
    g_factors: &[usize],
    h: &CharacterTable,
    h_factors: &[usize],
    images: &[Vec<usize>],
) -> Result<ClassFusion> {
    if images.len() != h_factors.len() || images.iter().any(|r| r.len() != g_factors.len()) {
        return Err(Error::Dimension("generator image matrix has the wrong shape".into()));
    }
    let g_elems = abelian_elements(g_factors);
    let fusion = abelian_elements(h_factors)
        .iter()
        .map(|c| {
            let img: Vec<usize> = (0..g_factors.len())
                .map(|i| {
                    let s: usize = c.iter().zip(images).map(|(cj, row)| cj * row[i]).sum();
                    s % g_factors[i]
                })
                .collect();
            g_elems.iter().position(|e| *e == img).expect("element exists")
        })
        .collect();
    ClassFusion::new(g, h, fusion)
}

/// Branching matrix: entry `(k, i)` is the multiplicity of the `k`-th
/// irreducible of `H` in the restriction of the `i`-th irreducible of `G`.
pub fn restriction_matrix(
    g: &CharacterTable,
    h: &CharacterTable,
    fusion: &ClassFusion,
) -> Result<IntMatrix> {
    let mut m = IntMatrix::zeros(h.num_irreps(), g.num_irreps());
    for i in 0..g.num_irreps() {
        let res: Vec<CyclotomicInt> = fusion
            .fusion
            .iter()
            .map(|&c| g.value(i, c).clone())
            .collect();
        let mult = h.decompose(&res).map_err(|e| {
            Error::Invalid(format!("restriction of {} is not a character: {e}", g.irreps()[i]))
        })?;
        for (k, x) in mult.into_iter().enumerate() {
            if x.is_negative() {
                return Err(Error::Invalid(format!(
                    "restriction of {} has negative multiplicity",
                    g.irreps()[i]
                )));
            }
            m[(k, i)] = x;
        }
    }
    Ok(m)
}

/// `Res V` as a representation of `H`.
pub fn restrict_rep(
    g: &CharacterTable,
    h: &CharacterTable,
    fusion: &ClassFusion,
    v: &RepVector,
) -> Result<RepVector> {
    v.check_table(g)?;
    let r = restriction_matrix(g, h, fusion)?;
    let col = IntMatrix::new(v.len(), 1, v.0.iter().map(|&x| BigInt::from(x)).collect())?;
    let out = r.mul(&col)?;
    Ok(RepVector(
        out.entries()
            .iter()
            .map(|x| i64::try_from(x).expect("small multiplicity"))
            .collect(),
    ))
}

/// `Res‾ : K(V) → K(Res V)`.
pub fn res_map_on_critical_groups(
    g: &CharacterTable,
    h: &CharacterTable,
    fusion: &ClassFusion,
    v: &RepVector,
) -> Result<CokernelMap> {
    let r = restriction_matrix(g, h, fusion)?;
    let res_v = restrict_rep(g, h, fusion, v)?;
    let f = restrict_to_r0(&r, &g.dims(), g.trivial_index(), h.trivial_index());
    induced_cokernel_map(
        &f,
        &reduced_critical_matrix(g, v)?,
        &reduced_critical_matrix(h, &res_v)?,
    )
}

/// `Ind‾ : K(Res V) → K(V)`; induction is the transpose of restriction.
pub fn ind_map_on_critical_groups(
    g: &CharacterTable,
    h: &CharacterTable,
    fusion: &ClassFusion,
    v: &RepVector,
) -> Result<CokernelMap> {
    let ind = restriction_matrix(g, h, fusion)?.transpose();
    let res_v = restrict_rep(g, h, fusion, v)?;
    let f = restrict_to_r0(&ind, &h.dims(), h.trivial_index(), g.trivial_index());
    induced_cokernel_map(
        &f,
        &reduced_critical_matrix(h, &res_v)?,
        &reduced_critical_matrix(g, v)?,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartables::builders::{build_abelian_table, build_dihedral_table, build_symmetric_table};
    use crate::chartables::critical::critical_group;
    use crate::posets::down_matrix;

    #[test]
    fn s4_to_s3_branching() {
        let g = build_symmetric_table(4).unwrap();
        let h = build_symmetric_table(3).unwrap();
        let f = symmetric_fusion(&g, &h).unwrap();
        let v = RepVector::from_names(&g, &["3,1"]).unwrap();
        let res = restrict_rep(&g, &h, &f, &v).unwrap();
        assert_eq!(res, RepVector::from_names(&h, &["3", "2,1"]).unwrap());
    }

    #[test]
    fn branching_is_the_down_map() {
        // tables list partitions in descending order, the poset ascending
        for n in 2..=6 {
            let g = build_symmetric_table(n).unwrap();
            let h = build_symmetric_table(n - 1).unwrap();
            let r = restriction_matrix(&g, &h, &symmetric_fusion(&g, &h).unwrap()).unwrap();
            let rows: Vec<usize> = (0..r.rows()).rev().collect();
            let cols: Vec<usize> = (0..r.cols()).rev().collect();
            assert_eq!(r.submatrix(&rows, &cols), *down_matrix(1, n), "n={n}");
        }
    }

    #[test]
    fn dihedral_to_cyclic() {
        let g = build_dihedral_table(5).unwrap();
        let h = build_abelian_table(&[5]).unwrap();
        let f = cyclic_in_dihedral_fusion(&g, &h).unwrap();
        let psi = RepVector::from_names(&g, &["psi1"]).unwrap();
        assert_eq!(
            restrict_rep(&g, &h, &f, &psi).unwrap(),
            RepVector::from_names(&h, &["chi1", "chi4"]).unwrap()
        );
        let v = RepVector::from_names(&g, &["psi1", "sign"]).unwrap();
        let res_v = restrict_rep(&g, &h, &f, &v).unwrap();
        assert_eq!(critical_group(&h, &res_v).unwrap().factors_i64().unwrap(), vec![5]);
        let map = res_map_on_critical_groups(&g, &h, &f, &v).unwrap();
        assert_eq!(map.source.factors_i64().unwrap(), vec![2]);
        assert_eq!(map.target.factors_i64().unwrap(), vec![5]);
        assert!(!map.surjective);
        let ind = ind_map_on_critical_groups(&g, &h, &f, &v).unwrap();
        assert_eq!(ind.source.factors_i64().unwrap(), vec![5]);
    }

    #[test]
    fn z6_to_z2() {
        let g = build_abelian_table(&[6]).unwrap();
        let h = build_abelian_table(&[2]).unwrap();
        let f = abelian_subgroup_fusion(&g, &[6], &h, &[2], &[vec![3]]).unwrap();
        assert_eq!(f.fusion, vec![0, 3]);
        assert_eq!(f.index, 3);
        let v = RepVector::from_names(&g, &["chi1", "chi3"]).unwrap();
        let res = res_map_on_critical_groups(&g, &h, &f, &v).unwrap();
        assert!(res.surjective);
        let ind = ind_map_on_critical_groups(&g, &h, &f, &v).unwrap();
        assert!(ind.injective);
    }

    #[test]
    fn identity_fusion_gives_identity_map() {
        let g = build_symmetric_table(4).unwrap();
        let v = RepVector::from_names(&g, &["4", "3,1"]).unwrap();
        let map = res_map_on_critical_groups(&g, &g, &ClassFusion::identity(&g), &v).unwrap();
        assert!(map.is_identity());
    }

    #[test]
    fn rejects_bad_fusion() {
        let g = build_symmetric_table(4).unwrap();
        let h = build_symmetric_table(3).unwrap();
        assert!(ClassFusion::new(&g, &h, vec![0, 0, 0]).is_err());
        assert!(ClassFusion::from_json(&g, &h, r#"{"fusion":[0,1,3]}"#).is_ok());
        assert!(ClassFusion::from_json(&g, &h, r#"{"fusion":[1,1,3]}"#).is_err());
    }
}
