//! Maps between critical groups induced by restriction and induction.

use critgroup::chartables::{
    build_abelian_table, build_dihedral_table, build_symmetric_table, cyclic_in_dihedral_fusion,
    ind_map_on_critical_groups, res_map_on_critical_groups, restriction_matrix, symmetric_fusion,
    RepVector,
};

fn main() -> critgroup::Result<()> {
    let g = build_dihedral_table(5)?;
    let h = build_abelian_table(&[5])?;
    let f = cyclic_in_dihedral_fusion(&g, &h)?;
    let v = RepVector::from_names(&g, &["psi1", "sign"])?;
    let res = res_map_on_critical_groups(&g, &h, &f, &v)?;
    println!(
        "Res: {} → {}, matrix {}, surjective {}",
        res.source, res.target, res.matrix.to_json(), res.surjective
    );
    let ind = ind_map_on_critical_groups(&g, &h, &f, &v)?;
    println!("Ind: {} → {}, injective {}", ind.source, ind.target, ind.injective);

    let s5 = build_symmetric_table(5)?;
    let s4 = build_symmetric_table(4)?;
    let fus = symmetric_fusion(&s5, &s4)?;
    println!("S5 → S4 branching {}", restriction_matrix(&s5, &s4, &fus)?.to_json());
    let v = RepVector::from_names(&s5, &["5", "4,1"])?;
    let res = res_map_on_critical_groups(&s5, &s4, &fus, &v)?;
    println!("Res on the S5 permutation rep: {} → {}, surjective {}", res.source, res.target, res.surjective);
    Ok(())
}
