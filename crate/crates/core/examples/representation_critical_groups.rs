//! Critical groups of faithful representations, the order formula, and the
//! outer automorphism of S6 acting on them.

use critgroup::chartables::{
    build_dihedral_table, build_symmetric_table, critical_group, critical_group_order, ctilde,
    repeated_value_subgroups, s6_outer_automorphism, twist, twist_map_on_critical_groups,
    RepVector,
};

fn main() -> critgroup::Result<()> {
    let s4 = build_symmetric_table(4)?;
    let perm = RepVector::from_names(&s4, &["4", "3,1"])?;
    println!("S4 permutation rep: C̃ = {}", ctilde(&s4, &perm)?.to_json());
    println!(
        "  K = {}, order formula {}, subgroups {:?}",
        critical_group(&s4, &perm)?,
        critical_group_order(&s4, &perm)?,
        repeated_value_subgroups(&s4, &perm)?
    );

    let d5 = build_dihedral_table(5)?;
    let v = RepVector::from_names(&d5, &["psi1", "sign"])?;
    println!("D5 psi1 + sign: K = {}", critical_group(&d5, &v)?);

    let s6 = build_symmetric_table(6)?;
    let sigma = s6_outer_automorphism(&s6)?;
    for name in ["5,1", "2,1,1,1,1", "4,1,1"] {
        let v = RepVector::from_names(&s6, &[name])?;
        let w = twist(&s6, &v, &sigma)?;
        let map = twist_map_on_critical_groups(&s6, &v, &sigma)?;
        println!(
            "S6 V({name}): K = {}; twisted rep {w}: K = {}; isomorphism: {}",
            critical_group(&s6, &v)?,
            critical_group(&s6, &w)?,
            map.is_isomorphism()
        );
    }
    Ok(())
}
