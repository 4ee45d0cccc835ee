//! Cayley graphs of dual abelian groups and the covering induced by
//! restriction to a subgroup.

use critgroup::chartables::{abelian_subgroup_fusion, build_abelian_table, critical_group, RepVector};
use critgroup::sandpile::{cayley_covering, cayley_graph, graph_critical_group};

fn main() -> critgroup::Result<()> {
    let z6 = build_abelian_table(&[6])?;
    let z2 = build_abelian_table(&[2])?;
    let v = RepVector::from_names(&z6, &["chi1", "chi3"])?;
    let g = cayley_graph(&z6, &v)?;
    println!("Cay(Z6^, {{chi1, chi3}}) = {}", g.to_json());
    println!(
        "graph K = {}, representation K = {}",
        graph_critical_group(&g, None)?,
        critical_group(&z6, &v)?
    );
    let fusion = abelian_subgroup_fusion(&z6, &[6], &z2, &[2], &[vec![3]])?;
    let (cov, map) = cayley_covering(&z6, &z2, &fusion, &v)?;
    println!("vertex map {:?}, target {}", cov.vertex_map, cov.target.to_json());
    println!("induced {} → {}, surjective {}", map.source, map.target, map.surjective);
    Ok(())
}
