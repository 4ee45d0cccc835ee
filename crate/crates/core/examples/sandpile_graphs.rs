//! Critical groups of directed multigraphs and the matrix-tree theorem.

use critgroup::sandpile::{graph_critical_group, laplacian, spanning_tree_count, Digraph};

fn main() -> critgroup::Result<()> {
    for (name, g) in [
        ("undirected 5-cycle", Digraph::undirected_cycle(5)),
        ("directed 5-cycle", Digraph::directed_cycle(5)),
    ] {
        println!(
            "{name}: K = {}, trees = {}",
            graph_critical_group(&g, None)?,
            spanning_tree_count(&g, None)?
        );
    }
    let json = r#"{"vertices":["s","a","b","c"],
        "edges":[["a","s",1],["a","b",2],["b","c",1],["c","a",1],["b","s",1]],
        "sink":"s"}"#;
    let g = Digraph::from_json(json)?;
    println!("Laplacian {}", laplacian(&g).to_json());
    println!("K = {}, trees = {}", graph_critical_group(&g, None)?, spanning_tree_count(&g, None)?);
    Ok(())
}
