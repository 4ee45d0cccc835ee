//! Exact character tables: symmetric groups via Murnaghan–Nakayama,
//! dihedral and abelian groups, and the JSON round trip.

use critgroup::chartables::{build_dihedral_table, build_symmetric_table, builtin_table, CharacterTable};

fn print(t: &CharacterTable) {
    let classes: Vec<&str> = t.classes().iter().map(|c| c.name.as_str()).collect();
    println!("{} (order {}), classes {:?}", t.name(), t.order(), classes);
    for (name, row) in t.irreps().iter().zip(t.characters()) {
        let vals: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        println!("  {name:>10}: {}", vals.join("  "));
    }
}

fn main() -> critgroup::Result<()> {
    print(&build_symmetric_table(4)?);
    print(&build_dihedral_table(5)?);
    print(&builtin_table("Z2xZ4")?);
    let s6 = build_symmetric_table(6)?;
    let back = CharacterTable::from_json(&s6.to_json())?;
    println!("S6 survives JSON: {}", back.characters() == s6.characters());
    Ok(())
}
