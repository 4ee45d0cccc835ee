//! Critical groups of V(f)_n for the wreath-product towers realizing Y^r.

use critgroup::posets::{UDWord, WordPolynomial};
use critgroup::towers::{gen_perm_rep_critical_group, structure_bounds, tower_critical_group, tower_rep};

fn main() -> critgroup::Result<()> {
    for (r, nmax) in [(1, 7), (2, 4), (3, 3)] {
        let ud = WordPolynomial::from_word(&"UD".parse()?, r)?;
        for n in 1..=nmax {
            println!(
                "r={r} n={n}: K(V(UD)) = {}   closed form {}",
                tower_critical_group(&ud, n)?,
                gen_perm_rep_critical_group(r, n)
            );
        }
    }
    let f = WordPolynomial::from_word(&UDWord::up_down_power(3), 1)?;
    let rep = tower_rep(&f, 5)?;
    let b = structure_bounds(&f, 5)?;
    println!("V(U^3D^3)_5 has dimension {}", rep.dimension);
    println!("  order formula {}, K = {}", b.order.0, tower_critical_group(&f, 5)?);
    let g = WordPolynomial::parse_coeffs(2, "0,3,1")?;
    println!("f = {g} at r=2, n=3: K = {}", tower_critical_group(&g, 3)?);
    Ok(())
}
