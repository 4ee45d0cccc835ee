//! Sweeps the conjectured divisor list for K(V(U^kD^k)_n) over small cells.

use critgroup::towers::{check_conjecture_56, n_minus_two_closed_form};

fn main() -> critgroup::Result<()> {
    for (r, nmax) in [(1, 6), (2, 4)] {
        for n in 1..=nmax {
            for k in 1..=n {
                let rep = check_conjecture_56(r, n, k)?;
                let inv: Vec<String> = rep.computed_invariant_factors.iter().map(|x| x.0.to_string()).collect();
                println!(
                    "r={r} n={n} k={k}: {} K = [{}]",
                    if rep.matches { "match   " } else { "MISMATCH" },
                    inv.join(", ")
                );
            }
        }
    }
    for n in 4..=6 {
        println!("k = n − 2 closed form, n = {n}: {}", n_minus_two_closed_form(n)?);
    }
    Ok(())
}
