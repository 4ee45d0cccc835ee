//! Counting unit invariant factors of C̃ for V(w)_n.

use critgroup::towers::{ones_count, unitriangular_submatrix};

fn main() -> critgroup::Result<()> {
    for (r, w, n) in [(2, "UDUD", 3), (3, "DUUD", 3), (1, "UUDD", 7), (1, "UDUD", 7)] {
        let rep = ones_count(r, &w.parse()?, n)?;
        println!(
            "r={r} w={w} n={n}: ones = {}, predicted {:?}, consistent {}",
            rep.ones_count, rep.predicted, rep.consistent
        );
    }
    let u = unitriangular_submatrix(2, 3, 2)?;
    println!("unitriangular witness rows {:?} cols {:?} verified {}", u.rows, u.cols, u.verified);
    Ok(())
}
