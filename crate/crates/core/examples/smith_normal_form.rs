//! Smith normal form with transforms, cokernels and determinantal divisors.

use critgroup::linalg::{cokernel, minors_gcd, smith_normal_form, IntMatrix};

fn main() -> critgroup::Result<()> {
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let snf = smith_normal_form(&m);
    println!("M = {}", m.to_json());
    println!("diagonal: {:?}", snf.diagonal.iter().map(|x| x.to_string()).collect::<Vec<_>>());
    // P·M·Q = S
    let s = snf.p.mul(&m)?.mul(&snf.q)?;
    println!("P·M·Q = {}", s.to_json());
    println!("coker M = {}", cokernel(&m));
    for k in 1..=3 {
        println!("gcd of {k}x{k} minors: {}", minors_gcd(&m, k)?);
    }
    let big = IntMatrix::from_diagonal(&[4, 6, 0]);
    println!("coker diag(4, 6, 0) = {}", cokernel(&big));
    Ok(())
}
