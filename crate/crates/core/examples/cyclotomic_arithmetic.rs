//! Exact arithmetic in cyclotomic integers.

use critgroup::cyclotomic::{cyclotomic_polynomial, CyclotomicInt};
use num_bigint::BigInt;

fn main() {
    let z5 = CyclotomicInt::zeta_power(5, 1);
    let golden = z5.add(&z5.conj());
    println!("ζ5 + ζ5⁻¹ = {golden}");
    println!("(ζ5 + ζ5⁻¹)² + (ζ5 + ζ5⁻¹) = {}", golden.mul(&golden).add(&golden));
    let z3 = CyclotomicInt::zeta_power(3, 1);
    let mixed = z3.add(&CyclotomicInt::zeta_power(4, 1));
    println!("ζ3 + i lives in conductor {}: {mixed}", mixed.conductor());
    let sum: CyclotomicInt = (0..7).fold(CyclotomicInt::zero(), |a, k| a.add(&CyclotomicInt::zeta_power(7, k)));
    println!("Σ ζ7^k = {sum} (integer: {:?})", sum.to_integer());
    println!("Φ12 = {:?}", cyclotomic_polynomial(12).coeffs());
    let six = CyclotomicInt::from_int(6).mul(&z5);
    println!("6ζ5 / 3 = {}", six.div_exact(&BigInt::from(3)).expect("divisible"));
}
