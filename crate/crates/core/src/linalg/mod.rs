//! Exact integer linear algebra: Smith normal form, cokernels, characteristic
//! polynomials, minors and maps induced between cokernels.

mod abelian;
mod cokernel_map;
mod matrix;
mod ops;
mod poly;
mod smith;

pub use abelian::AbelianGroup;
pub use cokernel_map::{induced_cokernel_map, CokernelMap};
pub use matrix::{IntMatrix, JsonInt};
pub use ops::{
    cokernel, integer_kernel, minors_gcd, same_column_lattice, snf_from_eigenvalues,
    solve_integer,
};
pub use poly::{char_poly, IntPoly};
pub use smith::{smith_normal_form, SmithDecomposition};
