//! Exact computation of critical groups.
//!
//! The crate covers three connected settings:
//!
//! * sandpile (critical) groups of directed multigraphs, via reduced Laplacians;
//! * critical groups `K(V)` of faithful representations of finite groups, computed
//!   from exact character tables over cyclotomic integers;
//! * representations `V(f)_n` in the differential tower of wreath products `A ≀ S_n`,
//!   whose critical groups are computed from up/down operators on the poset `Y^r`.
//!
//! Everything is arbitrary precision. The heavy lifting is done by
//! [`linalg::smith_normal_form`].

pub mod chartables;
pub mod cyclotomic;
pub mod error;
pub mod linalg;
pub mod posets;
pub mod sandpile;
pub mod towers;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{AbelianGroup, CokernelMap, IntMatrix, IntPoly, SmithDecomposition};
