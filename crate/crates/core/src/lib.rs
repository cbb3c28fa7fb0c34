//! Exact Clifford algebras realized as cocycle-twisted group algebras of
//! `Z_2^n` over the Gaussian rationals.
//!
//! The blade `e_x` for `x in Z_2^n` is stored by its bitmask; the product
//! `e_x . e_y = F(x, y) e_{x+y}` is controlled by a 2-cochain `F`. With the
//! Clifford cochain this is `C(V, q)`; other cochains give quasialgebras
//! whose associator is the coboundary of `F`.

pub mod algebra;
pub mod classify;
pub mod dirac;
pub mod clifford;
pub mod cochain;
pub mod error;
pub mod group;
pub mod linalg;
pub mod parse;
pub mod process;
mod rational;
pub mod scalar;
pub mod spinor;
pub mod suites;
pub mod tensor;

pub use algebra::{blade_name, Multivector, TwistedAlgebra};
pub use cochain::{character_coboundary, Cochain, CochainKind, Grading, SignFn, Signature, XiFn};
pub use error::{Error, Result};
pub use clifford::CliffordAlgebra;
pub use group::GroupElement;
pub use linalg::Matrix;
pub use parse::{parse_blade, parse_expression};
pub use scalar::Scalar;
