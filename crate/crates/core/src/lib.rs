//! Exact-arithmetic toolkit for rank problems on matrices of logarithms.
//!
//! Everything here computes over exact rationals (or exact p-adic
//! approximations with tracked precision): structural rank of matrix
//! pencils, witness pairs for singular families, lattice polytopes and
//! mixed volumes, p-adic logarithms and root-counting bounds, multiplicative
//! subgroups of the rational torus, group matrices over finite groups, and
//! the explicit auxiliary product polynomials.

// indexed loops over parallel arrays are the house style in the dense
// linear-algebra code; the zip alternative reads worse there
#![allow(clippy::needless_range_loop)]

pub mod auxpoly;
pub mod bernstein;
pub mod enumerate;
pub mod error;
pub mod factor;
pub mod groups;
pub mod json;
pub mod laurent;
pub mod limits;
pub mod linalg;
pub mod mpoly;
pub mod multgroup;
pub mod padic;
pub mod pencil;
pub mod polytope;
pub mod rat;
pub mod suite;
pub mod witness;

pub use error::{Error, Result};
pub use factor::{factor_rational, FactoredRat};
pub use laurent::LaurentPoly;
pub use limits::Limits;
pub use linalg::RatMatrix;
pub use pencil::{log_pencil, structural_rank, MatrixPencil, RankMode, StructuralRank};
pub use polytope::{bk_degree, bk_number, mixed_volume, BKReport, LatticePolytope};
pub use rat::Rat;
pub use witness::{
    brute_force_pencil_witness, singular_subspace_witness, verify_all_singular, WitnessPair,
};
