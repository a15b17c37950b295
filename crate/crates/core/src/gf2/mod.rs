//! Exact linear algebra over the two-element field.

mod matrix;
mod quotient;
mod sparse;
mod vector;

pub use matrix::{
    nullspace_basis, rank, rref, solve, EliminationConfig, Gf2Matrix, SPARSE_MIN_ENTRIES,
};
pub use quotient::{quotient_coordinates, QuotientSpace};
pub use sparse::SparseGf2Matrix;
pub use vector::Gf2Vector;
