//! Exact matrices and the subspace lattice.

mod matrix;
mod subspace;

pub use matrix::{Matrix, Solution};
pub use subspace::{unit, Subspace};

pub(crate) use matrix::dot;
