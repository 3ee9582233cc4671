//! Exact linear algebra over the rationals and prime fields.

mod matrix;
mod scalar;
pub mod sparse;
mod subspace;

pub use matrix::{Matrix, Rref};
pub use scalar::{Field, Scalar};
pub use sparse::{Echelon, SparseVec};
pub use subspace::{Subspace, SubspaceOps};

/// Reduced row echelon form, rank and pivot columns of `m`.
pub fn rref(m: &Matrix) -> Rref {
    m.rref()
}

pub fn kernel(m: &Matrix) -> Subspace {
    m.kernel()
}

pub fn solve(m: &Matrix, rhs: &Matrix) -> crate::error::Result<Option<Matrix>> {
    m.solve(rhs)
}

pub fn subspace_ops(a: &Subspace, b: &Subspace) -> crate::error::Result<SubspaceOps> {
    a.ops(b)
}
