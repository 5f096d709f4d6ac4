//! Exact linear algebra over Q and GF(p): fields, matrices, graded subspaces.

pub mod field;
pub mod matrix;
pub mod subspace;

pub use field::{Field, Scalar};
pub use matrix::Matrix;
pub use subspace::{GradedDim, GradedSubspace, Parity};
