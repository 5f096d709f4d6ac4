//! Exact-arithmetic toolkit for finite-dimensional Lie superalgebras given by
//! graded structure constants.
//!
//! The crate decides isoclinism with explicit, re-verifiable witnesses and
//! covers the surrounding machinery: validation of the graded axioms, central
//! quotients and derived subalgebras, factor sets and reconstruction, stem
//! decomposition, graded second cohomology (multipliers) and stem covers. All
//! arithmetic is exact, over Q or GF(p) with p >= 5; nothing here floats.
//!
//! Organization:
//! - [`exactlin`]: fields, matrices, graded subspaces
//! - [`superalg`]: the algebra type, validation, invariants, isomorphism search
//! - [`isoclinism`]: witnesses, stem decomposition, the isoclinism decision
//! - [`factorset`]: factor sets, reconstruction, transport, gluing
//! - [`cohomcover`]: scalar cocycles, multipliers, central extensions, covers
//! - [`catalog`]: built-in worked examples
//! - [`random`]: seeded helpers for randomized verification

pub mod catalog;
pub mod cohomcover;
pub mod error;
pub mod exactlin;
pub mod factorset;
pub mod isoclinism;
pub mod random;
pub mod superalg;

pub use error::{Error, Result};
pub use exactlin::{Field, GradedDim, GradedSubspace, Matrix, Parity, Scalar};
pub use superalg::{GradedLinearMap, InvariantProfile, SuperAlgebra, ValidationReport};
