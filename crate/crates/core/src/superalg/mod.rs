//! Superalgebras, graded maps between them, structural invariants, and the
//! graded isomorphism search.

pub mod algebra;
pub mod json;
pub mod maps;
pub mod profile;
pub mod search;

pub use algebra::{
    standard_names, DirectSum, GradingViolation, JacobiViolation, Quotient, SkewViolation,
    Subalgebra, SuperAlgebra, ValidationReport,
};
pub use maps::GradedLinearMap;
pub use profile::InvariantProfile;
pub use search::{find_isomorphism, Budget, IsomorphismOutcome, RowConstraint};
