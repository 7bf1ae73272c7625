//! Exact construction and structural verification of the pointed Hopf
//! algebras H(lambda, mu) in odd characteristic and B(V)#kG in characteristic 2
//! over explicit finite fields.

pub mod algebra;
pub mod blocks;
pub mod error;
pub mod field;
pub mod hopf;
pub mod identities;
pub mod linalg;
pub mod radext;
pub mod relations;
pub mod report;
pub mod reps;
pub mod suites;

pub use algebra::{Algebra, AlgebraSpec, BasisIndex, Element, Gen, Variant};
pub use error::{Error, Result};
pub use field::{FieldCtx, Scalar};
pub use linalg::{Matrix, Subspace};
pub use report::{Check, Report, Status};
