//! Exact symbolic computation for braid group actions on presented
//! k-categories, the categorical and homotopy braid closures, and the link
//! invariants extracted from them (link groups, Alexander polynomials, knot
//! DG categories, cord algebras, finite coloring and augmentation counts).
//!
//! All arithmetic is exact: Laurent-polynomial scalars with big-integer
//! coefficients, noncommutative path algebra elements with rewrite-based
//! normal forms, and fraction-free linear algebra over Laurent rings.


pub mod alex;
pub mod braid;
pub mod burau;
pub mod closure;
pub mod corpus;
pub mod count;




pub mod dg;
pub mod element;
pub mod fq;
pub mod group;
pub mod intmat;
pub mod invariants;
pub mod json;




pub mod operators;
pub mod peripheral;

pub mod quiver;
pub mod rewrite;
pub mod scalar;
pub mod subst;
pub mod verify;

pub use element::Element;
pub use quiver::{GradedQuiver, Path, Sym};
pub use scalar::Scalar;

use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("generator index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("malformed token: {0}")]
    MalformedToken(String),
    #[error("endpoint mismatch: {0}")]
    EndpointMismatch(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("unknown object: {0}")]
    UnknownObject(String),
    #[error("unknown arrow: {0}")]
    UnknownArrow(String),
    #[error("duplicate name: {0}")]
    DuplicateName(String),
    #[error("generator missing from substitution: {0}")]
    MissingGenerator(String),
    #[error("normal form step budget exceeded ({0} steps)")]
    StepBudgetExceeded(u64),
    #[error("presentation is not semi-free: {0}")]
    NotSemiFree(String),
    #[error("residue not expressible in the endomorphism generators: {0}")]
    ResidueNotExpressible(String),
    #[error("enumeration budget exceeded: {0} candidates (cap {1})")]
    EnumerationBudget(u128, u128),
    #[error("unknown operator: {0}")]
    UnknownOperator(String),
    #[error("non-invertible data: {0}")]
    NonInvertible(String),
    #[error("braid closure has {0} components, expected a knot")]
    MultiComponent(usize),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
