//! Exact symbolic verification of identities in ℤ₂-graded Hom-algebras.
//!
//! Structure constants live in `Q(p)` ([`scalar`]). Finite-dimensional
//! algebras and their twisting maps are in [`graded`]; the identity checkers
//! in [`identities`] and [`twist`] return a [`CheckReport`] listing every
//! failing basis tuple with its exact residual. [`sigma`] covers the
//! infinite-dimensional q-deformed Witt superalgebra over finite windows.

pub mod error;
pub mod graded;
pub mod identities;
pub mod random;
pub mod report;
pub mod scalar;
pub mod sigma;
pub mod twist;

pub use error::{Error, Result};
pub use graded::{
    apply_map, koszul_sign, multiply, permutation_parity, AlgebraKind, Element, EvenMap,
    HomSuperAlgebra, Parity, Perm3, SuperAlgebra, SuperBasis,
};
pub use report::{CheckReport, Residual, Status, Violation, DEFAULT_MAX_VIOLATIONS};
pub use scalar::{q_number, rational, Rational, Scalar};
