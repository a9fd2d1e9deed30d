//! Exact computational invariant theory at desk scale.
//!
//! The crate is `no_std` (it only needs `alloc`). Everything is exact: rationals
//! use arbitrary-precision integers and prime fields use word-sized residues.
//!
//! Module map:
//!
//! - [`partitions`]: partition arithmetic, dominance, the column slicing
//!   decomposition and the hook-content dimension formula.
//! - [`linalg`]: fields, sparse vectors and row-reduced subspaces.
//! - [`tableaux`]: semistandard tableaux, Littlewood–Richardson coefficients
//!   and the Cauchy dimension identity.
//! - [`poly`]: monomial modules and linear substitutions.
//! - [`schur`]: Schur modules realized as spans of bideterminants.
//! - [`polarization`]: GL-spans computed with root-subgroup coefficient operators.
//! - [`invariants`]: graded invariant spaces for concrete group actions.

#![no_std]

extern crate alloc;

mod error;
pub mod field;
pub mod invariants;
pub mod linalg;
pub mod partitions;
pub mod polarization;
pub mod poly;
pub mod schur;
mod serde_big;
pub mod tableaux;

pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use linalg::{SparseVector, Subspace};
pub use partitions::Partition;

/// Runs `$body` with `$f` bound to the concrete field described by `$spec`.
///
/// The body must evaluate to the same type for both fields; `?` inside it
/// propagates from the enclosing function.
#[macro_export]
macro_rules! with_field {
    ($spec:expr, $f:ident => $body:expr) => {
        match $spec {
            $crate::FieldSpec::Rationals => {
                let $f = $crate::Rationals;
                $body
            }
            $crate::FieldSpec::Prime(p) => {
                let $f = $crate::PrimeField::new(u64::from(p))?;
                $body
            }
        }
    };
}
