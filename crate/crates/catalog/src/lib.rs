//! Worked examples of central crossed modules of Lie algebras.
//!
//! The finite-dimensional builders return validated
//! [`CrossedModule`](crossmod_crossed::CrossedModule)s: products, categorical
//! tori, inner automorphism modules of matrix algebras, a few small
//! non-trivial modules and a finite-dimensional truncation of the path
//! construction. The [`path`] module implements the infinite-dimensional
//! path crossed module on polynomial paths with exact integration; its
//! identities are checked elementwise on samples.

mod modules;
pub mod path;
mod truncation;

pub use modules::{
    categorical_torus, cubic_module, filiform4, heisenberg_extension, identity_module, matrix_aut,
    matrix_aut_commutator_form, product_module, CategoricalTorus,
};
pub use truncation::{path_truncation_module, truncation_algebra_dim, truncation_intertwiner, Intertwiner};

use crossmod_adjust::AdjustError;
use crossmod_cochains::CochainError;
use crossmod_crossed::CrossedError;
use crossmod_lie::LieError;

/// Errors from the catalog constructors.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    /// A Lie algebra failed validation.
    #[error(transparent)]
    Lie(LieError),
    /// The crossed module axioms failed.
    #[error(transparent)]
    Crossed(CrossedError),
    /// A cochain operation failed.
    #[error(transparent)]
    Cochain(CochainError),
    /// A form computation failed.
    #[error(transparent)]
    Adjust(AdjustError),
    /// Inconsistent dimensions or parameters.
    #[error("invalid parameters: {0}")]
    Parameters(String),
    /// A form is not symmetric and ad-invariant.
    #[error("not an invariant symmetric form: {0}")]
    InvalidForm(String),
    /// A path does not satisfy the required endpoint conditions.
    #[error("invalid path: {0}")]
    InvalidPath(String),
    /// A section polynomial does not satisfy `ψ(0) = 0` and `ψ(1) = 1`.
    #[error("invalid section: {0}")]
    InvalidSection(String),
    /// The requested class cannot be realized by the finite construction.
    #[error("not realizable in finite dimensions: {0}")]
    Unrealizable(String),
}
