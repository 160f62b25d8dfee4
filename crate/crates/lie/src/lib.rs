//! Lie algebras by structure constants over `ℚ`.
//!
//! Provides validated Lie algebras, vector-valued bilinear maps, actions by
//! derivations, associative algebras with their commutator Lie algebras, and
//! derivation algebras. Standard algebras have a fixed basis order:
//! `so3` is cyclic, `sl2` is `(h, e, f)`, `heisenberg3` is `(x, y, z)` with
//! `[x, y] = z`, and `gl(n)` uses the elementary matrices `E_ij` row-major.

mod action;
mod algebra;
mod assoc;
mod bilinear;

pub use action::ActionTensor;
pub use algebra::{abelian, gl, heisenberg3, matrix_algebra_commutator, sl2, so3, standard_algebra, LieAlgebra};
pub use assoc::{derivation_algebra, matrix_algebra, AssociativeAlgebra};
pub use bilinear::Bilinear;

/// A failed structural check or malformed input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    /// Dimensions or indices do not fit.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// `[e_i, e_j] ≠ −[e_j, e_i]`.
    #[error("antisymmetry fails for basis pair ({i}, {j})")]
    Antisymmetry { i: usize, j: usize },
    /// The Jacobiator of a basis triple is non-zero.
    #[error("Jacobi identity fails for basis triple ({i}, {j}, {k})")]
    Jacobi { i: usize, j: usize, k: usize },
    /// `(e_i e_j) e_k ≠ e_i (e_j e_k)`.
    #[error("associativity fails for basis triple ({i}, {j}, {k})")]
    Associativity { i: usize, j: usize, k: usize },
    /// An action matrix is not a derivation.
    #[error("action of actor basis vector {actor} is not a derivation on pair ({j}, {k})")]
    NotDerivation { actor: usize, j: usize, k: usize },
    /// An action does not respect the actor bracket.
    #[error("action is not a representation on actor pair ({i}, {j})")]
    NotRepresentation { i: usize, j: usize },
    /// A name not in the standard library.
    #[error("unknown standard algebra {0:?}")]
    UnknownAlgebra(String),
}
