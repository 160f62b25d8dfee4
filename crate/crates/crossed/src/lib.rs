//! Central crossed modules of Lie algebras.
//!
//! A crossed module `h → g → der(h)` is validated on construction and
//! carries its homotopy data: `a = ker t`, the quotient `f = g / t h`, the
//! projection `p: g → f` and fixed linear sections. On top of this the crate
//! provides sections and half splittings, the 2-cochain `ω_u`, the
//! Kassel–Loday cocycle `C_u` and its class in `H³(f, a)`, and the cochain
//! relating the cocycles of two half splittings.

mod module;
mod splitting;

pub use module::CrossedModule;
pub use splitting::KlClass;

use crossmod_cochains::CochainError;
use crossmod_lie::LieError;

/// A violated axiom or invalid auxiliary datum.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CrossedError {
    /// One of the two algebras or the action is invalid.
    #[error(transparent)]
    Lie(LieError),
    /// A cochain operation failed.
    #[error(transparent)]
    Cochain(CochainError),
    /// Inconsistent dimensions.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// `t(α(X, y)) ≠ [X, t y]`.
    #[error("equivariance fails for g-basis {x} and h-basis {y}")]
    Equivariance { x: usize, y: usize },
    /// `α(t x, y) ≠ [x, y]`.
    #[error("Peiffer identity fails for h-basis pair ({x}, {y})")]
    Peiffer { x: usize, y: usize },
    /// `g` acts non-trivially on `ker t`.
    #[error("not central: g-basis {x} acts non-trivially on kernel basis vector {a}")]
    NotCentral { x: usize, a: usize },
    /// A user-supplied identification of `f` or `a` is invalid.
    #[error("invalid identification: {0}")]
    InvalidIdentification(String),
    /// A section fails `p s = id`.
    #[error("invalid section: {0}")]
    InvalidSection(String),
    /// A half splitting fails `t u t = t`.
    #[error("invalid half splitting: {0}")]
    InvalidSplitting(String),
    /// A cochain that should descend to `f` or be `a`-valued does not.
    #[error("descent failure: {0}")]
    Descent(String),
}
