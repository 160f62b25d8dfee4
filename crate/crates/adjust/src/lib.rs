//! Infinitesimal adjustments of central crossed modules of Lie algebras.
//!
//! An infinitesimal adjustment of `h → g → der(h)` is a bilinear map
//! `η: g × g → h` with
//!
//! * `η([X,Y],Z) + η(Y,[X,Z]) = η(X,[Y,Z])`,
//! * `η(t x, Y) = −α(Y, x)` and `η(X, t y) = α(X, y)`,
//!
//! and it is adapted to a section `s` when `t η(X, Y) = ρ_s [X, Y]`. The
//! crate provides the space `T(L, V)` of maps satisfying the first
//! identity, invariant symmetric forms and the Chern–Weil map, verification
//! reports, the existence decision, explicit construction, the affine
//! classification, morphisms between adapted adjustments and the finite
//! integration series on ad-nilpotent elements.

mod adjustment;
mod existence;
mod groupoid;
mod integrate;
mod tspace;

pub use adjustment::{
    adjusted_kl, check_adjustment, descend_bilinear, lift_from_homotopy, verify_adapted, AdaptedAdjustment,
    AdjustmentIdentity, AdjustmentReport, IdentityCheck,
};
pub use existence::{
    adapt_projection, adjustment_exists, adjustment_exists_with, classify_adjustments, construct_adjustment,
    primitive_for_form, AdjustmentSpace, Existence,
};
pub use groupoid::{
    adjustment_pi0_fibre, fibre_coordinates, shift_by_cocycle, solve_morphism, MorphismSolution, Pi0Fibre,
};
pub use integrate::{action_exp, ad_exp, bch, exp_nilpotent, integrate_nilpotent};
pub use tspace::{
    chern_weil, decompose_t, in_t_space, invariance_violation, invariant_forms, is_invariant_form, t_defect, t_space,
    t_violation, TSpace,
};

use crossmod_cochains::{AltCochain, CochainError};
use crossmod_crossed::CrossedError;

/// Errors from adjustment computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AdjustError {
    /// The crossed module rejected a section or splitting.
    #[error(transparent)]
    Crossed(CrossedError),
    /// A cochain operation failed.
    #[error(transparent)]
    Cochain(CochainError),
    /// Inconsistent dimensions.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// A form that should be invariant and symmetric is not.
    #[error("not an invariant symmetric form: {0}")]
    NotInvariantForm(String),
    /// A bilinear map is not in `T(L, V)`.
    #[error("the T-condition fails on basis triple ({x}, {y}, {z})")]
    NotInT { x: usize, y: usize, z: usize },
    /// A bilinear map is not a (suitably adapted) adjustment.
    #[error("not an adjustment: {0}")]
    NotAdjustment(String),
    /// A map that should descend to `f` or be `a`-valued does not.
    #[error("descent failure: {0}")]
    Descent(String),
    /// `cw(B) − C_u − δξ` does not vanish.
    #[error("cw(B) - C_u - d(xi) is not zero")]
    Residual {
        /// The nonzero residual 3-cochain on `f`.
        residual: AltCochain,
    },
    /// The module admits no infinitesimal adjustment.
    #[error("the module admits no infinitesimal adjustment")]
    NoAdjustment,
    /// An element or algebra is not nilpotent where required.
    #[error("not nilpotent: {0}")]
    NotNilpotent(String),
}
