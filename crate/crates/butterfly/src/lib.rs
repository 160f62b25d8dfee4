//! Butterflies between central crossed modules of Lie algebras.
//!
//! A butterfly from `h1 → g1` to `h2 → g2` is a Lie algebra `k` with maps
//!
//! ```text
//!   h1        h2
//!     i1    i2
//!        k
//!     r1    r2
//!   g1        g2
//! ```
//!
//! such that both diagonals are complexes, `0 → h2 → k → g1 → 0` is short
//! exact, the wings commute with `t1` and `t2`, and `i_n(α_n(r_n X, y)) =
//! [X, i_n y]`. A section `q` of `r1` turns a butterfly into cocycle data
//! `(φ, f, λ)`, and every set of cocycle data is realized on `h2 ⊕ g1`. The
//! crate works with both descriptions: validation, reconstruction,
//! extraction, equivalence, composition, induced maps on homotopy, the
//! Kassel–Loday transfer cochain, connecting butterflies between modules
//! with equal classes, classification of self-butterflies and the transfer
//! of adapted adjustments.

mod data;
mod equivalence;
mod kl;
mod realize;
mod transfer;

pub use data::{
    compose, gamma_correction, homotopy_maps, identity_data, is_invertible, pullback_differential_defect,
    shift_section, twist_data, validate_cocycle_data, CocycleCheck, CocycleCondition, CocycleData, CocycleReport,
    HomotopyMaps,
};
pub use equivalence::{classify_self_butterfly, cocycle_equivalent, normalize_to_identity, SelfClass};
pub use kl::{connect_same_kl, kl_transfer_check, KlTransferReport};
pub use realize::{extract, reconstruct, Butterfly, ButterflyAxiom, Reconstruction};
pub use transfer::{
    is_neat, neat_section_adjust, neat_shift, transfer_adjustment, transfer_affinity_check, transfer_criterion,
    AffinityReport,
};

use crossmod_adjust::AdjustError;
use crossmod_cochains::CochainError;
use crossmod_crossed::CrossedError;

/// Errors from butterfly computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ButterflyError {
    /// A crossed module rejected a section or splitting.
    #[error(transparent)]
    Crossed(CrossedError),
    /// A cochain operation failed.
    #[error(transparent)]
    Cochain(CochainError),
    /// An adjustment computation failed.
    #[error(transparent)]
    Adjust(AdjustError),
    /// Inconsistent dimensions or modules.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// Cocycle data violates one of its conditions.
    #[error("cocycle data violates {condition:?} on basis tuple {tuple:?}")]
    InvalidData {
        /// The failing condition.
        condition: CocycleCondition,
        /// The first failing basis tuple.
        tuple: Vec<usize>,
    },
    /// A diagram violates one of the butterfly axioms.
    #[error("butterfly axiom {axiom:?} fails: {detail}")]
    Axiom {
        /// The failing axiom.
        axiom: ButterflyAxiom,
        /// What went wrong.
        detail: String,
    },
    /// A map that should be a section of `r1` is not.
    #[error("not a section: {0}")]
    NotSection(String),
    /// The butterfly does not induce isomorphisms on homotopy.
    #[error("the butterfly is not invertible")]
    NotInvertible,
    /// The section is not neat for the given sections of the two modules.
    #[error("the section is not neat")]
    NotNeat,
    /// A cochain or map that should descend or restrict does not.
    #[error("descent failure: {0}")]
    Descent(String),
    /// The induced maps on homotopy are not the identities.
    #[error("the induced maps on homotopy are not identities: {0}")]
    NotIdentity(String),
}
