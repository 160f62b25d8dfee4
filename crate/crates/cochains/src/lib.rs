//! The Chevalley–Eilenberg complex of a Lie algebra with trivial
//! coefficients in `ℚ^v`.
//!
//! Cochains are alternating multilinear maps stored as full tensors. The
//! differential, pullbacks, pushforwards, cohomology groups with explicit
//! representatives and exactness queries are provided.

mod alt;
mod cohomology;

pub use alt::{combinations, sort_with_sign, AltCochain};
pub use cohomology::{cohomology, differential_matrix, is_exact, CohomologySpace};

use crossmod_lie::LieAlgebra;
use crossmod_linalg::Matrix;

/// Errors from cochain operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CochainError {
    /// Dimensions do not fit.
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// Raw data is not antisymmetric.
    #[error("cochain is not alternating")]
    NotAlternating,
    /// An operation that needs a cocycle was given a non-closed cochain.
    #[error("cochain is not closed")]
    NotClosed,
}

/// `δw` on the algebra `l`.
pub fn ce_differential(l: &LieAlgebra, w: &AltCochain) -> AltCochain {
    w.differential(l)
}

/// `m^*w`, checked.
pub fn pullback(w: &AltCochain, m: &Matrix) -> Result<AltCochain, CochainError> {
    if m.rows() != w.source_dim() {
        return Err(CochainError::Shape("map target does not match cochain source".into()));
    }
    Ok(w.pullback(m))
}

/// `m ∘ w`, checked.
pub fn pushforward(w: &AltCochain, m: &Matrix) -> Result<AltCochain, CochainError> {
    if m.cols() != w.values_dim() {
        return Err(CochainError::Shape("map source does not match cochain values".into()));
    }
    Ok(w.pushforward(m))
}
