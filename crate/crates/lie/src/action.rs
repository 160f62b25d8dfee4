//! Actions of one Lie algebra on another by derivations.

use crossmod_linalg::{vaxpy, vzero, Matrix, Vector, Q};
use num_traits::Zero;

use crate::algebra::LieAlgebra;
use crate::LieError;

/// A bilinear action `α: actor × module → module`, stored as one matrix per
/// actor basis vector: `α(e_i, y) = mats[i] · y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ActionTensor {
    actor_dim: usize,
    module_dim: usize,
    mats: Vec<Matrix>,
}

impl ActionTensor {
    /// The trivial action.
    pub fn zero(actor_dim: usize, module_dim: usize) -> Self {
        ActionTensor {
            actor_dim,
            module_dim,
            mats: vec![Matrix::zeros(module_dim, module_dim); actor_dim],
        }
    }

    /// Builds an action from one square matrix per actor basis vector.
    pub fn from_matrices(module_dim: usize, mats: Vec<Matrix>) -> Result<Self, LieError> {
        for m in &mats {
            if m.rows() != module_dim || m.cols() != module_dim {
                return Err(LieError::Shape("action matrix has wrong shape".into()));
            }
        }
        Ok(ActionTensor {
            actor_dim: mats.len(),
            module_dim,
            mats,
        })
    }

    /// The adjoint action of an algebra on itself.
    pub fn adjoint(l: &LieAlgebra) -> Self {
        ActionTensor {
            actor_dim: l.dim(),
            module_dim: l.dim(),
            mats: (0..l.dim()).map(|i| l.ad_basis(i)).collect(),
        }
    }

    /// Dimension of the acting algebra.
    pub fn actor_dim(&self) -> usize {
        self.actor_dim
    }

    /// Dimension of the algebra acted upon.
    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    /// The matrix of `α(e_i, ·)`.
    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.mats[i]
    }

    /// All basis matrices.
    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    /// The matrix of `α(x, ·)`.
    pub fn matrix_of(&self, x: &[Q]) -> Matrix {
        assert_eq!(x.len(), self.actor_dim, "actor vector dimension mismatch");
        let mut m = Matrix::zeros(self.module_dim, self.module_dim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                m = m.add(&self.mats[i].scale(xi));
            }
        }
        m
    }

    /// `α(x, y)`.
    pub fn act(&self, x: &[Q], y: &[Q]) -> Vector {
        assert_eq!(x.len(), self.actor_dim, "actor vector dimension mismatch");
        let mut out = vzero(self.module_dim);
        for (i, xi) in x.iter().enumerate() {
            if !xi.is_zero() {
                vaxpy(&mut out, xi, &self.mats[i].apply(y));
            }
        }
        out
    }

    /// `y ↦ α(x, y)` pulled back along `m`: the action of `m·x'` for each
    /// basis vector `x'` of a new actor.
    pub fn pullback_actor(&self, m: &Matrix) -> ActionTensor {
        assert_eq!(m.rows(), self.actor_dim, "pullback shape mismatch");
        ActionTensor {
            actor_dim: m.cols(),
            module_dim: self.module_dim,
            mats: m.columns().iter().map(|c| self.matrix_of(c)).collect(),
        }
    }

    /// Checks that every `α(e_i, ·)` is a derivation of the module and that
    /// `α` is a representation of the actor.
    pub fn validate(&self, actor: &LieAlgebra, module: &LieAlgebra) -> Result<(), LieError> {
        if actor.dim() != self.actor_dim || module.dim() != self.module_dim {
            return Err(LieError::Shape("action dimensions do not match the algebras".into()));
        }
        let n = module.dim();
        for (i, a) in self.mats.iter().enumerate() {
            let cols = a.columns();
            for j in 0..n {
                for k in (j + 1)..n {
                    let lhs = a.apply(module.bracket_basis(j, k));
                    let e_j = crossmod_linalg::unit(n, j);
                    let e_k = crossmod_linalg::unit(n, k);
                    let rhs = crossmod_linalg::vadd(&module.bracket(&cols[j], &e_k), &module.bracket(&e_j, &cols[k]));
                    if lhs != rhs {
                        return Err(LieError::NotDerivation { actor: i, j, k });
                    }
                }
            }
        }
        for i in 0..self.actor_dim {
            for j in (i + 1)..self.actor_dim {
                let lhs = self.matrix_of(actor.bracket_basis(i, j));
                let rhs = self.mats[i].mul(&self.mats[j]).sub(&self.mats[j].mul(&self.mats[i]));
                if lhs != rhs {
                    return Err(LieError::NotRepresentation { i, j });
                }
            }
        }
        Ok(())
    }
}
