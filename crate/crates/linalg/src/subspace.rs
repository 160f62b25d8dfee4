//! Subspaces of `ℚ^n` in a canonical echelon form.

use num_traits::Zero;

use crate::matrix::Matrix;
use crate::scalar::Q;
use crate::system::LinearSystem;
use crate::vector::{unit, vzero, Vector};

/// A linear subspace of `ℚ^n`.
///
/// The basis is kept in reduced echelon form: each basis vector has a leading
/// one at its pivot coordinate, every other basis vector vanishes there, and
/// the pivots increase. Two subspaces are equal exactly when their
/// representations are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    pivots: Vec<usize>,
    basis: Vec<Vector>,
}

impl Subspace {
    /// The span of `vectors` inside `ℚ^ambient`.
    pub fn span(ambient: usize, vectors: &[Vector]) -> Self {
        let mut sys = LinearSystem::new(ambient);
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length mismatch");
            sys.add_dense_equation(v, Zero::zero());
        }
        let (pivots, basis) = sys.rref_rows();
        Subspace { ambient, pivots, basis }
    }

    /// The zero subspace.
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            pivots: Vec::new(),
            basis: Vec::new(),
        }
    }

    /// The whole space `ℚ^ambient`.
    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            pivots: (0..ambient).collect(),
            basis: (0..ambient).map(|i| unit(ambient, i)).collect(),
        }
    }

    /// Dimension of the ambient space.
    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Dimension of the subspace.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The canonical basis.
    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Pivot coordinates of the canonical basis, increasing.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The basis vectors as the columns of an `ambient × dim` matrix.
    pub fn as_matrix(&self) -> Matrix {
        Matrix::from_columns(self.ambient, &self.basis)
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is not in
    /// the subspace.
    pub fn coords(&self, v: &[Q]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let c: Vector = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (ci, b) in c.iter().zip(&self.basis) {
            crate::vector::vaxpy(&mut r, &-ci.clone(), b);
        }
        if r.iter().all(Zero::is_zero) {
            Some(c)
        } else {
            None
        }
    }

    /// True when `v` lies in the subspace.
    pub fn contains(&self, v: &[Q]) -> bool {
        self.coords(v).is_some()
    }

    /// True when `other` is contained in `self`.
    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// The sum `self + other`.
    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(self.ambient, &all)
    }

    /// The intersection `self ∩ other`.
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let a = self.as_matrix();
        let b = other.as_matrix();
        let k = crate::kernel(&a.hstack(&b.scale(&-crate::scalar::one())));
        let vecs: Vec<Vector> = k.basis().iter().map(|w| a.apply(&w[..self.dim()])).collect();
        Subspace::span(self.ambient, &vecs)
    }

    /// The deterministic complement spanned by the standard basis vectors at
    /// the non-pivot coordinates.
    pub fn complement(&self) -> Subspace {
        let free: Vec<usize> = (0..self.ambient).filter(|i| !self.pivots.contains(i)).collect();
        Subspace {
            ambient: self.ambient,
            basis: free.iter().map(|&i| unit(self.ambient, i)).collect(),
            pivots: free,
        }
    }

    /// A zero vector of the ambient space.
    pub fn ambient_zero(&self) -> Vector {
        vzero(self.ambient)
    }
}
