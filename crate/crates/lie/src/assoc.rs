//! Associative algebras and derivation algebras.

use crossmod_linalg::{q, vzero, LinearSystem, Matrix, Q};
use num_traits::Zero;

use crate::algebra::{gl, LieAlgebra};
use crate::LieError;

/// A finite-dimensional associative algebra: `e_i e_j = Σ_k m[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociativeAlgebra {
    dim: usize,
    m: Vec<Q>,
}

impl AssociativeAlgebra {
    /// Builds an algebra from its multiplication tensor, checking
    /// associativity on all basis triples.
    pub fn new(dim: usize, m: Vec<Q>) -> Result<Self, LieError> {
        if m.len() != dim * dim * dim {
            return Err(LieError::Shape("multiplication tensor has wrong size".into()));
        }
        let a = AssociativeAlgebra { dim, m };
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    let ij = a.mul_basis(i, j);
                    let jk = a.mul_basis(j, k);
                    let lhs = a.mul(&ij, &crossmod_linalg::unit(dim, k));
                    let rhs = a.mul(&crossmod_linalg::unit(dim, i), &jk);
                    if lhs != rhs {
                        return Err(LieError::Associativity { i, j, k });
                    }
                }
            }
        }
        Ok(a)
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The flat multiplication tensor.
    pub fn tensor(&self) -> &[Q] {
        &self.m
    }

    /// `e_i e_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> Vec<Q> {
        let n = self.dim;
        self.m[(i * n + j) * n..(i * n + j + 1) * n].to_vec()
    }

    /// The product of two coordinate vectors.
    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let n = self.dim;
        let mut out = vzero(n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                for (k, o) in out.iter_mut().enumerate() {
                    let v = &self.m[(i * n + j) * n + k];
                    if !v.is_zero() {
                        *o += &c * v;
                    }
                }
            }
        }
        out
    }

    /// The Lie algebra with bracket `xy − yx`.
    pub fn commutator_lie(&self) -> LieAlgebra {
        let n = self.dim;
        let mut c = vzero(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c[(i * n + j) * n + k] = &self.m[(i * n + j) * n + k] - &self.m[(j * n + i) * n + k];
                }
            }
        }
        LieAlgebra::from_tensor(n, c).unwrap()
    }

    /// The derivations of the associative product, as a Lie subalgebra of
    /// `gl(dim)`, with the embedding matrix into `gl(dim)`.
    pub fn derivations(&self) -> (LieAlgebra, Matrix) {
        derivations_of_product(self.dim, &self.m)
    }
}

/// `ℚ^{n×n}` with basis `E_11, E_12, …` in row-major order.
pub fn matrix_algebra(n: usize) -> AssociativeAlgebra {
    let d = n * n;
    let mut m = vzero(d * d * d);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                // E_ab E_bc = E_ac
                let i = a * n + b;
                let j = b * n + c;
                let k = a * n + c;
                m[(i * d + j) * d + k] = q(1);
            }
        }
    }
    AssociativeAlgebra { dim: d, m }
}

/// The derivation algebra of a Lie algebra, realised inside `gl(dim L)`.
///
/// A derivation `D` is stored through its matrix flattened row-major, so the
/// returned embedding has `dim(L)²` rows; the column for a basis derivation
/// holds `D[a][b]` at index `a·n + b`, where `D e_b = Σ_a D[a][b] e_a`.
pub fn derivation_algebra(l: &LieAlgebra) -> (LieAlgebra, Matrix) {
    derivations_of_product(l.dim(), l.tensor())
}

fn derivations_of_product(n: usize, p: &[Q]) -> (LieAlgebra, Matrix) {
    let at = |i: usize, j: usize, k: usize| &p[(i * n + j) * n + k];
    let var = |a: usize, b: usize| a * n + b;
    let mut sys = LinearSystem::new(n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut terms: Vec<(usize, Q)> = Vec::new();
                for m in 0..n {
                    let c = at(i, j, m);
                    if !c.is_zero() {
                        terms.push((var(k, m), c.clone()));
                    }
                }
                for a in 0..n {
                    let c = at(a, j, k);
                    if !c.is_zero() {
                        terms.push((var(a, i), -c.clone()));
                    }
                    let c = at(i, a, k);
                    if !c.is_zero() {
                        terms.push((var(a, j), -c.clone()));
                    }
                }
                sys.add_equation(terms, Q::zero());
            }
        }
    }
    let basis = sys.solve().homogeneous.basis().to_vec();
    let embed = Matrix::from_columns(n * n, &basis);
    let der = gl(n)
        .subalgebra(&basis)
        .expect("derivations are closed under the commutator");
    (der, embed)
}
