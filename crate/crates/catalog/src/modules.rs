//! Finite-dimensional example modules.

use crossmod_crossed::CrossedModule;
use crossmod_lie::{abelian, heisenberg3, matrix_algebra, ActionTensor, Bilinear, LieAlgebra};
use crossmod_linalg::{q, solve_affine, unit, Matrix, Vector};

use crate::CatalogError;

/// The product module `a → f` with `t = 0` and trivial action, so that
/// `π0 = f` and `π1 = a = ℚ^a_dim`.
pub fn product_module(f: &LieAlgebra, a_dim: usize) -> CrossedModule {
    let n = f.dim();
    CrossedModule::new(
        abelian(a_dim),
        f.clone(),
        Matrix::zeros(n, a_dim),
        ActionTensor::zero(n, a_dim),
    )
    .expect("product modules satisfy the axioms")
}

/// A categorical torus together with the adjustment given by its matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoricalTorus {
    /// The module `ℚ → ℚ^n` with `t = 0` and trivial action.
    pub module: CrossedModule,
    /// `η(X, Y) = Xᵀ J Y`, an adjustment for every square `J`.
    pub eta: Bilinear,
}

/// The categorical torus of a square matrix `J`: `f = ℚ^n`, `a = ℚ`, and
/// the adjustment `η(e_i, e_j) = J_ij`.
pub fn categorical_torus(j: &Matrix) -> Result<CategoricalTorus, CatalogError> {
    let n = j.rows();
    if j.cols() != n {
        return Err(CatalogError::Parameters("J must be square".into()));
    }
    let module = product_module(&abelian(n), 1);
    let eta = Bilinear::from_fn(n, 1, |a, b| vec![j[(a, b)].clone()]);
    Ok(CategoricalTorus { module, eta })
}

/// The module `A → der(A)` of the `n × n` matrix algebra `A`: `h = A` with
/// the commutator bracket, `g = der(A)`, `t(a) = [a, −]` and the
/// tautological action. Here `f = 0` and `a` is the centre of `A`.
pub fn matrix_aut(n: usize) -> CrossedModule {
    let alg = matrix_algebra(n);
    let d = alg.dim();
    let h = alg.commutator_lie();
    let (der, emb) = alg.derivations();
    let t_cols: Vec<Vector> = (0..d)
        .map(|x| {
            let ad = h.ad_basis(x);
            let flat: Vector = (0..d * d).map(|k| ad[(k / d, k % d)].clone()).collect();
            solve_affine(&emb, &flat)
                .particular
                .expect("inner derivations are derivations")
        })
        .collect();
    let t = Matrix::from_columns(der.dim(), &t_cols);
    let mats: Vec<Matrix> = (0..der.dim())
        .map(|i| {
            let col = emb.column(i);
            Matrix::from_fn(d, d, |r, c| col[r * d + c].clone())
        })
        .collect();
    let alpha = ActionTensor::from_matrices(d, mats).expect("derivations act on A");
    CrossedModule::new(h, der, t, alpha).expect("the automorphism module satisfies the axioms")
}

/// `η(ad_a, ad_b) = ab − ba` on the derivation algebra of [`matrix_aut`],
/// computed from a preimage of every basis derivation.
pub fn matrix_aut_commutator_form(m: &CrossedModule) -> Result<Bilinear, CatalogError> {
    let (g, h) = (m.g(), m.h());
    let pre: Vec<Vector> = (0..g.dim())
        .map(|i| {
            solve_affine(m.t(), &unit(g.dim(), i))
                .particular
                .ok_or_else(|| CatalogError::Parameters("t is not surjective".into()))
        })
        .collect::<Result<_, _>>()?;
    Ok(Bilinear::from_fn(g.dim(), h.dim(), |i, j| h.bracket(&pre[i], &pre[j])))
}

/// `g = heisenberg3` with `[e0, e1] = e2`, `h = ℚ²` with `t(e0) = e2` and
/// `t(e1) = 0`, trivial action. Here `f = ℚ²` and `a = ℚ`.
pub fn heisenberg_extension() -> CrossedModule {
    let t = Matrix::from_fn(3, 2, |r, c| if r == 2 && c == 0 { q(1) } else { q(0) });
    CrossedModule::new(abelian(2), heisenberg3(), t, ActionTensor::zero(3, 2))
        .expect("the Heisenberg extension satisfies the axioms")
}

/// The identity module `L → L` with the adjoint action; `f = 0`, `a = 0`.
pub fn identity_module(l: &LieAlgebra) -> CrossedModule {
    CrossedModule::new(
        l.clone(),
        l.clone(),
        Matrix::identity(l.dim()),
        ActionTensor::adjoint(l),
    )
    .expect("the identity module satisfies the axioms")
}

/// A module with `f = ℚ³`, `a = ℚ` and Kassel–Loday class three times the
/// volume form. Its class is not in the image of the Chern–Weil map, so it
/// admits no adjustment.
pub fn cubic_module() -> CrossedModule {
    let g = LieAlgebra::from_brackets(6, &[(0, 1, 3, q(1)), (0, 2, 4, q(1)), (1, 2, 5, q(1))])
        .expect("free 2-step nilpotent algebra on three generators");
    let h = abelian(4);
    let t = Matrix::from_fn(6, 4, |r, c| if c < 3 && r == c + 3 { q(1) } else { q(0) });
    let mut mats = vec![Matrix::zeros(4, 4); 6];
    mats[0][(3, 2)] = q(1);
    mats[1][(3, 1)] = q(-1);
    mats[2][(3, 0)] = q(1);
    let alpha = ActionTensor::from_matrices(4, mats).expect("action matrices have the right shape");
    CrossedModule::new(h, g, t, alpha).expect("the cubic module satisfies the axioms")
}

/// The 4-dimensional filiform algebra `[e0, e1] = e2`, `[e0, e2] = e3`.
pub fn filiform4() -> LieAlgebra {
    LieAlgebra::from_brackets(4, &[(0, 1, 2, q(1)), (0, 2, 3, q(1))]).expect("filiform brackets satisfy Jacobi")
}
