//! Central crossed modules and their homotopy data.

use crossmod_lie::{ActionTensor, LieAlgebra};
use crossmod_linalg::{image, kernel, unit, Matrix, Subspace, Vector};

use crate::CrossedError;

/// A central crossed module `h --t--> g --α--> der(h)` of Lie algebras,
/// together with its homotopy data.
///
/// The cached data consists of `a = ker t ⊆ h` with an inclusion
/// `iota: a → h` and a retraction `j0: h → a`, the image `t h ⊆ g`, the
/// quotient algebra `f = g / t h` with projection `p: g → f` and a linear
/// section `lift: f → g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    h: LieAlgebra,
    g: LieAlgebra,
    t: Matrix,
    alpha: ActionTensor,
    a: Subspace,
    image_t: Subspace,
    f: LieAlgebra,
    p: Matrix,
    lift: Matrix,
    iota: Matrix,
    j0: Matrix,
}

impl CrossedModule {
    /// Validates the axioms and computes the homotopy data with the default
    /// coordinates: `f` lives on the pivot-rule complement of `t h`, and `a`
    /// uses the canonical basis of `ker t`.
    pub fn new(h: LieAlgebra, g: LieAlgebra, t: Matrix, alpha: ActionTensor) -> Result<Self, CrossedError> {
        validate_axioms(&h, &g, &t, &alpha)?;
        let a = kernel(&t);
        let image_t = image(&t);
        let (f, p, lift) = g.quotient(&image_t).map_err(CrossedError::Lie)?;
        let iota = a.as_matrix();
        let j0 = Matrix::from_fn(a.dim(), h.dim(), |i, j| {
            if a.pivots()[i] == j {
                crossmod_linalg::one()
            } else {
                crossmod_linalg::zero()
            }
        });
        Ok(CrossedModule {
            h,
            g,
            t,
            alpha,
            a,
            image_t,
            f,
            p,
            lift,
            iota,
            j0,
        })
    }

    /// Like [`CrossedModule::new`], but with user-chosen coordinates on the
    /// homotopy groups: a Lie algebra `f` with a surjective homomorphism
    /// `p: g → f` whose kernel is `t h`, and an injective `iota: ℚ^k → h`
    /// whose image is `ker t`.
    pub fn with_identifications(
        h: LieAlgebra,
        g: LieAlgebra,
        t: Matrix,
        alpha: ActionTensor,
        f: LieAlgebra,
        p: Matrix,
        iota: Matrix,
    ) -> Result<Self, CrossedError> {
        let mut m = CrossedModule::new(h, g, t, alpha)?;
        let bad = |s: &str| Err(CrossedError::InvalidIdentification(s.to_string()));
        if p.rows() != f.dim() || p.cols() != m.g.dim() {
            return bad("p has the wrong shape");
        }
        if kernel(&p) != m.image_t || p.rank() != f.dim() {
            return bad("p is not a surjection with kernel t(h)");
        }
        f.validate().map_err(CrossedError::Lie)?;
        if !m.g.is_homomorphism_to(&f, &p) {
            return bad("p is not a Lie algebra homomorphism");
        }
        if iota.rows() != m.h.dim() || image(&iota) != m.a || kernel(&iota).dim() != 0 {
            return bad("iota is not an isomorphism onto ker t");
        }
        // lift = C (p C)^{-1} for the pivot-rule complement C of t h.
        let c = m.image_t.complement().as_matrix();
        let pc_inv = p.mul(&c).inverse().expect("p restricted to a complement is invertible");
        m.lift = c.mul(&pc_inv);
        // j0 = first rows of [iota | D]^{-1} for the pivot-rule complement D of a.
        let d = m.a.complement().as_matrix();
        let inv = iota.hstack(&d).inverse().expect("iota plus complement is a basis");
        let k = iota.cols();
        m.j0 = Matrix::from_fn(k, m.h.dim(), |i, j| inv[(i, j)].clone());
        m.f = f;
        m.p = p;
        m.iota = iota;
        Ok(m)
    }

    /// The algebra `h`.
    pub fn h(&self) -> &LieAlgebra {
        &self.h
    }

    /// The algebra `g`.
    pub fn g(&self) -> &LieAlgebra {
        &self.g
    }

    /// The boundary map `t: h → g`.
    pub fn t(&self) -> &Matrix {
        &self.t
    }

    /// The action of `g` on `h`.
    pub fn alpha(&self) -> &ActionTensor {
        &self.alpha
    }

    /// `ker t ⊆ h`.
    pub fn a(&self) -> &Subspace {
        &self.a
    }

    /// Dimension of `a`.
    pub fn a_dim(&self) -> usize {
        self.iota.cols()
    }

    /// `t h ⊆ g`.
    pub fn image_t(&self) -> &Subspace {
        &self.image_t
    }

    /// The quotient algebra `f = g / t h`.
    pub fn f(&self) -> &LieAlgebra {
        &self.f
    }

    /// The projection `p: g → f`.
    pub fn p(&self) -> &Matrix {
        &self.p
    }

    /// A fixed linear section `f → g` of `p`, the default section.
    pub fn lift(&self) -> &Matrix {
        &self.lift
    }

    /// The inclusion `a → h`.
    pub fn iota(&self) -> &Matrix {
        &self.iota
    }

    /// A retraction `h → a` of `iota`.
    pub fn j0(&self) -> &Matrix {
        &self.j0
    }

    /// Coordinates in `a` of a vector of `h` that lies in `ker t`.
    pub fn corestrict(&self, x: &[crossmod_linalg::Q]) -> Result<Vector, CrossedError> {
        let c = self.j0.apply(x);
        if self.iota.apply(&c) != x {
            return Err(CrossedError::Descent("value does not lie in ker t".into()));
        }
        Ok(c)
    }

    /// `α(X, y)`.
    pub fn act(&self, x: &[crossmod_linalg::Q], y: &[crossmod_linalg::Q]) -> Vector {
        self.alpha.act(x, y)
    }
}

fn validate_axioms(h: &LieAlgebra, g: &LieAlgebra, t: &Matrix, alpha: &ActionTensor) -> Result<(), CrossedError> {
    if t.rows() != g.dim() || t.cols() != h.dim() {
        return Err(CrossedError::Shape("t must be a dim(g) × dim(h) matrix".into()));
    }
    if alpha.actor_dim() != g.dim() || alpha.module_dim() != h.dim() {
        return Err(CrossedError::Shape("the action must be of g on h".into()));
    }
    h.validate().map_err(CrossedError::Lie)?;
    g.validate().map_err(CrossedError::Lie)?;
    alpha.validate(g, h).map_err(CrossedError::Lie)?;
    let tcols = t.columns();
    for x in 0..g.dim() {
        for y in 0..h.dim() {
            let lhs = t.apply(&alpha.matrix(x).column(y));
            let rhs = g.bracket(&unit(g.dim(), x), &tcols[y]);
            if lhs != rhs {
                return Err(CrossedError::Equivariance { x, y });
            }
        }
    }
    for x in 0..h.dim() {
        let ax = alpha.matrix_of(&tcols[x]);
        for y in 0..h.dim() {
            if ax.column(y) != h.bracket_basis(x, y) {
                return Err(CrossedError::Peiffer { x, y });
            }
        }
    }
    let a = kernel(t);
    for x in 0..g.dim() {
        for (i, b) in a.basis().iter().enumerate() {
            if !crossmod_linalg::vis_zero(&alpha.matrix(x).apply(b)) {
                return Err(CrossedError::NotCentral { x, a: i });
            }
        }
    }
    if !g.is_ideal(&image(t)) {
        return Err(CrossedError::Shape("t(h) is not an ideal of g".into()));
    }
    // Exactness of 0 → a → h → g → f → 0 at the level of dimensions.
    let f_dim = g.dim() - t.rank();
    debug_assert_eq!(a.dim() + g.dim(), h.dim() + f_dim);
    Ok(())
}
