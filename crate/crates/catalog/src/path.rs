//! The path crossed module on polynomial paths.
//!
//! For a Lie algebra `f`, an abelian `a = ℚ^k` and an ad-invariant
//! symmetric form `B: f × f → a`, the module has `g = P₀f`, the paths
//! `f: [0, 1] → f` with `f(0) = 0`, and `h = L₀f ⊕ a`, where `L₀f` are the
//! paths that also satisfy `f(1) = 0`. With
//! `η̃_B(f, g) = −2 ∫₀¹ B(f′(t), g(t)) dt` the structure is
//!
//! * `[(f, a), (g, b)] = ([f, g], η̃_B(f, g))` on `h`,
//! * `α(f, (g, b)) = ([f, g], η̃_B(f, g))`,
//! * `t(f, a) = f` and `p = ev₁: P₀f → f`.
//!
//! Paths are polynomials with rational coefficients, so brackets, endpoint
//! evaluation and integrals are exact. The space is infinite-dimensional,
//! and the identities are checked elementwise on given or sampled paths.
//! Paths that are flat at the endpoints are not polynomial; weakly
//! equivalent finite models are in
//! [`path_truncation_module`](crate::path_truncation_module).

use crossmod_adjust::invariance_violation;
use crossmod_lie::{Bilinear, LieAlgebra};
use crossmod_linalg::{one, q, qf, vadd, vaxpy, vis_zero, vneg, vscale, vsub, vzero, Matrix, Vector, Q};
use rand::Rng;

use crate::CatalogError;

/// A polynomial path `f(t) = Σ_k c_k t^k` in a vector space of dimension
/// `dim`. Trailing zero coefficients are dropped, so equality of paths is
/// equality of functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyPath {
    dim: usize,
    coeffs: Vec<Vector>,
}

impl PolyPath {
    /// A path from its coefficient vectors `c_0, c_1, …`.
    pub fn new(dim: usize, coeffs: Vec<Vector>) -> Result<Self, CatalogError> {
        if coeffs.iter().any(|c| c.len() != dim) {
            return Err(CatalogError::InvalidPath(format!(
                "coefficients must have length {dim}"
            )));
        }
        Ok(Self::trimmed(dim, coeffs))
    }

    fn trimmed(dim: usize, mut coeffs: Vec<Vector>) -> Self {
        while coeffs.last().is_some_and(|c| vis_zero(c)) {
            coeffs.pop();
        }
        PolyPath { dim, coeffs }
    }

    /// The constant path at zero.
    pub fn zero(dim: usize) -> Self {
        PolyPath {
            dim,
            coeffs: Vec::new(),
        }
    }

    /// `t^k v`.
    pub fn monomial(k: usize, v: &[Q]) -> Self {
        let mut coeffs = vec![vzero(v.len()); k + 1];
        coeffs[k] = v.to_vec();
        Self::trimmed(v.len(), coeffs)
    }

    /// `ψ(t) x` for a scalar polynomial `ψ` given by its coefficients.
    pub fn scalar_times(psi: &[Q], x: &[Q]) -> Self {
        Self::trimmed(x.len(), psi.iter().map(|c| vscale(c, x)).collect())
    }

    /// The dimension of the target space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The coefficient vectors, without trailing zeros.
    pub fn coeffs(&self) -> &[Vector] {
        &self.coeffs
    }

    /// The coefficient of `t^k`.
    pub fn coeff(&self, k: usize) -> Vector {
        self.coeffs.get(k).cloned().unwrap_or_else(|| vzero(self.dim))
    }

    /// The degree; zero for the zero path.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// True for the zero path.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The value at `t`.
    pub fn eval(&self, t: &Q) -> Vector {
        let mut out = vzero(self.dim);
        for c in self.coeffs.iter().rev() {
            out = vadd(&vscale(t, &out), c);
        }
        out
    }

    /// `f(0)`.
    pub fn start(&self) -> Vector {
        self.coeff(0)
    }

    /// `f(1)`.
    pub fn end(&self) -> Vector {
        let mut out = vzero(self.dim);
        for c in &self.coeffs {
            vaxpy(&mut out, &one(), c);
        }
        out
    }

    /// True when `f(0) = 0`.
    pub fn is_based(&self) -> bool {
        vis_zero(&self.start())
    }

    /// True when `f(0) = 0` and `f(1) = 0`.
    pub fn is_loop(&self) -> bool {
        self.is_based() && vis_zero(&self.end())
    }

    fn zip(&self, other: &PolyPath, op: impl Fn(&[Q], &[Q]) -> Vector) -> PolyPath {
        assert_eq!(self.dim, other.dim, "paths in different spaces");
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| op(&self.coeff(k), &other.coeff(k))).collect();
        Self::trimmed(self.dim, coeffs)
    }

    /// `f + g`.
    pub fn add(&self, other: &PolyPath) -> PolyPath {
        self.zip(other, vadd)
    }

    /// `f − g`.
    pub fn sub(&self, other: &PolyPath) -> PolyPath {
        self.zip(other, vsub)
    }

    /// `c f`.
    pub fn scale(&self, c: &Q) -> PolyPath {
        Self::trimmed(self.dim, self.coeffs.iter().map(|v| vscale(c, v)).collect())
    }

    /// `−f`.
    pub fn neg(&self) -> PolyPath {
        Self::trimmed(self.dim, self.coeffs.iter().map(|v| vneg(v)).collect())
    }

    /// `f′`.
    pub fn derivative(&self) -> PolyPath {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| vscale(&q(k as i64), c))
            .collect();
        Self::trimmed(self.dim, coeffs)
    }

    /// Applies a linear map pointwise.
    pub fn map(&self, m: &Matrix) -> PolyPath {
        Self::trimmed(m.rows(), self.coeffs.iter().map(|c| m.apply(c)).collect())
    }

    /// A random based path of degree at most `max_degree` whose coefficients
    /// are fractions `n/d` with `|n| ≤ 3` and `1 ≤ d ≤ 3`.
    pub fn random_based<R: Rng + ?Sized>(rng: &mut R, dim: usize, max_degree: usize) -> PolyPath {
        let mut coeffs = vec![vzero(dim)];
        for _ in 1..=max_degree {
            coeffs.push((0..dim).map(|_| random_coefficient(rng)).collect());
        }
        Self::trimmed(dim, coeffs)
    }

    /// A random loop of degree at most `max_degree ≥ 2`: a random based
    /// path `f` corrected to `f − t f(1)`.
    pub fn random_loop<R: Rng + ?Sized>(rng: &mut R, dim: usize, max_degree: usize) -> PolyPath {
        let f = Self::random_based(rng, dim, max_degree.max(2));
        f.sub(&PolyPath::monomial(1, &f.end()))
    }
}

fn random_coefficient<R: Rng + ?Sized>(rng: &mut R) -> Q {
    qf(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

/// The pointwise bracket `[f, g](t) = [f(t), g(t)]`, computed by
/// convolution of the coefficients.
pub fn path_bracket(l: &LieAlgebra, f: &PolyPath, g: &PolyPath) -> PolyPath {
    assert_eq!(f.dim(), l.dim(), "path and algebra dimensions differ");
    assert_eq!(g.dim(), l.dim(), "path and algebra dimensions differ");
    if f.is_zero() || g.is_zero() {
        return PolyPath::zero(l.dim());
    }
    let mut coeffs = vec![vzero(l.dim()); f.degree() + g.degree() + 1];
    for (i, a) in f.coeffs().iter().enumerate() {
        for (j, b) in g.coeffs().iter().enumerate() {
            let c = l.bracket(a, b);
            vaxpy(&mut coeffs[i + j], &one(), &c);
        }
    }
    PolyPath::trimmed(l.dim(), coeffs)
}

/// `η̃_B(f, g) = −2 ∫₀¹ B(f′(t), g(t)) dt`, computed exactly from
/// `∫₀¹ k t^{k−1} t^m dt = k / (k + m)`.
pub fn eta_tilde(b: &Bilinear, f: &PolyPath, g: &PolyPath) -> Vector {
    let mut out = vzero(b.values_dim());
    for (k, a) in f.coeffs().iter().enumerate().skip(1) {
        for (m, c) in g.coeffs().iter().enumerate() {
            let weight = qf(-2 * k as i64, (k + m) as i64);
            vaxpy(&mut out, &weight, &b.eval(a, c));
        }
    }
    out
}

/// An element `(f, a)` of `h = L₀f ⊕ a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCMElement {
    loop_part: PolyPath,
    central: Vector,
}

impl PathCMElement {
    /// Checks that `loop_part` is a loop.
    pub fn new(loop_part: PolyPath, central: Vector) -> Result<Self, CatalogError> {
        if !loop_part.is_loop() {
            return Err(CatalogError::InvalidPath("the first component must be a loop".into()));
        }
        Ok(PathCMElement { loop_part, central })
    }

    /// The loop component.
    pub fn loop_part(&self) -> &PolyPath {
        &self.loop_part
    }

    /// The central component.
    pub fn central(&self) -> &[Q] {
        &self.central
    }

    /// Componentwise sum.
    pub fn add(&self, other: &PathCMElement) -> PathCMElement {
        PathCMElement {
            loop_part: self.loop_part.add(&other.loop_part),
            central: vadd(&self.central, &other.central),
        }
    }

    /// Componentwise difference.
    pub fn sub(&self, other: &PathCMElement) -> PathCMElement {
        PathCMElement {
            loop_part: self.loop_part.sub(&other.loop_part),
            central: vsub(&self.central, &other.central),
        }
    }

    /// Componentwise negative.
    pub fn neg(&self) -> PathCMElement {
        PathCMElement {
            loop_part: self.loop_part.neg(),
            central: vneg(&self.central),
        }
    }
}

/// The path crossed module of `(f, B)` as exact operations on elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCrossedModule {
    f: LieAlgebra,
    form: Bilinear,
}

impl PathCrossedModule {
    /// Requires `B` to be symmetric and ad-invariant.
    pub fn new(f: LieAlgebra, form: Bilinear) -> Result<Self, CatalogError> {
        if let Some(msg) = invariance_violation(&f, &form) {
            return Err(CatalogError::InvalidForm(msg));
        }
        Ok(PathCrossedModule { f, form })
    }

    /// The Lie algebra `f`.
    pub fn f(&self) -> &LieAlgebra {
        &self.f
    }

    /// The form `B`.
    pub fn form(&self) -> &Bilinear {
        &self.form
    }

    /// `dim a`.
    pub fn a_dim(&self) -> usize {
        self.form.values_dim()
    }

    /// `η̃_B(f, g)`.
    pub fn eta_tilde(&self, f: &PolyPath, g: &PolyPath) -> Vector {
        eta_tilde(&self.form, f, g)
    }

    /// The bracket of `g = P₀f`.
    pub fn bracket_g(&self, f: &PolyPath, g: &PolyPath) -> PolyPath {
        path_bracket(&self.f, f, g)
    }

    /// `[(f, a), (g, b)] = ([f, g], η̃_B(f, g))`.
    pub fn bracket_h(&self, x: &PathCMElement, y: &PathCMElement) -> PathCMElement {
        PathCMElement {
            loop_part: self.bracket_g(&x.loop_part, &y.loop_part),
            central: self.eta_tilde(&x.loop_part, &y.loop_part),
        }
    }

    /// `t(f, a) = f`.
    pub fn t(&self, x: &PathCMElement) -> PolyPath {
        x.loop_part.clone()
    }

    /// `α(f, (g, b)) = ([f, g], η̃_B(f, g))`.
    pub fn act(&self, f: &PolyPath, y: &PathCMElement) -> PathCMElement {
        PathCMElement {
            loop_part: self.bracket_g(f, &y.loop_part),
            central: self.eta_tilde(f, &y.loop_part),
        }
    }

    /// `p(f) = f(1)`.
    pub fn p(&self, f: &PolyPath) -> Vector {
        f.end()
    }

    /// The element `(0, a)` of `h`.
    pub fn central_element(&self, a: Vector) -> PathCMElement {
        PathCMElement {
            loop_part: PolyPath::zero(self.f.dim()),
            central: a,
        }
    }

    /// `α(t x, y) = [x, y]`.
    pub fn peiffer_holds(&self, x: &PathCMElement, y: &PathCMElement) -> bool {
        self.act(&self.t(x), y) == self.bracket_h(x, y)
    }

    /// `t α(f, y) = [f, t y]`.
    pub fn equivariance_holds(&self, f: &PolyPath, y: &PathCMElement) -> bool {
        self.t(&self.act(f, y)) == self.bracket_g(f, &self.t(y))
    }

    /// `α(f, −)` is a derivation: `α(f, [x, y]) = [α(f, x), y] + [x, α(f, y)]`.
    pub fn derivation_holds(&self, f: &PolyPath, x: &PathCMElement, y: &PathCMElement) -> bool {
        let lhs = self.act(f, &self.bracket_h(x, y));
        let rhs = self
            .bracket_h(&self.act(f, x), y)
            .add(&self.bracket_h(x, &self.act(f, y)));
        lhs == rhs
    }

    /// `α` is a homomorphism: `α([f, g], y) = α(f, α(g, y)) − α(g, α(f, y))`.
    pub fn homomorphism_holds(&self, f: &PolyPath, g: &PolyPath, y: &PathCMElement) -> bool {
        let lhs = self.act(&self.bracket_g(f, g), y);
        let rhs = self.act(f, &self.act(g, y)).sub(&self.act(g, &self.act(f, y)));
        lhs == rhs
    }

    /// The Jacobiator of `h` on three elements vanishes.
    pub fn jacobi_holds(&self, x: &PathCMElement, y: &PathCMElement, z: &PathCMElement) -> bool {
        let a = self.bracket_h(x, &self.bracket_h(y, z));
        let b = self.bracket_h(y, &self.bracket_h(z, x));
        let c = self.bracket_h(z, &self.bracket_h(x, y));
        let sum = a.add(&b).add(&c);
        sum.loop_part.is_zero() && vis_zero(&sum.central)
    }

    /// `η̃([x, y], z) + η̃(y, [x, z]) − η̃(x, [y, z])`, which vanishes for
    /// based paths.
    pub fn t_condition_defect(&self, x: &PolyPath, y: &PolyPath, z: &PolyPath) -> Vector {
        let a = self.eta_tilde(&self.bracket_g(x, y), z);
        let b = self.eta_tilde(y, &self.bracket_g(x, z));
        let c = self.eta_tilde(x, &self.bracket_g(y, z));
        vsub(&vadd(&a, &b), &c)
    }

    /// The splitting `u_s(f) = (f − s(f(1)), 0)` of a section.
    pub fn splitting(&self, s: &PathSection, f: &PolyPath) -> PathCMElement {
        PathCMElement {
            loop_part: s.rho(f),
            central: vzero(self.a_dim()),
        }
    }

    /// `ω_{u_s}(f, g) = α(f, u g) − α(g, u f) − [u f, u g] + u[ρ⊥ f, ρ⊥ g]`
    /// with `ρ⊥ f = s(f(1))`, evaluated from the definition.
    pub fn omega(&self, s: &PathSection, f: &PolyPath, g: &PolyPath) -> PathCMElement {
        let (uf, ug) = (self.splitting(s, f), self.splitting(s, g));
        let (pf, pg) = (s.apply(&f.end()), s.apply(&g.end()));
        self.act(f, &ug)
            .sub(&self.act(g, &uf))
            .sub(&self.bracket_h(&uf, &ug))
            .add(&self.splitting(s, &self.bracket_g(&pf, &pg)))
    }

    /// The closed form
    /// `ω_{u_s}(f, g) = ([f, g] − s[f(1), g(1)], η̃_B(f, g) − η̃_B(s f(1), s g(1)))`.
    pub fn omega_closed_form(&self, s: &PathSection, f: &PolyPath, g: &PolyPath) -> PathCMElement {
        let (f1, g1) = (f.end(), g.end());
        let correction = self.eta_tilde(&s.apply(&f1), &s.apply(&g1));
        PathCMElement {
            loop_part: s.rho(&self.bracket_g(f, g)),
            central: vsub(&self.eta_tilde(f, g), &correction),
        }
    }

    /// `(δω_{u_s})(s x, s y, s z)` for `x, y, z ∈ f`, with the differential
    /// for trivial coefficients. Its loop part vanishes and its central
    /// part is the Kassel–Loday cocycle of `u_s`.
    pub fn kl_cocycle_value(&self, s: &PathSection, x: &[Q], y: &[Q], z: &[Q]) -> PathCMElement {
        let (sx, sy, sz) = (s.apply(x), s.apply(y), s.apply(z));
        let w = |a: &PolyPath, b: &PolyPath| self.omega_closed_form(s, a, b);
        w(&self.bracket_g(&sx, &sz), &sy)
            .sub(&w(&self.bracket_g(&sx, &sy), &sz))
            .sub(&w(&self.bracket_g(&sy, &sz), &sx))
    }

    /// `θ_s(x, y) = η̃_B(s₀x, s₀y) − η̃_B(s x, s y)`, the correction with
    /// `C_{u_s} = C_{u_{s₀}} + δθ_s`.
    pub fn theta(&self, s: &PathSection, x: &[Q], y: &[Q]) -> Vector {
        let s0 = PathSection::canonical(self.f.dim());
        vsub(
            &self.eta_tilde(&s0.apply(x), &s0.apply(y)),
            &self.eta_tilde(&s.apply(x), &s.apply(y)),
        )
    }
}

/// A section `s: f → P₀f` of `p = ev₁`, given by matrices `S_k` with
/// `s(x)(t) = Σ_k t^k S_k x`, `S_0 = 0` and `Σ_k S_k = id`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSection {
    mats: Vec<Matrix>,
}

impl PathSection {
    /// A general polynomial section from its coefficient matrices.
    pub fn new(mats: Vec<Matrix>) -> Result<Self, CatalogError> {
        let Some(first) = mats.first() else {
            return Err(CatalogError::InvalidSection("no coefficients".into()));
        };
        let n = first.rows();
        if mats.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(CatalogError::InvalidSection(
                "coefficients must be square of equal size".into(),
            ));
        }
        if !first.is_zero() {
            return Err(CatalogError::InvalidSection("s(x)(0) must vanish".into()));
        }
        let total = mats.iter().skip(1).fold(Matrix::zeros(n, n), |acc, m| acc.add(m));
        if total != Matrix::identity(n) {
            return Err(CatalogError::InvalidSection("s(x)(1) must equal x".into()));
        }
        Ok(PathSection { mats })
    }

    /// `s_ψ(x) = ψ(t) x` for a scalar polynomial with `ψ(0) = 0` and
    /// `ψ(1) = 1`.
    pub fn from_psi(dim: usize, psi: &[Q]) -> Result<Self, CatalogError> {
        if psi.first().is_none_or(|c| *c != q(0)) {
            return Err(CatalogError::InvalidSection("psi(0) must be 0".into()));
        }
        if psi.iter().fold(q(0), |acc, c| acc + c) != one() {
            return Err(CatalogError::InvalidSection("psi(1) must be 1".into()));
        }
        let id = Matrix::identity(dim);
        PathSection::new(psi.iter().map(|c| id.scale(c)).collect())
    }

    /// The canonical section `s₀(x) = t x`.
    pub fn canonical(dim: usize) -> Self {
        PathSection {
            mats: vec![Matrix::zeros(dim, dim), Matrix::identity(dim)],
        }
    }

    /// The coefficient matrices.
    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    /// `s(x)`.
    pub fn apply(&self, x: &[Q]) -> PolyPath {
        PolyPath::trimmed(x.len(), self.mats.iter().map(|m| m.apply(x)).collect())
    }

    /// `ρ_s(f) = f − s(f(1))`, a loop for every based `f`.
    pub fn rho(&self, f: &PolyPath) -> PolyPath {
        f.sub(&self.apply(&f.end()))
    }
}

/// The adjustment `η_{B,s}(f, g) = ([f, g] − s[f(1), g(1)], η̃_B(f, g))` of
/// the path module, adapted to `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathAdjustment {
    module: PathCrossedModule,
    section: PathSection,
}

/// The adjustment `η_{B,s}` of a path module.
pub fn path_adjustment(module: &PathCrossedModule, section: &PathSection) -> Result<PathAdjustment, CatalogError> {
    if section.matrices()[0].rows() != module.f().dim() {
        return Err(CatalogError::InvalidSection(
            "section and algebra dimensions differ".into(),
        ));
    }
    Ok(PathAdjustment {
        module: module.clone(),
        section: section.clone(),
    })
}

/// The outcome of checking the adjustment identities on one sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PathAdjustmentCheck {
    /// `η([X,Y],Z) + η(Y,[X,Z]) = η(X,[Y,Z])`.
    pub t_condition: bool,
    /// `η(t x, Y) = −α(Y, x)`.
    pub left_boundary: bool,
    /// `η(X, t y) = α(X, y)`.
    pub right_boundary: bool,
    /// `t η(X, Y) = ρ_s[X, Y]`.
    pub adapted: bool,
    /// `η(X, Y) + η(Y, X) = (0, −2 B(X(1), Y(1)))`.
    pub symmetric_part: bool,
}

impl PathAdjustmentCheck {
    /// True when every identity holds.
    pub fn passed(&self) -> bool {
        self.t_condition && self.left_boundary && self.right_boundary && self.adapted && self.symmetric_part
    }
}

impl PathAdjustment {
    /// The module.
    pub fn module(&self) -> &PathCrossedModule {
        &self.module
    }

    /// The section.
    pub fn section(&self) -> &PathSection {
        &self.section
    }

    /// `η_{B,s}(f, g)`.
    pub fn eval(&self, f: &PolyPath, g: &PolyPath) -> PathCMElement {
        let m = &self.module;
        PathCMElement {
            loop_part: self.section.rho(&m.bracket_g(f, g)),
            central: m.eta_tilde(f, g),
        }
    }

    /// Checks every identity on based paths `X, Y, Z` and elements `x, y`
    /// of `h`.
    pub fn check(&self, xs: [&PolyPath; 3], x: &PathCMElement, y: &PathCMElement) -> PathAdjustmentCheck {
        let m = &self.module;
        let [a, b, c] = xs;
        let t_condition =
            self.eval(&m.bracket_g(a, b), c).add(&self.eval(b, &m.bracket_g(a, c))) == self.eval(a, &m.bracket_g(b, c));
        let left_boundary = self.eval(&m.t(x), b) == m.act(b, x).neg();
        let right_boundary = self.eval(a, &m.t(y)) == m.act(a, y);
        let adapted = m.t(&self.eval(a, b)) == self.section.rho(&m.bracket_g(a, b));
        let sym = self.eval(a, b).add(&self.eval(b, a));
        let expected = vscale(&q(-2), &m.form().eval(&a.end(), &b.end()));
        let symmetric_part = sym.loop_part.is_zero() && sym.central == expected;
        PathAdjustmentCheck {
            t_condition,
            left_boundary,
            right_boundary,
            adapted,
            symmetric_part,
        }
    }
}
