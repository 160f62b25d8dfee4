//! Sections, half splittings and the cochains built from them.

use crossmod_cochains::{cohomology, AltCochain, CohomologySpace};
use crossmod_lie::Bilinear;
use crossmod_linalg::{solve_affine, vadd, vsub, Matrix, Vector};

use crate::module::CrossedModule;
use crate::CrossedError;

/// A Kassel–Loday cocycle together with its cohomology space and the
/// coordinates of its class.
#[derive(Clone, Debug)]
pub struct KlClass {
    /// The representative `C_u` on `f` with values in `a`.
    pub cocycle: AltCochain,
    /// `H³(f, a)`.
    pub space: CohomologySpace,
    /// Coordinates of `[C_u]` in the basis of `space`.
    pub coords: Vector,
}

impl KlClass {
    /// True when the class vanishes.
    pub fn is_trivial(&self) -> bool {
        crossmod_linalg::vis_zero(&self.coords)
    }
}

impl CrossedModule {
    /// Checks `p s = id_f`.
    pub fn check_section(&self, s: &Matrix) -> Result<(), CrossedError> {
        if s.rows() != self.g().dim() || s.cols() != self.f().dim() {
            return Err(CrossedError::InvalidSection("wrong shape".into()));
        }
        if self.p().mul(s) != Matrix::identity(self.f().dim()) {
            return Err(CrossedError::InvalidSection("p s is not the identity".into()));
        }
        Ok(())
    }

    /// Checks `t u t = t`.
    pub fn check_half_splitting(&self, u: &Matrix) -> Result<(), CrossedError> {
        if u.rows() != self.h().dim() || u.cols() != self.g().dim() {
            return Err(CrossedError::InvalidSplitting("wrong shape".into()));
        }
        let t = self.t();
        if &t.mul(u).mul(t) != t {
            return Err(CrossedError::InvalidSplitting("t u t is not t".into()));
        }
        Ok(())
    }

    /// True when `u` is a half splitting with `u t u = u`.
    pub fn is_full_splitting(&self, u: &Matrix) -> bool {
        self.check_half_splitting(u).is_ok() && &u.mul(self.t()).mul(u) == u
    }

    /// The idempotent `ρ_s = id − s p` of a section.
    pub fn rho_of_section(&self, s: &Matrix) -> Matrix {
        Matrix::identity(self.g().dim()).sub(&s.mul(self.p()))
    }

    /// The section `s_u = (id − t u) lift` induced by a half splitting.
    pub fn section_from_halfsplitting(&self, u: &Matrix) -> Result<Matrix, CrossedError> {
        self.check_half_splitting(u)?;
        let n = self.g().dim();
        let rho_perp = Matrix::identity(n).sub(&self.t().mul(u));
        Ok(rho_perp.mul(self.lift()))
    }

    /// A full splitting inducing the section `s`: `u = (t|_C)^{-1} ρ_s` for
    /// the pivot-rule complement `C` of `a` in `h`.
    pub fn extend_section(&self, s: &Matrix) -> Result<Matrix, CrossedError> {
        self.check_section(s)?;
        let rho = self.rho_of_section(s);
        let c = self.a().complement().as_matrix();
        let tc = self.t().mul(&c);
        let mut cols = Vec::with_capacity(self.g().dim());
        for y in rho.columns() {
            let sol = solve_affine(&tc, &y);
            let x = sol
                .particular
                .ok_or_else(|| CrossedError::InvalidSection("ρ_s does not land in t(h)".into()))?;
            cols.push(c.apply(&x));
        }
        Ok(Matrix::from_columns(self.h().dim(), &cols))
    }

    /// The deterministic splitting: the extension of the default section.
    pub fn default_splitting(&self) -> Matrix {
        self.extend_section(self.lift()).expect("the default section is valid")
    }

    /// `ω_u(X, Y) = α(X, uY) − α(Y, uX) − [uX, uY] + u[ρ⊥X, ρ⊥Y]` with
    /// `ρ⊥ = id − t u`.
    pub fn omega_u(&self, u: &Matrix) -> Result<Bilinear, CrossedError> {
        self.check_half_splitting(u)?;
        Ok(self.omega_unchecked(u))
    }

    pub(crate) fn omega_unchecked(&self, u: &Matrix) -> Bilinear {
        let (g, h) = (self.g(), self.h());
        let n = g.dim();
        let rho_perp = Matrix::identity(n).sub(&self.t().mul(u));
        let ucols = u.columns();
        let pcols = rho_perp.columns();
        Bilinear::from_fn(n, h.dim(), |i, j| {
            let ei = crossmod_linalg::unit(n, i);
            let ej = crossmod_linalg::unit(n, j);
            let a = self.act(&ei, &ucols[j]);
            let b = self.act(&ej, &ucols[i]);
            let c = h.bracket(&ucols[i], &ucols[j]);
            let d = u.apply(&g.bracket(&pcols[i], &pcols[j]));
            vadd(&vsub(&vsub(&a, &b), &c), &d)
        })
    }

    /// Pulls a cochain on `g` back along `lift` and checks that it equals the
    /// pullback of the result along `p`, i.e. that it vanishes on `t h`.
    pub fn descend(&self, w: &AltCochain) -> Result<AltCochain, CrossedError> {
        let down = w.pullback(self.lift());
        if &down.pullback(self.p()) != w {
            return Err(CrossedError::Descent("cochain does not vanish on t(h)".into()));
        }
        Ok(down)
    }

    /// Rewrites an `h`-valued cochain with values in `ker t` as an
    /// `a`-valued cochain.
    pub fn corestrict_cochain(&self, w: &AltCochain) -> Result<AltCochain, CrossedError> {
        let down = w.pushforward(self.j0());
        if &down.pushforward(self.iota()) != w {
            return Err(CrossedError::Descent("cochain is not a-valued".into()));
        }
        Ok(down)
    }

    /// The Kassel–Loday cocycle `C_u ∈ Alt³(f, a)` with `δω_u = p^* ι C_u`.
    pub fn kl_cocycle(&self, u: &Matrix) -> Result<AltCochain, CrossedError> {
        let omega = AltCochain::from_bilinear(&self.omega_u(u)?).expect("ω_u is alternating");
        let d = omega.differential(self.g());
        self.corestrict_cochain(&self.descend(&d)?)
    }

    /// The Kassel–Loday class, computed with the default splitting.
    pub fn kl_class(&self) -> KlClass {
        self.kl_class_with(&self.default_splitting())
            .expect("the default splitting is valid")
    }

    /// The Kassel–Loday class, computed with a given half splitting.
    pub fn kl_class_with(&self, u: &Matrix) -> Result<KlClass, CrossedError> {
        let cocycle = self.kl_cocycle(u)?;
        let space = cohomology(self.f(), self.a_dim(), 3);
        let coords = space.class_of(&cocycle).map_err(CrossedError::Cochain)?;
        Ok(KlClass { cocycle, space, coords })
    }

    /// `θ ∈ Alt²(f, a)` with `p^* ι θ = ω_{u2} − ω_u + δ(u t (u2 − u))`, so
    /// that `δθ = C_{u2} − C_u`.
    pub fn splitting_change_cochain(&self, u: &Matrix, u2: &Matrix) -> Result<AltCochain, CrossedError> {
        let w1 = self.omega_u(u)?;
        let w2 = self.omega_u(u2)?;
        let v = u2.sub(u);
        let utv = u.mul(self.t()).mul(&v);
        let d_utv = AltCochain::from_matrix(&utv).differential(self.g());
        let diff = AltCochain::from_bilinear(&w2.sub(&w1))
            .expect("alternating")
            .add(&d_utv);
        self.corestrict_cochain(&self.descend(&diff)?)
    }
}
