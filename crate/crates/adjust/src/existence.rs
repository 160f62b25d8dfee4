//! Existence, construction and classification of adapted adjustments.

use crossmod_cochains::{differential_matrix, is_exact, AltCochain};
use crossmod_crossed::CrossedModule;
use crossmod_lie::Bilinear;
use crossmod_linalg::{solve_affine, vzero, Matrix, Vector, Q};
use num_traits::Zero;

use crate::adjustment::{lift_from_homotopy, AdaptedAdjustment};
use crate::tspace::{chern_weil_unchecked, invariance_violation, invariant_forms, t_space};
use crate::AdjustError;

/// The answer of [`adjustment_exists`].
#[derive(Clone, Debug)]
pub struct Existence {
    /// The half splitting `u` used for the Kassel–Loday cocycle.
    pub splitting: Matrix,
    /// A pair `(B, ξ)` with `cw(B) − C_u = δξ`, when one exists.
    pub witness: Option<(Bilinear, AltCochain)>,
}

impl Existence {
    /// True when adjustments exist.
    pub fn exists(&self) -> bool {
        self.witness.is_some()
    }
}

/// Decides whether the module admits an infinitesimal adjustment, using
/// the default splitting.
pub fn adjustment_exists(m: &CrossedModule) -> Existence {
    adjustment_exists_with(m, &m.default_splitting()).expect("the default splitting is valid")
}

/// Decides existence by one joint linear solve of `cw(B) − δξ = C_u` over
/// invariant symmetric `B: f × f → a` and `ξ ∈ Alt²(f, a)`.
pub fn adjustment_exists_with(m: &CrossedModule, u: &Matrix) -> Result<Existence, AdjustError> {
    let c_u = m.kl_cocycle(u).map_err(AdjustError::Crossed)?;
    let f = m.f();
    let (nf, va) = (f.dim(), m.a_dim());
    let forms = invariant_forms(f, va);
    let d2 = differential_matrix(f, 2);
    let (rows3, cols2) = (d2.rows(), d2.cols());
    let mut columns: Vec<Vector> = forms
        .iter()
        .map(|b| chern_weil_unchecked(f, b).to_components())
        .collect();
    for j in 0..cols2 {
        for c in 0..va {
            let mut col = vzero(rows3 * va);
            for r in 0..rows3 {
                col[r * va + c] = -d2[(r, j)].clone();
            }
            columns.push(col);
        }
    }
    let a = Matrix::from_columns(rows3 * va, &columns);
    let sol = solve_affine(&a, &c_u.to_components());
    let witness = sol.particular.map(|x| {
        let mut b = Bilinear::zero(nf, va);
        for (k, form) in forms.iter().enumerate() {
            if !x[k].is_zero() {
                b = b.add(&form.scale(&x[k]));
            }
        }
        let xi = AltCochain::from_components(2, nf, va, &x[forms.len()..]);
        (b, xi)
    });
    Ok(Existence {
        splitting: u.clone(),
        witness,
    })
}

fn check_form(m: &CrossedModule, b: &Bilinear) -> Result<(), AdjustError> {
    if b.values_dim() != m.a_dim() {
        return Err(AdjustError::Shape("B must take values in a".into()));
    }
    if let Some(msg) = invariance_violation(m.f(), b) {
        return Err(AdjustError::NotInvariantForm(msg));
    }
    Ok(())
}

/// A cochain `ξ ∈ Alt²(f, a)` with `cw(B) − C_u = δξ`, or `None` when
/// `[cw(B)]` differs from the Kassel–Loday class.
pub fn primitive_for_form(m: &CrossedModule, u: &Matrix, b: &Bilinear) -> Result<Option<AltCochain>, AdjustError> {
    check_form(m, b)?;
    let c_u = m.kl_cocycle(u).map_err(AdjustError::Crossed)?;
    let diff = chern_weil_unchecked(m.f(), b).sub(&c_u);
    is_exact(m.f(), &diff).map_err(AdjustError::Cochain)
}

/// `η = ω_u + p^*ξ − p^*B`, an adjustment adapted to the section of `u`
/// whose adjusted class is `B`. Requires `cw(B) − C_u = δξ` exactly;
/// otherwise the residual `cw(B) − C_u − δξ` is reported.
pub fn construct_adjustment(
    m: &CrossedModule,
    u: &Matrix,
    b: &Bilinear,
    xi: &AltCochain,
) -> Result<AdaptedAdjustment, AdjustError> {
    check_form(m, b)?;
    let f = m.f();
    if xi.degree() != 2 || xi.source_dim() != f.dim() || xi.values_dim() != m.a_dim() {
        return Err(AdjustError::Shape("xi must be an a-valued 2-cochain on f".into()));
    }
    let c_u = m.kl_cocycle(u).map_err(AdjustError::Crossed)?;
    let residual = chern_weil_unchecked(f, b).sub(&c_u).sub(&xi.differential(f));
    if !residual.is_zero() {
        return Err(AdjustError::Residual { residual });
    }
    let omega = m.omega_u(u).map_err(AdjustError::Crossed)?;
    let eta = omega
        .add(&lift_from_homotopy(m, &xi.to_bilinear()))
        .sub(&lift_from_homotopy(m, b));
    let section = m.section_from_halfsplitting(u).map_err(AdjustError::Crossed)?;
    Ok(AdaptedAdjustment { section, eta })
}

/// `adpt^u(η) = η + u t (ω_u − η)`, the projection of an adjustment onto
/// the adjustments adapted to the section of `u`.
pub fn adapt_projection(m: &CrossedModule, u: &Matrix, eta: &Bilinear) -> Result<AdaptedAdjustment, AdjustError> {
    let omega = m.omega_u(u).map_err(AdjustError::Crossed)?;
    if eta.source_dim() != omega.source_dim() || eta.values_dim() != omega.values_dim() {
        return Err(AdjustError::Shape("eta must be a bilinear map g × g → h".into()));
    }
    let ut = u.mul(m.t());
    let eta = eta.add(&omega.sub(eta).pushforward(&ut));
    let section = m.section_from_halfsplitting(u).map_err(AdjustError::Crossed)?;
    Ok(AdaptedAdjustment { section, eta })
}

/// The adjustments adapted to a section: a base point plus the directions
/// `p^* T(f, a)`.
#[derive(Clone, Debug)]
pub struct AdjustmentSpace {
    /// An adapted adjustment.
    pub base: AdaptedAdjustment,
    /// A basis of the direction space, as maps `g × g → h`.
    pub directions: Vec<Bilinear>,
}

impl AdjustmentSpace {
    /// Dimension of the affine space.
    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    /// The point `base + Σ c_i directions_i`.
    pub fn point(&self, coeffs: &[Q]) -> Bilinear {
        assert_eq!(coeffs.len(), self.directions.len(), "coefficient count mismatch");
        let mut eta = self.base.eta.clone();
        for (c, d) in coeffs.iter().zip(&self.directions) {
            if !c.is_zero() {
                eta = eta.add(&d.scale(c));
            }
        }
        eta
    }
}

/// Describes all adjustments adapted to `section`, or reports that none
/// exist.
pub fn classify_adjustments(m: &CrossedModule, section: &Matrix) -> Result<AdjustmentSpace, AdjustError> {
    let u = m.extend_section(section).map_err(AdjustError::Crossed)?;
    let existence = adjustment_exists_with(m, &u)?;
    let (b, xi) = existence.witness.ok_or(AdjustError::NoAdjustment)?;
    let base = construct_adjustment(m, &u, &b, &xi)?;
    let directions = t_space(m.f(), m.a_dim())
        .basis
        .iter()
        .map(|beta| lift_from_homotopy(m, beta))
        .collect();
    Ok(AdjustmentSpace { base, directions })
}
