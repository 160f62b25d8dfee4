//! Cocycle data `(φ, f, λ)` and the operations defined directly on it.

use crossmod_cochains::AltCochain;
use crossmod_crossed::CrossedModule;
use crossmod_lie::LieAlgebra;
use crossmod_linalg::{unit, vadd, vis_zero, vsub, Matrix};

use crate::ButterflyError;

/// Cocycle data for a butterfly from `source` to `target`: linear maps
/// `φ: g1 → g2` and `f: h1 → h2` and `λ ∈ Alt²(g1, h2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleData {
    source: CrossedModule,
    target: CrossedModule,
    phi: Matrix,
    f: Matrix,
    lambda: AltCochain,
}

impl CocycleData {
    /// Assembles cocycle data after checking shapes. The cocycle conditions
    /// are checked by [`validate_cocycle_data`].
    pub fn new(
        source: CrossedModule,
        target: CrossedModule,
        phi: Matrix,
        f: Matrix,
        lambda: AltCochain,
    ) -> Result<Self, ButterflyError> {
        let (g1, h1) = (source.g().dim(), source.h().dim());
        let (g2, h2) = (target.g().dim(), target.h().dim());
        if phi.rows() != g2 || phi.cols() != g1 {
            return Err(ButterflyError::Shape("phi must map g1 to g2".into()));
        }
        if f.rows() != h2 || f.cols() != h1 {
            return Err(ButterflyError::Shape("f must map h1 to h2".into()));
        }
        if lambda.degree() != 2 || lambda.source_dim() != g1 || lambda.values_dim() != h2 {
            return Err(ButterflyError::Shape(
                "lambda must be an h2-valued 2-cochain on g1".into(),
            ));
        }
        Ok(CocycleData {
            source,
            target,
            phi,
            f,
            lambda,
        })
    }

    /// Like [`CocycleData::new`], and fails unless all cocycle conditions
    /// hold.
    pub fn validated(
        source: CrossedModule,
        target: CrossedModule,
        phi: Matrix,
        f: Matrix,
        lambda: AltCochain,
    ) -> Result<Self, ButterflyError> {
        let d = CocycleData::new(source, target, phi, f, lambda)?;
        validate_cocycle_data(&d).into_result()?;
        Ok(d)
    }

    /// The source crossed module.
    pub fn source(&self) -> &CrossedModule {
        &self.source
    }

    /// The target crossed module.
    pub fn target(&self) -> &CrossedModule {
        &self.target
    }

    /// `φ: g1 → g2`.
    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    /// `f: h1 → h2`.
    pub fn f(&self) -> &Matrix {
        &self.f
    }

    /// `λ ∈ Alt²(g1, h2)`.
    pub fn lambda(&self) -> &AltCochain {
        &self.lambda
    }
}

/// One of the four conditions on cocycle data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocycleCondition {
    /// `[φX, φY] − φ[X, Y] = t2 λ(X, Y)`.
    Bracket,
    /// `t2 f = φ t1`.
    Square,
    /// `α2(φX, f y) = f(α1(X, y)) + λ(X, t1 y)`.
    Exchange,
    /// `α2(φX, λ(Y, Z)) + α2(φY, λ(Z, X)) + α2(φZ, λ(X, Y)) = −δλ(X, Y, Z)`.
    Cyclic,
}

impl CocycleCondition {
    /// A short textual form of the condition.
    pub fn describe(&self) -> &'static str {
        match self {
            CocycleCondition::Bracket => "[phi X, phi Y] - phi[X,Y] = t2 lambda(X,Y)",
            CocycleCondition::Square => "t2 f = phi t1",
            CocycleCondition::Exchange => "alpha2(phi X, f y) = f(alpha1(X, y)) + lambda(X, t1 y)",
            CocycleCondition::Cyclic => "cyclic sum of alpha2(phi X, lambda(Y,Z)) = -(d lambda)(X,Y,Z)",
        }
    }
}

/// Outcome of one condition: the first violating basis tuple, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleCheck {
    /// The condition checked.
    pub condition: CocycleCondition,
    /// The first failing basis tuple.
    pub violation: Option<Vec<usize>>,
}

/// The result of [`validate_cocycle_data`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleReport {
    /// One entry per condition.
    pub checks: Vec<CocycleCheck>,
}

impl CocycleReport {
    /// True when all conditions hold.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.violation.is_none())
    }

    /// The first failure as an error.
    pub fn into_result(self) -> Result<(), ButterflyError> {
        match self.checks.into_iter().find(|c| c.violation.is_some()) {
            None => Ok(()),
            Some(c) => Err(ButterflyError::InvalidData {
                condition: c.condition,
                tuple: c.violation.expect("failed check has a violation"),
            }),
        }
    }
}

/// Checks the four cocycle conditions on all basis tuples.
pub fn validate_cocycle_data(d: &CocycleData) -> CocycleReport {
    let (m1, m2) = (&d.source, &d.target);
    let (g1, g2) = (m1.g(), m2.g());
    let (n1, k1) = (g1.dim(), m1.h().dim());
    let phi_cols = d.phi.columns();
    let t1_cols = m1.t().columns();

    let mut bracket = None;
    'bracket: for i in 0..n1 {
        for j in (i + 1)..n1 {
            let lhs = vsub(
                &g2.bracket(&phi_cols[i], &phi_cols[j]),
                &d.phi.apply(g1.bracket_basis(i, j)),
            );
            if lhs != m2.t().apply(d.lambda.at(&[i, j])) {
                bracket = Some(vec![i, j]);
                break 'bracket;
            }
        }
    }

    let square = {
        let lhs = m2.t().mul(&d.f);
        let rhs = d.phi.mul(m1.t());
        (0..k1).find(|&y| lhs.column(y) != rhs.column(y)).map(|y| vec![y])
    };

    let mut exchange = None;
    'exchange: for x in 0..n1 {
        let ex = unit(n1, x);
        for y in 0..k1 {
            let ey = unit(k1, y);
            let lhs = m2.act(&phi_cols[x], &d.f.column(y));
            let rhs = vadd(
                &d.f.apply(&m1.act(&ex, &ey)),
                &d.lambda.eval(&[ex.clone(), t1_cols[y].clone()]),
            );
            if lhs != rhs {
                exchange = Some(vec![x, y]);
                break 'exchange;
            }
        }
    }

    let cyclic_defect = cyclic_sum(m2, &d.phi, &d.lambda).add(&d.lambda.differential(g1));
    let cyclic = first_nonzero_triple(&cyclic_defect);

    CocycleReport {
        checks: vec![
            CocycleCheck {
                condition: CocycleCondition::Bracket,
                violation: bracket,
            },
            CocycleCheck {
                condition: CocycleCondition::Square,
                violation: square,
            },
            CocycleCheck {
                condition: CocycleCondition::Exchange,
                violation: exchange,
            },
            CocycleCheck {
                condition: CocycleCondition::Cyclic,
                violation: cyclic,
            },
        ],
    }
}

fn first_nonzero_triple(w: &AltCochain) -> Option<Vec<usize>> {
    let n = w.source_dim();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if !vis_zero(w.at(&[i, j, k])) {
                    return Some(vec![i, j, k]);
                }
            }
        }
    }
    None
}

/// `(X, Y, Z) ↦ α(φX, λ(Y, Z)) + α(φY, λ(Z, X)) + α(φZ, λ(X, Y))`.
fn cyclic_sum(target: &CrossedModule, phi: &Matrix, lambda: &AltCochain) -> AltCochain {
    let n = phi.cols();
    let phi_cols = phi.columns();
    AltCochain::from_fn(3, n, target.h().dim(), |idx| {
        let (x, y, z) = (idx[0], idx[1], idx[2]);
        let a = target.act(&phi_cols[x], lambda.at(&[y, z]));
        let b = target.act(&phi_cols[y], lambda.at(&[z, x]));
        let c = target.act(&phi_cols[z], lambda.at(&[x, y]));
        vadd(&vadd(&a, &b), &c)
    })
}

/// The identity data `(id, id, 0)` on a module.
pub fn identity_data(m: &CrossedModule) -> CocycleData {
    let (n, k) = (m.g().dim(), m.h().dim());
    CocycleData::new(
        m.clone(),
        m.clone(),
        Matrix::identity(n),
        Matrix::identity(k),
        AltCochain::zero(2, n, k),
    )
    .expect("identity data has consistent shapes")
}

/// The data `(id, id, ι_* p^* ξ)` of the self-butterfly twisted by an
/// `a`-valued 2-cochain `ξ` on `f`. It is cocycle data exactly when `ξ` is
/// closed.
pub fn twist_data(m: &CrossedModule, xi: &AltCochain) -> Result<CocycleData, ButterflyError> {
    if xi.degree() != 2 || xi.source_dim() != m.f().dim() || xi.values_dim() != m.a_dim() {
        return Err(ButterflyError::Shape("xi must be an a-valued 2-cochain on f".into()));
    }
    let lambda = xi.pushforward(m.iota()).pullback(m.p());
    CocycleData::new(
        m.clone(),
        m.clone(),
        Matrix::identity(m.g().dim()),
        Matrix::identity(m.h().dim()),
        lambda,
    )
}

/// The data obtained from the section `q + i2 γ` when `d` comes from `q`,
/// for a linear map `γ: g1 → h2`:
///
/// * `φ' = φ + t2 γ`,
/// * `f' = f + γ t1`,
/// * `λ'(X, Y) = λ(X, Y) + α2(φX, γY) − α2(φY, γX) + [γX, γY] − γ[X, Y]`.
pub fn shift_section(d: &CocycleData, gamma: &Matrix) -> Result<CocycleData, ButterflyError> {
    let (m1, m2) = (&d.source, &d.target);
    let (n1, k2) = (m1.g().dim(), m2.h().dim());
    if gamma.rows() != k2 || gamma.cols() != n1 {
        return Err(ButterflyError::Shape("gamma must map g1 to h2".into()));
    }
    let phi = d.phi.add(&m2.t().mul(gamma));
    let f = d.f.add(&gamma.mul(m1.t()));
    let phi_cols = d.phi.columns();
    let gamma_cols = gamma.columns();
    let h2 = m2.h();
    let lambda = AltCochain::from_fn(2, n1, k2, |idx| {
        let (x, y) = (idx[0], idx[1]);
        let mut v = d.lambda.at(&[x, y]).to_vec();
        v = vadd(&v, &m2.act(&phi_cols[x], &gamma_cols[y]));
        v = vsub(&v, &m2.act(&phi_cols[y], &gamma_cols[x]));
        v = vadd(&v, &h2.bracket(&gamma_cols[x], &gamma_cols[y]));
        vsub(&v, &gamma.apply(m1.g().bracket_basis(x, y)))
    });
    CocycleData::new(m1.clone(), m2.clone(), phi, f, lambda)
}

/// The composite of `d1: G1 → G2` and `d2: G2 → G3`:
/// `(φ2 φ1, f2 f1, φ1^* λ2 + (f2)_* λ1)`.
pub fn compose(d1: &CocycleData, d2: &CocycleData) -> Result<CocycleData, ButterflyError> {
    if d1.target != d2.source {
        return Err(ButterflyError::Shape(
            "the target of the first data is not the source of the second".into(),
        ));
    }
    let phi = d2.phi.mul(&d1.phi);
    let f = d2.f.mul(&d1.f);
    let lambda = d2.lambda.pullback(&d1.phi).add(&d1.lambda.pushforward(&d2.f));
    CocycleData::new(d1.source.clone(), d2.target.clone(), phi, f, lambda)
}

/// The maps induced on homotopy: `π0: f1 → f2` and `π1: a1 → a2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomotopyMaps {
    /// `[X] ↦ [φX]`.
    pub pi0: Matrix,
    /// The restriction of `f` to `a1`, corestricted to `a2`.
    pub pi1: Matrix,
}

/// Computes the induced maps, verifying that `φ` descends, that `f`
/// restricts, and that both results are Lie algebra homomorphisms.
pub fn homotopy_maps(d: &CocycleData) -> Result<HomotopyMaps, ButterflyError> {
    let (m1, m2) = (&d.source, &d.target);
    if !m2.p().mul(&d.phi).mul(m1.t()).is_zero() {
        return Err(ButterflyError::Descent("phi does not map t1(h1) into t2(h2)".into()));
    }
    let pi0 = m2.p().mul(&d.phi).mul(m1.lift());
    let on_a = d.f.mul(m1.iota());
    if !m2.t().mul(&on_a).is_zero() {
        return Err(ButterflyError::Descent("f does not map a1 into a2".into()));
    }
    let pi1 = m2.j0().mul(&on_a);
    if !m1.f().is_homomorphism_to(m2.f(), &pi0) {
        return Err(ButterflyError::Descent("the map on f is not a homomorphism".into()));
    }
    Ok(HomotopyMaps { pi0, pi1 })
}

/// True when both induced maps on homotopy are isomorphisms.
pub fn is_invertible(d: &CocycleData) -> Result<bool, ButterflyError> {
    let h = homotopy_maps(d)?;
    let iso = |m: &Matrix| m.rows() == m.cols() && m.rank() == m.rows();
    Ok(iso(&h.pi0) && iso(&h.pi1))
}

/// `γ_{φ,λ}(X, Y, Z) = α(φX, λ(Y, Z)) + α(φY, λ(Z, X)) + α(φZ, λ(X, Y))` for
/// a linear map `φ: l → g` into the `g` of `target` whose bracket defect is
/// `t λ`. This is the correction in `φ^*(δω_u) = δ(φ^*ω_u) + γ_{φ,λ}`.
pub fn gamma_correction(
    target: &CrossedModule,
    l: &LieAlgebra,
    phi: &Matrix,
    lambda: &AltCochain,
) -> Result<AltCochain, ButterflyError> {
    let n = l.dim();
    if phi.rows() != target.g().dim() || phi.cols() != n {
        return Err(ButterflyError::Shape("phi must map l to g".into()));
    }
    if lambda.degree() != 2 || lambda.source_dim() != n || lambda.values_dim() != target.h().dim() {
        return Err(ButterflyError::Shape(
            "lambda must be an h-valued 2-cochain on l".into(),
        ));
    }
    let cols = phi.columns();
    for i in 0..n {
        for j in (i + 1)..n {
            let defect = vsub(
                &target.g().bracket(&cols[i], &cols[j]),
                &phi.apply(l.bracket_basis(i, j)),
            );
            if defect != target.t().apply(lambda.at(&[i, j])) {
                return Err(ButterflyError::InvalidData {
                    condition: CocycleCondition::Bracket,
                    tuple: vec![i, j],
                });
            }
        }
    }
    Ok(cyclic_sum(target, phi, lambda))
}

/// `φ^*(δω_u) − δ(φ^*ω_u)` for a linear map `φ: l → g`.
pub fn pullback_differential_defect(
    target: &CrossedModule,
    l: &LieAlgebra,
    phi: &Matrix,
    u: &Matrix,
) -> Result<AltCochain, ButterflyError> {
    let omega = AltCochain::from_bilinear(&target.omega_u(u).map_err(ButterflyError::Crossed)?)
        .map_err(ButterflyError::Cochain)?;
    let lhs = omega.differential(target.g()).pullback(phi);
    let rhs = omega.pullback(phi).differential(l);
    Ok(lhs.sub(&rhs))
}
