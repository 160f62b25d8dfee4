//! Equivalence of cocycle data and the classification of self-butterflies.

use crossmod_cochains::{cohomology, AltCochain, CohomologySpace};
use crossmod_linalg::{LinearSystem, Matrix, Vector, Q};

use crate::data::{homotopy_maps, shift_section, CocycleData};
use crate::ButterflyError;

fn same_modules(d1: &CocycleData, d2: &CocycleData) -> Result<(), ButterflyError> {
    if d1.source() != d2.source() || d1.target() != d2.target() {
        return Err(ButterflyError::Shape("cocycle data between different modules".into()));
    }
    Ok(())
}

/// Finds `γ: g1 → h2` with `shift_section(d1, γ) = d2`, or `None` when the
/// two sets of data are not equivalent.
///
/// The first two relations are linear in `γ`. Two solutions of them differ
/// by a map with values in `ker t2`, which is central in `h2` and acted on
/// trivially, so along these directions the third relation is affine as
/// well and the search is a single linear solve. The result is verified
/// against the full relations.
pub fn cocycle_equivalent(d1: &CocycleData, d2: &CocycleData) -> Result<Option<Matrix>, ButterflyError> {
    same_modules(d1, d2)?;
    let (m1, m2) = (d1.source(), d1.target());
    let (n1, k1) = (m1.g().dim(), m1.h().dim());
    let (n2, k2) = (m2.g().dim(), m2.h().dim());
    let var = |r: usize, c: usize| r * n1 + c;
    let mut sys = LinearSystem::new(k2 * n1);
    let (t1, t2) = (m1.t(), m2.t());
    let dphi = d2.phi().sub(d1.phi());
    for i in 0..n2 {
        for c in 0..n1 {
            sys.add_equation((0..k2).map(|r| (var(r, c), t2[(i, r)].clone())), dphi[(i, c)].clone());
        }
    }
    let df = d2.f().sub(d1.f());
    for r in 0..k2 {
        for y in 0..k1 {
            sys.add_equation((0..n1).map(|c| (var(r, c), t1[(c, y)].clone())), df[(r, y)].clone());
        }
    }
    let sol = sys.solve();
    let Some(particular) = sol.particular else {
        return Ok(None);
    };
    let to_matrix = |v: &[Q]| Matrix::from_fn(k2, n1, |r, c| v[var(r, c)].clone());
    let gamma0 = to_matrix(&particular);
    let base = shift_section(d1, &gamma0)?;
    let residual = d2.lambda().sub(base.lambda()).to_components();
    let directions: Vec<Matrix> = sol.homogeneous.basis().iter().map(|v| to_matrix(v)).collect();
    let mut columns = Vec::with_capacity(directions.len());
    for dir in &directions {
        let moved = shift_section(d1, &gamma0.add(dir))?;
        columns.push(moved.lambda().sub(base.lambda()).to_components());
    }
    let mut lin = LinearSystem::new(directions.len());
    for (row, rhs) in residual.iter().enumerate() {
        lin.add_equation(
            columns.iter().enumerate().map(|(k, col)| (k, col[row].clone())),
            rhs.clone(),
        );
    }
    let Some(coeffs) = lin.solve().particular else {
        return Ok(None);
    };
    let mut gamma = gamma0;
    for (c, dir) in coeffs.iter().zip(&directions) {
        gamma = gamma.add(&dir.scale(c));
    }
    if &shift_section(d1, &gamma)? != d2 {
        return Err(ButterflyError::Descent(
            "the section shift is not affine along ker t2".into(),
        ));
    }
    Ok(Some(gamma))
}

/// Shifts the section of self-butterfly data inducing identities on
/// homotopy so that `φ = id` and `f = id`. Returns the normalized data and
/// the total shift `γ` with `shift_section(d, γ)` equal to it.
pub fn normalize_to_identity(d: &CocycleData) -> Result<(CocycleData, Matrix), ButterflyError> {
    let m = d.source();
    if m != d.target() {
        return Err(ButterflyError::Shape(
            "a self-butterfly needs equal source and target".into(),
        ));
    }
    let maps = homotopy_maps(d)?;
    if maps.pi0 != Matrix::identity(m.f().dim()) {
        return Err(ButterflyError::NotIdentity("the map on f is not the identity".into()));
    }
    if maps.pi1 != Matrix::identity(m.a_dim()) {
        return Err(ButterflyError::NotIdentity("the map on a is not the identity".into()));
    }
    let (n, k) = (m.g().dim(), m.h().dim());
    let t = m.t();
    let var = |r: usize, c: usize| r * n + c;
    let to_matrix = |v: &[Q]| Matrix::from_fn(k, n, |r, c| v[var(r, c)].clone());

    // Step 1: t γ1 = φ − id, then shift by −γ1 so that φ = id.
    let dphi = d.phi().sub(&Matrix::identity(n));
    let mut sys = LinearSystem::new(k * n);
    for i in 0..n {
        for c in 0..n {
            sys.add_equation((0..k).map(|r| (var(r, c), t[(i, r)].clone())), dphi[(i, c)].clone());
        }
    }
    let gamma1 = to_matrix(
        &sys.solve()
            .particular
            .ok_or_else(|| ButterflyError::NotIdentity("phi − id does not land in t(h)".into()))?,
    );
    let minus_one = -crossmod_linalg::one();
    let step1 = shift_section(d, &gamma1.scale(&minus_one))?;

    // Step 2: γ2 t = f − id with t γ2 = 0, then shift by −γ2 so that f = id.
    let df = step1.f().sub(&Matrix::identity(k));
    let mut sys = LinearSystem::new(k * n);
    for r in 0..k {
        for y in 0..k {
            sys.add_equation((0..n).map(|c| (var(r, c), t[(c, y)].clone())), df[(r, y)].clone());
        }
    }
    for i in 0..n {
        for c in 0..n {
            sys.add_equation((0..k).map(|r| (var(r, c), t[(i, r)].clone())), crossmod_linalg::zero());
        }
    }
    let gamma2 = to_matrix(
        &sys.solve()
            .particular
            .ok_or_else(|| ButterflyError::NotIdentity("f − id does not factor through t".into()))?,
    );
    let total = gamma1.add(&gamma2).scale(&minus_one);
    let normalized = shift_section(d, &total)?;
    debug_assert_eq!(normalized.phi(), &Matrix::identity(n));
    debug_assert_eq!(normalized.f(), &Matrix::identity(k));
    Ok((normalized, total))
}

/// The class in `H²(f, a)` of a self-butterfly inducing identities on
/// homotopy.
#[derive(Clone, Debug)]
pub struct SelfClass {
    /// The closed cochain `ξ` with `λ = ι_* p^* ξ` after normalization.
    pub xi: AltCochain,
    /// `H²(f, a)`.
    pub space: CohomologySpace,
    /// Coordinates of `[ξ]` in the basis of `space`.
    pub coords: Vector,
    /// The section shift used for the normalization.
    pub shift: Matrix,
}

/// Normalizes the section so that `φ` and `f` are identities and reads off
/// `[λ] ∈ H²(f, a)`.
pub fn classify_self_butterfly(d: &CocycleData) -> Result<SelfClass, ButterflyError> {
    let (normalized, shift) = normalize_to_identity(d)?;
    let m = d.source();
    let down = m.descend(normalized.lambda()).map_err(ButterflyError::Crossed)?;
    let xi = m.corestrict_cochain(&down).map_err(ButterflyError::Crossed)?;
    let space = cohomology(m.f(), m.a_dim(), 2);
    let coords = space.class_of(&xi).map_err(ButterflyError::Cochain)?;
    Ok(SelfClass {
        xi,
        space,
        coords,
        shift,
    })
}
