//! Transfer of adapted adjustments along invertible butterflies.

use crossmod_adjust::{adjusted_kl, descend_bilinear, lift_from_homotopy, t_space, verify_adapted, AdaptedAdjustment};
use crossmod_cochains::AltCochain;
use crossmod_lie::Bilinear;
use crossmod_linalg::{solve_affine, Matrix, Vector};

use crate::data::{homotopy_maps, is_invertible, CocycleData};
use crate::kl::transfer_cochain;
use crate::realize::{extract, Butterfly};
use crate::ButterflyError;

fn check_sections(d: &CocycleData, s1: &Matrix, s2: &Matrix) -> Result<(), ButterflyError> {
    d.source().check_section(s1).map_err(ButterflyError::Crossed)?;
    d.target().check_section(s2).map_err(ButterflyError::Crossed)
}

/// True when the section behind `d` is neat for `s1` and `s2`:
/// `ρ_{s2} φ = φ ρ_{s1}`.
pub fn is_neat(d: &CocycleData, s1: &Matrix, s2: &Matrix) -> Result<bool, ButterflyError> {
    check_sections(d, s1, s2)?;
    let lhs = d.target().rho_of_section(s2).mul(d.phi());
    let rhs = d.phi().mul(&d.source().rho_of_section(s1));
    Ok(lhs == rhs)
}

/// A map `γ = F p1` such that `shift_section(d, γ)` is neat, where
/// `t2 F = s2 π0 − φ s1`. Returns zero when `d` is already neat.
pub fn neat_shift(d: &CocycleData, s1: &Matrix, s2: &Matrix) -> Result<Matrix, ButterflyError> {
    let (m1, m2) = (d.source(), d.target());
    if is_neat(d, s1, s2)? {
        return Ok(Matrix::zeros(m2.h().dim(), m1.g().dim()));
    }
    let pi0 = homotopy_maps(d)?.pi0;
    let rhs = s2.mul(&pi0).sub(&d.phi().mul(s1));
    let cols: Vec<Vector> = rhs
        .columns()
        .iter()
        .map(|c| {
            solve_affine(m2.t(), c)
                .particular
                .ok_or_else(|| ButterflyError::Descent("s2 π0 − φ s1 does not land in t2(h2)".into()))
        })
        .collect::<Result<_, _>>()?;
    let f = Matrix::from_columns(m2.h().dim(), &cols);
    Ok(f.mul(m1.p()))
}

/// Adjusts a section `q` of a butterfly to the neat section
/// `q + i2 F p1` with `t2 F = s2 π0 − φ_q s1`. A neat `q` is returned
/// unchanged.
pub fn neat_section_adjust(b: &Butterfly, q: &Matrix, s1: &Matrix, s2: &Matrix) -> Result<Matrix, ButterflyError> {
    let d = extract(b, q)?;
    let gamma = neat_shift(&d, s1, s2)?;
    Ok(q.add(&b.i2().mul(&gamma)))
}

/// `φ^* η2 = f_* η1 + λ`, the criterion for `η2` to be the transfer of
/// `η1`.
pub fn transfer_criterion(d: &CocycleData, eta1: &Bilinear, eta2: &Bilinear) -> bool {
    eta2.pullback(d.phi()) == eta1.pushforward(d.f()).add(&d.lambda().to_bilinear())
}

struct TransferMaps {
    pi0_inv: Matrix,
    pi1: Matrix,
}

fn transfer_maps(d: &CocycleData) -> Result<TransferMaps, ButterflyError> {
    if !is_invertible(d)? {
        return Err(ButterflyError::NotInvertible);
    }
    let maps = homotopy_maps(d)?;
    let pi0_inv = maps.pi0.inverse().expect("invertible butterflies induce isomorphisms");
    Ok(TransferMaps { pi0_inv, pi1: maps.pi1 })
}

/// Transfers an adjustment `η1` adapted to `s1` along invertible data whose
/// section is neat for `s1` and `s2`:
/// `η2 = ω_{u2} + p2^* (π0^{-1})^* ((π1)_* β − R)`, where
/// `p1^* β = η1 − ω_{u1}` and `R` is the descended transfer cochain. The
/// result is verified to be adapted to `s2`.
pub fn transfer_adjustment(
    d: &CocycleData,
    s1: &Matrix,
    s2: &Matrix,
    eta1: &Bilinear,
) -> Result<AdaptedAdjustment, ButterflyError> {
    let maps = transfer_maps(d)?;
    if !is_neat(d, s1, s2)? {
        return Err(ButterflyError::NotNeat);
    }
    let (m1, m2) = (d.source(), d.target());
    verify_adapted(m1, eta1, s1).map_err(ButterflyError::Adjust)?;
    let u1 = m1.extend_section(s1).map_err(ButterflyError::Crossed)?;
    let u2 = m2.extend_section(s2).map_err(ButterflyError::Crossed)?;
    let omega1 = m1.omega_u(&u1).map_err(ButterflyError::Crossed)?;
    let omega2 = m2.omega_u(&u2).map_err(ButterflyError::Crossed)?;
    let beta = descend_bilinear(m1, &eta1.sub(&omega1)).map_err(ButterflyError::Adjust)?;
    let (_, r) = transfer_cochain(d, &u1, &u2)?;
    let r_a: AltCochain = m2.corestrict_cochain(&r).map_err(ButterflyError::Crossed)?;
    let down = beta
        .pushforward(&maps.pi1)
        .sub(&r_a.to_bilinear())
        .pullback(&maps.pi0_inv);
    let eta = omega2.add(&lift_from_homotopy(m2, &down));
    verify_adapted(m2, &eta, s2).map_err(ButterflyError::Adjust)?;
    Ok(AdaptedAdjustment {
        section: s2.clone(),
        eta,
    })
}

/// The outcome of [`transfer_affinity_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffinityReport {
    /// Number of directions `ρ ∈ T(f1, a1)` checked (a full basis).
    pub directions: usize,
    /// True when the transfer of `η1 + p1^* ρ` is the transfer of `η1` plus
    /// `p2^* (π1)_* (π0^{-1})^* ρ` for every basis direction.
    pub affine: bool,
    /// True when the adjusted class of the transfer is
    /// `(π1)_* (π0^{-1})^*` of the adjusted class of `η1`.
    pub kl_natural: bool,
}

/// Checks that the transfer is affine along `ρ ↦ (π1)_* (π0^{-1})^* ρ` on a
/// basis of `T(f1, a1)` and compatible with the adjusted classes.
pub fn transfer_affinity_check(
    d: &CocycleData,
    s1: &Matrix,
    s2: &Matrix,
    eta1: &Bilinear,
) -> Result<AffinityReport, ButterflyError> {
    let maps = transfer_maps(d)?;
    let (m1, m2) = (d.source(), d.target());
    let along = |rho: &Bilinear| rho.pushforward(&maps.pi1).pullback(&maps.pi0_inv);
    let base = transfer_adjustment(d, s1, s2, eta1)?;
    let basis = t_space(m1.f(), m1.a_dim()).basis;
    let mut affine = true;
    for rho in &basis {
        let moved = transfer_adjustment(d, s1, s2, &eta1.add(&lift_from_homotopy(m1, rho)))?;
        let expected = base.eta.add(&lift_from_homotopy(m2, &along(rho)));
        affine &= moved.eta == expected;
    }
    let b1 = adjusted_kl(m1, eta1).map_err(ButterflyError::Adjust)?;
    let b2 = adjusted_kl(m2, &base.eta).map_err(ButterflyError::Adjust)?;
    Ok(AffinityReport {
        directions: basis.len(),
        affine,
        kl_natural: b2 == along(&b1),
    })
}
