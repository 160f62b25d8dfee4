//! The Kassel–Loday class under butterflies.

use crossmod_cochains::{cohomology, is_exact, AltCochain};
use crossmod_crossed::{CrossedError, CrossedModule};
use crossmod_linalg::{Matrix, Vector};

use crate::data::{homotopy_maps, CocycleData};
use crate::ButterflyError;

fn omega_cochain(m: &CrossedModule, u: &Matrix) -> Result<AltCochain, ButterflyError> {
    let omega = m.omega_u(u).map_err(ButterflyError::Crossed)?;
    AltCochain::from_bilinear(&omega).map_err(ButterflyError::Cochain)
}

/// The transfer cochain of a butterfly and the identity it satisfies.
#[derive(Clone, Debug)]
pub struct KlTransferReport {
    /// `R' = φ^*ω_{u2} − f ∘ ω_{u1} − λ` on `g1`.
    pub r_prime: AltCochain,
    /// The descent `R` of `R'` to `f1`, with values in `h2`.
    pub r: AltCochain,
    /// `R̃ = (id − u2 t2) R`, with values in `a2`.
    pub r_tilde: AltCochain,
    /// `(π0)^* C_{u2} − (π1)_* C_{u1}` in `Alt³(f1, a2)`.
    pub difference: AltCochain,
    /// True when `δR̃` equals `difference`.
    pub coboundary_identity: bool,
    /// Coordinates of `[(π0)^* C_{u2}]` in `H³(f1, a2)`.
    pub pulled_class: Vector,
    /// Coordinates of `[(π1)_* C_{u1}]` in `H³(f1, a2)`.
    pub pushed_class: Vector,
}

impl KlTransferReport {
    /// True when the coboundary identity holds and the two classes agree.
    pub fn holds(&self) -> bool {
        self.coboundary_identity && self.pulled_class == self.pushed_class
    }
}

/// `R' = φ^*ω_{u2} − f ∘ ω_{u1} − λ` and its descent `R` to `f1`.
pub(crate) fn transfer_cochain(
    d: &CocycleData,
    u1: &Matrix,
    u2: &Matrix,
) -> Result<(AltCochain, AltCochain), ButterflyError> {
    let w1 = omega_cochain(d.source(), u1)?;
    let w2 = omega_cochain(d.target(), u2)?;
    let r_prime = w2.pullback(d.phi()).sub(&w1.pushforward(d.f())).sub(d.lambda());
    let r = d.source().descend(&r_prime).map_err(ButterflyError::Crossed)?;
    Ok((r_prime, r))
}

/// Computes `R'`, its descent `R` and `R̃ = (id − u2 t2) R`, and checks
/// `δR̃ = (π0)^* C_{u2} − (π1)_* C_{u1}` exactly.
pub fn kl_transfer_check(d: &CocycleData, u1: &Matrix, u2: &Matrix) -> Result<KlTransferReport, ButterflyError> {
    let (m1, m2) = (d.source(), d.target());
    let (r_prime, r) = transfer_cochain(d, u1, u2)?;
    let proj = Matrix::identity(m2.h().dim()).sub(&u2.mul(m2.t()));
    let r_tilde = m2
        .corestrict_cochain(&r.pushforward(&proj))
        .map_err(ButterflyError::Crossed)?;
    let maps = homotopy_maps(d)?;
    let c1 = m1.kl_cocycle(u1).map_err(ButterflyError::Crossed)?;
    let c2 = m2.kl_cocycle(u2).map_err(ButterflyError::Crossed)?;
    let pulled = c2.pullback(&maps.pi0);
    let pushed = c1.pushforward(&maps.pi1);
    let difference = pulled.sub(&pushed);
    let coboundary_identity = r_tilde.differential(m1.f()) == difference;
    let h3 = cohomology(m1.f(), m2.a_dim(), 3);
    let pulled_class = h3.class_of(&pulled).map_err(ButterflyError::Cochain)?;
    let pushed_class = h3.class_of(&pushed).map_err(ButterflyError::Cochain)?;
    Ok(KlTransferReport {
        r_prime,
        r,
        r_tilde,
        difference,
        coboundary_identity,
        pulled_class,
        pushed_class,
    })
}

/// For two modules with the same `f` and `a` and full splittings `u1`,
/// `u2`, builds cocycle data `G1 → G2` inducing identities on homotopy when
/// the Kassel–Loday classes agree, and returns `None` otherwise.
///
/// With `δR = C_{u1} − C_{u2}`, `s2` the section of `u2` and `j1: h1 → a`
/// the map with `ι1 j1 + u1 t1 = id`, the data is `φ = s2 p1`,
/// `f = ι2 j1` and `λ = ι2 ∘ (p1^* R − j1 ∘ ω_{u1}) + φ^* ω_{u2}`.
pub fn connect_same_kl(
    m1: &CrossedModule,
    u1: &Matrix,
    m2: &CrossedModule,
    u2: &Matrix,
) -> Result<Option<CocycleData>, ButterflyError> {
    if m1.f() != m2.f() || m1.a_dim() != m2.a_dim() {
        return Err(ButterflyError::Shape("the modules must share f and a".into()));
    }
    for (m, u) in [(m1, u1), (m2, u2)] {
        if !m.is_full_splitting(u) {
            return Err(ButterflyError::Crossed(CrossedError::InvalidSplitting(
                "a full splitting is required".into(),
            )));
        }
    }
    let c1 = m1.kl_cocycle(u1).map_err(ButterflyError::Crossed)?;
    let c2 = m2.kl_cocycle(u2).map_err(ButterflyError::Crossed)?;
    let Some(r) = is_exact(m1.f(), &c1.sub(&c2)).map_err(ButterflyError::Cochain)? else {
        return Ok(None);
    };
    let s2 = m2.section_from_halfsplitting(u2).map_err(ButterflyError::Crossed)?;
    let phi = s2.mul(m1.p());
    let j1 = m1.j0().mul(&Matrix::identity(m1.h().dim()).sub(&u1.mul(m1.t())));
    let w1 = omega_cochain(m1, u1)?;
    let w2 = omega_cochain(m2, u2)?;
    let inner = r.pullback(m1.p()).sub(&w1.pushforward(&j1));
    let lambda = inner.pushforward(m2.iota()).add(&w2.pullback(&phi));
    let f = m2.iota().mul(&j1);
    CocycleData::validated(m1.clone(), m2.clone(), phi, f, lambda).map(Some)
}
