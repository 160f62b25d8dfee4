//! Morphisms between adapted adjustments and the fibres of the adjusted
//! class map.

use crossmod_cochains::{cohomology, AltCochain, CohomologySpace};
use crossmod_crossed::CrossedModule;
use crossmod_lie::Bilinear;
use crossmod_linalg::{LinearSystem, Matrix, Vector, Q};

use crate::adjustment::{descend_bilinear, lift_from_homotopy, verify_adapted, AdaptedAdjustment};
use crate::existence::{construct_adjustment, primitive_for_form};
use crate::tspace::chern_weil_unchecked;
use crate::AdjustError;

/// Solutions `φ: f → h` of `s2 − s1 = t φ` and `η2 − η1 = δ(p^*φ)`, where
/// `δ(p^*φ)(X, Y) = −φ(p[X, Y])`.
#[derive(Clone, Debug)]
pub struct MorphismSolution {
    /// One morphism, or `None` when the two objects are not isomorphic.
    pub particular: Option<Matrix>,
    /// A basis of the solutions of the homogeneous system; these are the
    /// automorphisms of either object.
    pub homogeneous: Vec<Matrix>,
}

/// Solves for the morphisms from `(s1, η1)` to `(s2, η2)`. Both inputs
/// must be verified adapted adjustments.
pub fn solve_morphism(
    m: &CrossedModule,
    from: &AdaptedAdjustment,
    to: &AdaptedAdjustment,
) -> Result<MorphismSolution, AdjustError> {
    verify_adapted(m, &from.eta, &from.section)?;
    verify_adapted(m, &to.eta, &to.section)?;
    let (g, t, p) = (m.g(), m.t(), m.p());
    let (ng, nh, nf) = (g.dim(), m.h().dim(), m.f().dim());
    let var = |r: usize, c: usize| r * nf + c;
    let mut sys = LinearSystem::new(nh * nf);
    let ds = to.section.sub(&from.section);
    for i in 0..ng {
        for c in 0..nf {
            let terms = (0..nh).map(|r| (var(r, c), t[(i, r)].clone()));
            sys.add_equation(terms, ds[(i, c)].clone());
        }
    }
    let deta = to.eta.sub(&from.eta);
    for x in 0..ng {
        for y in 0..ng {
            let pb = p.apply(g.bracket_basis(x, y));
            let rhs = deta.at(x, y);
            for r in 0..nh {
                let terms = (0..nf).map(|c| (var(r, c), -pb[c].clone()));
                sys.add_equation(terms, rhs[r].clone());
            }
        }
    }
    let sol = sys.solve();
    let to_matrix = |v: &[Q]| Matrix::from_fn(nh, nf, |r, c| v[var(r, c)].clone());
    Ok(MorphismSolution {
        particular: sol.particular.as_deref().map(to_matrix),
        homogeneous: sol.homogeneous.basis().iter().map(|v| to_matrix(v)).collect(),
    })
}

/// The isomorphism classes of adjustments adapted to a section with a
/// prescribed adjusted class `B`.
#[derive(Clone, Debug)]
pub enum Pi0Fibre {
    /// `[cw(B)]` differs from the Kassel–Loday class; the coordinates of
    /// `[cw(B) − C_u]` in `H³(f, a)` are recorded.
    Empty {
        /// Nonzero class coordinates of the difference.
        difference: Vector,
    },
    /// The classes form an affine space over `H²(f, a)`.
    Affine {
        /// An adapted adjustment with adjusted class `B`.
        base: AdaptedAdjustment,
        /// `H²(f, a)`, acting by `η ↦ η + p^* ξ`.
        h2: CohomologySpace,
    },
}

impl Pi0Fibre {
    /// Dimension of the fibre, or `None` when it is empty.
    pub fn dim(&self) -> Option<usize> {
        match self {
            Pi0Fibre::Empty { .. } => None,
            Pi0Fibre::Affine { h2, .. } => Some(h2.dim()),
        }
    }
}

/// The fibre over `B` of the map from isomorphism classes of adjustments
/// adapted to `section` to invariant symmetric forms.
pub fn adjustment_pi0_fibre(m: &CrossedModule, section: &Matrix, b: &Bilinear) -> Result<Pi0Fibre, AdjustError> {
    let u = m.extend_section(section).map_err(AdjustError::Crossed)?;
    match primitive_for_form(m, &u, b)? {
        Some(xi) => Ok(Pi0Fibre::Affine {
            base: construct_adjustment(m, &u, b, &xi)?,
            h2: cohomology(m.f(), m.a_dim(), 2),
        }),
        None => {
            let c_u = m.kl_cocycle(&u).map_err(AdjustError::Crossed)?;
            let h3 = cohomology(m.f(), m.a_dim(), 3);
            let diff = chern_weil_unchecked(m.f(), b).sub(&c_u);
            let difference = h3.class_of(&diff).map_err(AdjustError::Cochain)?;
            Ok(Pi0Fibre::Empty { difference })
        }
    }
}

/// Moves an adapted adjustment by a closed `a`-valued 2-cochain on `f`.
pub fn shift_by_cocycle(m: &CrossedModule, adj: &AdaptedAdjustment, xi: &AltCochain) -> AdaptedAdjustment {
    AdaptedAdjustment {
        section: adj.section.clone(),
        eta: adj.eta.add(&lift_from_homotopy(m, &xi.to_bilinear())),
    }
}

/// The coordinates in `H²(f, a)` of `other − base` for two adjustments
/// adapted to the same section with the same adjusted class.
pub fn fibre_coordinates(
    m: &CrossedModule,
    base: &AdaptedAdjustment,
    other: &AdaptedAdjustment,
    h2: &CohomologySpace,
) -> Result<Vector, AdjustError> {
    if base.section != other.section {
        return Err(AdjustError::Shape(
            "adjustments must be adapted to the same section".into(),
        ));
    }
    let diff = descend_bilinear(m, &other.eta.sub(&base.eta))?;
    let xi = AltCochain::from_bilinear(&diff).map_err(|_| AdjustError::Descent("adjusted classes differ".into()))?;
    h2.class_of(&xi).map_err(AdjustError::Cochain)
}
