//! Verification of infinitesimal adjustments and the adjusted class.

use crossmod_crossed::CrossedModule;
use crossmod_lie::Bilinear;
use crossmod_linalg::{unit, vneg, Matrix};

use crate::tspace::t_violation;
use crate::AdjustError;

/// An infinitesimal adjustment together with the section it is adapted to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdaptedAdjustment {
    /// A section `f → g`.
    pub section: Matrix,
    /// The bilinear map `η: g × g → h`.
    pub eta: Bilinear,
}

/// One identity in the definition of an adjustment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjustmentIdentity {
    /// `η([X,Y],Z) + η(Y,[X,Z]) = η(X,[Y,Z])`.
    TCondition,
    /// `η(t x, Y) = −α(Y, x)`.
    LeftBoundary,
    /// `η(X, t y) = α(X, y)`.
    RightBoundary,
    /// `t η(X, Y) = ρ_s [X, Y]`.
    Adapted,
}

impl AdjustmentIdentity {
    /// A short textual form of the identity.
    pub fn describe(&self) -> &'static str {
        match self {
            AdjustmentIdentity::TCondition => "eta([X,Y],Z) + eta(Y,[X,Z]) = eta(X,[Y,Z])",
            AdjustmentIdentity::LeftBoundary => "eta(t x, Y) = -alpha(Y, x)",
            AdjustmentIdentity::RightBoundary => "eta(X, t y) = alpha(X, y)",
            AdjustmentIdentity::Adapted => "t eta(X, Y) = rho_s [X, Y]",
        }
    }
}

/// Outcome of checking one identity: the first violating tuple of basis
/// indices, or `None` when it holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    /// The identity checked.
    pub identity: AdjustmentIdentity,
    /// The first failing basis tuple.
    pub violation: Option<Vec<usize>>,
}

impl IdentityCheck {
    /// True when the identity holds.
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// The result of [`check_adjustment`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjustmentReport {
    /// One entry per identity, the adaptedness entry only when a section
    /// was supplied.
    pub checks: Vec<IdentityCheck>,
}

impl AdjustmentReport {
    /// True when every checked identity holds.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    /// True when the three defining identities hold.
    pub fn is_adjustment(&self) -> bool {
        self.checks
            .iter()
            .filter(|c| c.identity != AdjustmentIdentity::Adapted)
            .all(IdentityCheck::passed)
    }
}

/// Checks the defining identities of an infinitesimal adjustment on all
/// basis tuples, and adaptedness to `section` when given.
pub fn check_adjustment(
    m: &CrossedModule,
    eta: &Bilinear,
    section: Option<&Matrix>,
) -> Result<AdjustmentReport, AdjustError> {
    let (g, h) = (m.g(), m.h());
    let (n, k) = (g.dim(), h.dim());
    if eta.source_dim() != n || eta.values_dim() != k {
        return Err(AdjustError::Shape("eta must be a bilinear map g × g → h".into()));
    }
    let mut checks = vec![IdentityCheck {
        identity: AdjustmentIdentity::TCondition,
        violation: t_violation(g, eta).map(|v| v.to_vec()),
    }];
    let tcols = m.t().columns();
    let mut left = None;
    let mut right = None;
    'outer: for x in 0..k {
        let ex = unit(k, x);
        for y in 0..n {
            let ey = unit(n, y);
            let action = m.act(&ey, &ex);
            if left.is_none() && eta.eval(&tcols[x], &ey) != vneg(&action) {
                left = Some(vec![x, y]);
            }
            if right.is_none() && eta.eval(&ey, &tcols[x]) != action {
                right = Some(vec![y, x]);
            }
            if left.is_some() && right.is_some() {
                break 'outer;
            }
        }
    }
    checks.push(IdentityCheck {
        identity: AdjustmentIdentity::LeftBoundary,
        violation: left,
    });
    checks.push(IdentityCheck {
        identity: AdjustmentIdentity::RightBoundary,
        violation: right,
    });
    if let Some(s) = section {
        m.check_section(s).map_err(AdjustError::Crossed)?;
        let rho = m.rho_of_section(s);
        let mut violation = None;
        'adapted: for x in 0..n {
            for y in 0..n {
                if m.t().apply(eta.at(x, y)) != rho.apply(g.bracket_basis(x, y)) {
                    violation = Some(vec![x, y]);
                    break 'adapted;
                }
            }
        }
        checks.push(IdentityCheck {
            identity: AdjustmentIdentity::Adapted,
            violation,
        });
    }
    Ok(AdjustmentReport { checks })
}

/// Fails unless `eta` is an adjustment adapted to `section`.
pub fn verify_adapted(m: &CrossedModule, eta: &Bilinear, section: &Matrix) -> Result<(), AdjustError> {
    let report = check_adjustment(m, eta, Some(section))?;
    match report.checks.iter().find(|c| !c.passed()) {
        None => Ok(()),
        Some(c) => Err(AdjustError::NotAdjustment(format!(
            "{} fails on basis tuple {:?}",
            c.identity.describe(),
            c.violation.as_ref().expect("failed check has a violation")
        ))),
    }
}

/// `p^* ι_* b`: a bilinear map on `f` with values in `a`, viewed on `g` with
/// values in `h`.
pub fn lift_from_homotopy(m: &CrossedModule, b: &Bilinear) -> Bilinear {
    b.pushforward(m.iota()).pullback(m.p())
}

/// Descends a bilinear map on `g` with values in `ker t` to `f × f → a`,
/// failing when it does not vanish on `t h` or is not `a`-valued.
pub fn descend_bilinear(m: &CrossedModule, b: &Bilinear) -> Result<Bilinear, AdjustError> {
    let down = b.pullback(m.lift());
    if &down.pullback(m.p()) != b {
        return Err(AdjustError::Descent("bilinear map does not vanish on t(h)".into()));
    }
    let core = down.pushforward(m.j0());
    if core.pushforward(m.iota()) != down {
        return Err(AdjustError::Descent("bilinear map is not a-valued".into()));
    }
    Ok(core)
}

/// The adjusted Kassel–Loday class: the invariant symmetric form
/// `B: f × f → a` with `η^s = −p^* B`.
pub fn adjusted_kl(m: &CrossedModule, eta: &Bilinear) -> Result<Bilinear, AdjustError> {
    if eta.source_dim() != m.g().dim() || eta.values_dim() != m.h().dim() {
        return Err(AdjustError::Shape("eta must be a bilinear map g × g → h".into()));
    }
    descend_bilinear(m, &eta.symmetric_part().neg())
}
