//! A finite-dimensional truncation of the path construction.
//!
//! Let `A_d = ℚ[u, v] / (monomials of degree > d)` and `I ⊂ A_d` the ideal
//! of polynomials without constant term. The module has `g = f ⊗ A_d`,
//! `h = (f ⊗ I) ⊕ a`, `t` the inclusion on `f ⊗ I` and zero on `a`, and
//!
//! * `[x ⊗ r, y ⊗ s]_h = ([x, y] ⊗ rs, c(r, s) B(x, y))`,
//! * `α(x ⊗ r, y ⊗ s) = ([x, y] ⊗ rs, c(r, s) B(x, y))`,
//!
//! where `c(r, s) = r_u s_v − r_v s_u` pairs the linear parts. The cocycle
//! `c` plays the role of `η̃_B` on a small loop in the `(u, v)` plane. Then
//! `π0 = f` via the constant term and `π1 = a`.
//!
//! The inclusion `f → f ⊗ 1 ⊆ g` is a Lie algebra section of `p` whose
//! image meets `t h` trivially, so the module is weakly equivalent to the
//! product module and its Kassel–Loday class vanishes. The construction
//! therefore realizes `[cw(B)]` exactly when `cw(B)` is exact; for other
//! forms, such as any non-zero invariant form on a semisimple algebra, no
//! finite-dimensional central module with that class exists and
//! [`path_truncation_module`] returns [`CatalogError::Unrealizable`].

use crossmod_adjust::{chern_weil, invariance_violation};
use crossmod_cochains::is_exact;
use crossmod_crossed::CrossedModule;
use crossmod_lie::{ActionTensor, Bilinear, LieAlgebra};
use crossmod_linalg::{one, vzero, zero, Matrix};

use crate::CatalogError;

/// Exponents `(i, j)` of the monomials `u^i v^j` of degree at most `d`,
/// ordered by degree and then by decreasing `i`.
fn monomials(d: usize) -> Vec<(usize, usize)> {
    (0..=d)
        .flat_map(|deg| (0..=deg).rev().map(move |i| (i, deg - i)))
        .collect()
}

/// `dim A_d = (d + 1)(d + 2) / 2`.
pub fn truncation_algebra_dim(d: usize) -> usize {
    (d + 1) * (d + 2) / 2
}

struct Layout {
    nf: usize,
    mons: Vec<(usize, usize)>,
}

impl Layout {
    fn new(nf: usize, d: usize) -> Self {
        Layout { nf, mons: monomials(d) }
    }

    fn g_dim(&self) -> usize {
        self.nf * self.mons.len()
    }

    fn loops_dim(&self) -> usize {
        self.nf * (self.mons.len() - 1)
    }

    /// The index of `m_k m_l`, or `None` when it is truncated.
    fn product(&self, k: usize, l: usize) -> Option<usize> {
        let (a, b) = (self.mons[k], self.mons[l]);
        let e = (a.0 + b.0, a.1 + b.1);
        self.mons.iter().position(|m| *m == e)
    }

    /// `c(m_k, m_l)`.
    fn pairing(&self, k: usize, l: usize) -> i64 {
        match (self.mons[k], self.mons[l]) {
            ((1, 0), (0, 1)) => 1,
            ((0, 1), (1, 0)) => -1,
            _ => 0,
        }
    }
}

fn validate_inputs(f: &LieAlgebra, b: &Bilinear, d: usize) -> Result<(), CatalogError> {
    if d == 0 {
        return Err(CatalogError::Parameters("max_degree must be at least 1".into()));
    }
    if let Some(msg) = invariance_violation(f, b) {
        return Err(CatalogError::InvalidForm(msg));
    }
    Ok(())
}

/// The truncated path module of `(f, B)` with polynomial degree at most
/// `max_degree ≥ 1`, with `π0` identified with `f` and `π1` with
/// `ℚ^{dim values of B}`. Fails with [`CatalogError::Unrealizable`] unless
/// `cw(B)` is exact, since the module's class is zero.
pub fn path_truncation_module(f: &LieAlgebra, b: &Bilinear, max_degree: usize) -> Result<CrossedModule, CatalogError> {
    validate_inputs(f, b, max_degree)?;
    let cw = chern_weil(f, b).map_err(CatalogError::Adjust)?;
    if is_exact(f, &cw).map_err(CatalogError::Cochain)?.is_none() {
        return Err(CatalogError::Unrealizable(
            "[cw(B)] is non-zero and the truncated module has zero Kassel–Loday class".into(),
        ));
    }
    let lay = Layout::new(f.dim(), max_degree);
    let nf = lay.nf;
    let na = b.values_dim();
    let (ng, nl) = (lay.g_dim(), lay.loops_dim());
    let nh = nl + na;
    let nm = lay.mons.len();

    let mut gc = vzero(ng * ng * ng);
    let mut hc = vzero(nh * nh * nh);
    let mut mats = vec![Matrix::zeros(nh, nh); ng];
    for k in 0..nm {
        for l in 0..nm {
            let prod = lay.product(k, l);
            let pair = crossmod_linalg::q(lay.pairing(k, l));
            for x in 0..nf {
                for y in 0..nf {
                    let (gi, gj) = (k * nf + x, l * nf + y);
                    let br = f.bracket_basis(x, y);
                    let central = b.at(x, y);
                    if let Some(p) = prod {
                        for (z, cz) in br.iter().enumerate() {
                            gc[(gi * ng + gj) * ng + p * nf + z] += cz;
                        }
                    }
                    if l == 0 {
                        continue;
                    }
                    // α(m_k ⊗ x) applied to the basis element m_l ⊗ y of h.
                    let hj = (l - 1) * nf + y;
                    let act = &mut mats[gi];
                    if let Some(p) = prod {
                        for (z, cz) in br.iter().enumerate() {
                            act[((p - 1) * nf + z, hj)] += cz;
                        }
                    }
                    for (c, bc) in central.iter().enumerate() {
                        act[(nl + c, hj)] += &(pair.clone() * bc);
                    }
                    if k == 0 {
                        continue;
                    }
                    let hi = (k - 1) * nf + x;
                    if let Some(p) = prod {
                        for (z, cz) in br.iter().enumerate() {
                            hc[(hi * nh + hj) * nh + (p - 1) * nf + z] += cz;
                        }
                    }
                    for (c, bc) in central.iter().enumerate() {
                        hc[(hi * nh + hj) * nh + nl + c] += &(pair.clone() * bc);
                    }
                }
            }
        }
    }
    let g = LieAlgebra::from_tensor(ng, gc).map_err(CatalogError::Lie)?;
    let h = LieAlgebra::from_tensor(nh, hc).map_err(CatalogError::Lie)?;
    let t = Matrix::from_fn(ng, nh, |r, c| if c < nl && r == c + nf { one() } else { zero() });
    let alpha = ActionTensor::from_matrices(nh, mats).map_err(CatalogError::Lie)?;
    let p = Matrix::from_fn(nf, ng, |r, c| if r == c { one() } else { zero() });
    let iota = Matrix::from_fn(nh, na, |r, c| if r == nl + c { one() } else { zero() });
    CrossedModule::with_identifications(h, g, t, alpha, f.clone(), p, iota).map_err(CatalogError::Crossed)
}

/// A strict morphism between two crossed modules: linear maps on `h` and
/// on `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intertwiner {
    /// The map on `h`.
    pub on_h: Matrix,
    /// The map on `g`.
    pub on_g: Matrix,
}

/// The strict morphism from the degree-`high` truncation to the
/// degree-`low` truncation that forgets the monomials of degree above
/// `low`. It induces the identity on `π0` and `π1`.
pub fn truncation_intertwiner(
    f: &LieAlgebra,
    b: &Bilinear,
    high: usize,
    low: usize,
) -> Result<Intertwiner, CatalogError> {
    validate_inputs(f, b, low)?;
    if high < low {
        return Err(CatalogError::Parameters(
            "the source degree must not be below the target degree".into(),
        ));
    }
    let (hi, lo) = (Layout::new(f.dim(), high), Layout::new(f.dim(), low));
    let nf = f.dim();
    let na = b.values_dim();
    let keep = |big: usize, small: usize| -> bool {
        let (kb, ks) = (big / nf, small / nf);
        big % nf == small % nf && ks < lo.mons.len() && kb == ks
    };
    let on_g = Matrix::from_fn(lo.g_dim(), hi.g_dim(), |r, c| if keep(c, r) { one() } else { zero() });
    let (nl_hi, nl_lo) = (hi.loops_dim(), lo.loops_dim());
    let on_h = Matrix::from_fn(nl_lo + na, nl_hi + na, |r, c| {
        let hit = if r < nl_lo && c < nl_hi {
            keep(c, r)
        } else {
            r >= nl_lo && c >= nl_hi && r - nl_lo == c - nl_hi
        };
        if hit {
            one()
        } else {
            zero()
        }
    });
    Ok(Intertwiner { on_h, on_g })
}
