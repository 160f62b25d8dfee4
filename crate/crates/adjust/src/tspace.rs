//! The space `T(L, V)`, invariant symmetric forms and the Chern–Weil map.

use crossmod_cochains::AltCochain;
use crossmod_lie::{Bilinear, LieAlgebra};
use crossmod_linalg::{q, unit, vadd, vsub, LinearSystem, Vector, Q};
use num_traits::Zero;

use crate::AdjustError;

/// A basis of `T(L, ℚ^v)`: bilinear maps with
/// `η([X,Y],Z) + η(Y,[X,Z]) = η(X,[Y,Z])`.
#[derive(Clone, Debug)]
pub struct TSpace {
    /// Dimension of `L`.
    pub source_dim: usize,
    /// Dimension of the values.
    pub values_dim: usize,
    /// Basis elements. Element `r · v + c` is the `r`-th scalar solution
    /// placed in value coordinate `c`.
    pub basis: Vec<Bilinear>,
}

impl TSpace {
    /// Dimension of the space.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// The value of `η([X,Y],Z) + η(Y,[X,Z]) − η(X,[Y,Z])` on basis vectors.
pub fn t_defect(l: &LieAlgebra, eta: &Bilinear, x: usize, y: usize, z: usize) -> Vector {
    let n = l.dim();
    let (ex, ey, ez) = (unit(n, x), unit(n, y), unit(n, z));
    let a = eta.eval(l.bracket_basis(x, y), &ez);
    let b = eta.eval(&ey, l.bracket_basis(x, z));
    let c = eta.eval(&ex, l.bracket_basis(y, z));
    vsub(&vadd(&a, &b), &c)
}

/// The first basis triple on which the defining identity of `T(L, V)`
/// fails, if any.
pub fn t_violation(l: &LieAlgebra, eta: &Bilinear) -> Option<[usize; 3]> {
    let n = l.dim();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if t_defect(l, eta, x, y, z).iter().any(|c| !c.is_zero()) {
                    return Some([x, y, z]);
                }
            }
        }
    }
    None
}

/// True when `eta` lies in `T(L, V)`.
pub fn in_t_space(l: &LieAlgebra, eta: &Bilinear) -> bool {
    eta.source_dim() == l.dim() && t_violation(l, eta).is_none()
}

/// Tensors a basis of scalar forms (flattened as `i·n + j`) with `ℚ^v`.
fn tensor_values(n: usize, v: usize, scalar: &[Vector]) -> Vec<Bilinear> {
    let mut out = Vec::with_capacity(scalar.len() * v);
    for s in scalar {
        for c in 0..v {
            out.push(Bilinear::from_fn(n, v, |i, j| {
                let mut val = vec![Q::zero(); v];
                val[c] = s[i * n + j].clone();
                val
            }));
        }
    }
    out
}

/// An exact basis of `T(L, ℚ^v)`.
///
/// The defining condition acts on each value coordinate separately, so the
/// scalar solution space is computed once and tensored with `ℚ^v`.
pub fn t_space(l: &LieAlgebra, v: usize) -> TSpace {
    let n = l.dim();
    let var = |i: usize, j: usize| i * n + j;
    let mut sys = LinearSystem::new(n * n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut terms = Vec::new();
                for (m, c) in l.bracket_basis(x, y).iter().enumerate() {
                    terms.push((var(m, z), c.clone()));
                }
                for (m, c) in l.bracket_basis(x, z).iter().enumerate() {
                    terms.push((var(y, m), c.clone()));
                }
                for (m, c) in l.bracket_basis(y, z).iter().enumerate() {
                    terms.push((var(x, m), -c));
                }
                sys.add_equation(terms, Q::zero());
            }
        }
    }
    let sol = sys.solve();
    TSpace {
        source_dim: n,
        values_dim: v,
        basis: tensor_values(n, v, sol.homogeneous.basis()),
    }
}

/// True when `b` is symmetric and satisfies `b([X,Y],Z) = b(X,[Y,Z])`.
pub fn is_invariant_form(l: &LieAlgebra, b: &Bilinear) -> bool {
    invariance_violation(l, b).is_none()
}

/// A description of the first failure of symmetry or invariance.
pub fn invariance_violation(l: &LieAlgebra, b: &Bilinear) -> Option<String> {
    let n = l.dim();
    if b.source_dim() != n {
        return Some("form is defined on a space of the wrong dimension".into());
    }
    if !b.is_symmetric() {
        return Some("form is not symmetric".into());
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = b.eval(l.bracket_basis(x, y), &unit(n, z));
                let rhs = b.eval(&unit(n, x), l.bracket_basis(y, z));
                if lhs != rhs {
                    return Some(format!("invariance fails on basis triple ({x}, {y}, {z})"));
                }
            }
        }
    }
    None
}

/// An exact basis of the invariant symmetric forms `Sym²(L, ℚ^v)^ad`, in the
/// same value-tensored layout as [`TSpace::basis`].
pub fn invariant_forms(l: &LieAlgebra, v: usize) -> Vec<Bilinear> {
    let n = l.dim();
    let var = |i: usize, j: usize| i * n + j;
    let mut sys = LinearSystem::new(n * n);
    for i in 0..n {
        for j in (i + 1)..n {
            sys.add_equation([(var(i, j), q(1)), (var(j, i), q(-1))], Q::zero());
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut terms = Vec::new();
                for (m, c) in l.bracket_basis(x, y).iter().enumerate() {
                    terms.push((var(m, z), c.clone()));
                }
                for (m, c) in l.bracket_basis(y, z).iter().enumerate() {
                    terms.push((var(x, m), -c));
                }
                sys.add_equation(terms, Q::zero());
            }
        }
    }
    tensor_values(n, v, sys.solve().homogeneous.basis())
}

/// `cw(B)(X, Y, Z) = B([X, Y], Z)` for an invariant symmetric form `B`.
pub fn chern_weil(l: &LieAlgebra, b: &Bilinear) -> Result<AltCochain, AdjustError> {
    if let Some(msg) = invariance_violation(l, b) {
        return Err(AdjustError::NotInvariantForm(msg));
    }
    Ok(chern_weil_unchecked(l, b))
}

pub(crate) fn chern_weil_unchecked(l: &LieAlgebra, b: &Bilinear) -> AltCochain {
    let n = l.dim();
    AltCochain::from_fn(3, n, b.values_dim(), |idx| {
        b.eval(l.bracket_basis(idx[0], idx[1]), &unit(n, idx[2]))
    })
}

/// Splits an element of `T(L, V)` into its antisymmetric part, as a
/// 2-cochain, and its symmetric part. The symmetric part is invariant and
/// `δη^a + cw(η^s) = 0`.
pub fn decompose_t(l: &LieAlgebra, eta: &Bilinear) -> Result<(AltCochain, Bilinear), AdjustError> {
    if eta.source_dim() != l.dim() {
        return Err(AdjustError::Shape("form and algebra dimensions differ".into()));
    }
    if let Some([x, y, z]) = t_violation(l, eta) {
        return Err(AdjustError::NotInT { x, y, z });
    }
    let anti = AltCochain::from_bilinear(&eta.antisymmetric_part()).expect("antisymmetric part is alternating");
    Ok((anti, eta.symmetric_part()))
}
