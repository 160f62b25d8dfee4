//! Cohomology with trivial coefficients.

use crossmod_lie::LieAlgebra;
use crossmod_linalg::{image, kernel, solve_affine, vzero, Matrix, Subspace, Vector, Q};
use num_traits::Zero;

use crate::alt::{combo_index, sort_with_sign, AltCochain};
use crate::CochainError;

/// The matrix of `δ: Alt^k(L, ℚ) → Alt^{k+1}(L, ℚ)` in the coordinates of
/// increasing index tuples.
pub fn differential_matrix(l: &LieAlgebra, k: usize) -> Matrix {
    let n = l.dim();
    let (src, src_map) = combo_index(n, k);
    let (tgt, _) = combo_index(n, k + 1);
    let mut m = Matrix::zeros(tgt.len(), src.len());
    if k == 0 {
        return m;
    }
    for (row, idx) in tgt.iter().enumerate() {
        for a in 0..idx.len() {
            for b in (a + 1)..idx.len() {
                let outer = if (a + b) % 2 == 0 { 1 } else { -1 };
                let rest: Vec<usize> = idx
                    .iter()
                    .enumerate()
                    .filter(|(p, _)| *p != a && *p != b)
                    .map(|(_, &i)| i)
                    .collect();
                for (mm, c) in l.bracket_basis(idx[a], idx[b]).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut args = vec![mm];
                    args.extend_from_slice(&rest);
                    if let Some((sorted, s)) = sort_with_sign(&args) {
                        let col = src_map[&sorted];
                        let sign = Q::from_integer((outer * s).into());
                        m[(row, col)] += c * sign;
                    }
                }
            }
        }
    }
    m
}

/// `H^k(L, ℚ^v)` with an explicit basis of representatives.
///
/// Cocycles and coboundaries are subspaces of the component space of
/// [`AltCochain::to_components`] (`combo · v + value`).
#[derive(Clone, Debug)]
pub struct CohomologySpace {
    /// Degree.
    pub degree: usize,
    /// Dimension of the algebra.
    pub source_dim: usize,
    /// Dimension of the coefficients.
    pub values_dim: usize,
    /// Closed cochains.
    pub cocycles: Subspace,
    /// Exact cochains.
    pub coboundaries: Subspace,
    /// Representatives of a basis of the cohomology.
    pub basis: Vec<AltCochain>,
    scalar_reps: Vec<Vector>,
    scalar_coboundaries: Subspace,
}

impl CohomologySpace {
    /// Dimension of the cohomology group.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of the class of a cocycle in [`CohomologySpace::basis`].
    /// Basis element `r · v + c` is the `r`-th scalar representative placed
    /// in value coordinate `c`.
    pub fn class_of(&self, w: &AltCochain) -> Result<Vector, CochainError> {
        let v = self.values_dim;
        if w.degree() != self.degree || w.source_dim() != self.source_dim || w.values_dim() != v {
            return Err(CochainError::Shape(
                "cochain does not match the cohomology space".into(),
            ));
        }
        let comps = w.to_components();
        if !self.cocycles.contains(&comps) {
            return Err(CochainError::NotClosed);
        }
        let nc = comps.len() / v.max(1);
        let r = self.scalar_reps.len();
        let mut out = vzero(r * v);
        // Solve per value coordinate: w_c = Σ_i a_i rep_i + (coboundary).
        let mut cols = self.scalar_reps.clone();
        cols.extend(self.scalar_coboundaries.basis().iter().cloned());
        let m = Matrix::from_columns(nc, &cols);
        for c in 0..v {
            let wc: Vector = (0..nc).map(|i| comps[i * v + c].clone()).collect();
            let sol = solve_affine(&m, &wc);
            let x = sol.particular.expect("cocycle lies in reps + coboundaries");
            for i in 0..r {
                out[i * v + c] = x[i].clone();
            }
        }
        Ok(out)
    }

    /// True when the two cocycles differ by a coboundary.
    pub fn cohomologous(&self, a: &AltCochain, b: &AltCochain) -> Result<bool, CochainError> {
        Ok(self.class_of(&a.sub(b))?.iter().all(Zero::is_zero))
    }
}

/// Computes `H^k(L, ℚ^v)` with trivial coefficients.
pub fn cohomology(l: &LieAlgebra, v: usize, k: usize) -> CohomologySpace {
    let n = l.dim();
    let dk = differential_matrix(l, k);
    let z = kernel(&dk);
    let b = if k == 0 {
        Subspace::zero(dk.cols())
    } else {
        image(&differential_matrix(l, k - 1))
    };
    let mut reps: Vec<Vector> = Vec::new();
    let mut acc = b.clone();
    for zb in z.basis() {
        if !acc.contains(zb) {
            reps.push(zb.clone());
            acc = acc.sum(&Subspace::span(acc.ambient_dim(), std::slice::from_ref(zb)));
        }
    }
    let nc = dk.cols();
    let expand = |s: &Subspace| -> Subspace {
        let mut vecs = Vec::new();
        for bv in s.basis() {
            for c in 0..v {
                let mut e = vzero(nc * v);
                for (i, x) in bv.iter().enumerate() {
                    e[i * v + c] = x.clone();
                }
                vecs.push(e);
            }
        }
        Subspace::span(nc * v, &vecs)
    };
    let mut basis = Vec::new();
    for r in &reps {
        for c in 0..v {
            let mut comps = vzero(nc * v);
            for (i, x) in r.iter().enumerate() {
                comps[i * v + c] = x.clone();
            }
            basis.push(AltCochain::from_components(k, n, v, &comps));
        }
    }
    CohomologySpace {
        degree: k,
        source_dim: n,
        values_dim: v,
        cocycles: expand(&z),
        coboundaries: expand(&b),
        basis,
        scalar_reps: reps,
        scalar_coboundaries: b,
    }
}

/// Decides whether a cocycle is exact, returning a primitive when it is.
pub fn is_exact(l: &LieAlgebra, w: &AltCochain) -> Result<Option<AltCochain>, CochainError> {
    if w.source_dim() != l.dim() {
        return Err(CochainError::Shape("cochain source does not match the algebra".into()));
    }
    if !w.differential(l).is_zero() {
        return Err(CochainError::NotClosed);
    }
    let k = w.degree();
    let (n, v) = (l.dim(), w.values_dim());
    if k == 0 {
        return Ok(if w.is_zero() {
            Some(AltCochain::zero(0, n, v))
        } else {
            None
        });
    }
    let d = differential_matrix(l, k - 1);
    let comps = w.to_components();
    let nc = d.rows();
    let np = d.cols();
    let mut prim = vzero(np * v);
    for c in 0..v {
        let wc: Vector = (0..nc).map(|i| comps[i * v + c].clone()).collect();
        match solve_affine(&d, &wc).particular {
            Some(x) => {
                for (i, xi) in x.into_iter().enumerate() {
                    prim[i * v + c] = xi;
                }
            }
            None => return Ok(None),
        }
    }
    Ok(Some(AltCochain::from_components(k - 1, n, v, &prim)))
}
