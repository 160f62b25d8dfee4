//! Test modules and a brute-force solver for the adjustment identities.

#![allow(dead_code)]

use crossmod_crossed::CrossedModule;
use crossmod_lie::*;
use crossmod_linalg::*;

/// t = 0, α = 0.
pub fn product(f: LieAlgebra, a_dim: usize) -> CrossedModule {
    let n = f.dim();
    CrossedModule::new(abelian(a_dim), f, Matrix::zeros(n, a_dim), ActionTensor::zero(n, a_dim)).unwrap()
}

/// Inner derivations of the n×n matrix algebra.
pub fn matrix_aut(n: usize) -> CrossedModule {
    let alg = matrix_algebra(n);
    let d = alg.dim();
    let h = alg.commutator_lie();
    let (der, emb) = alg.derivations();
    let t_cols: Vec<Vector> = (0..d)
        .map(|x| {
            let ad = h.ad_basis(x);
            let flat: Vector = (0..d * d).map(|k| ad[(k / d, k % d)].clone()).collect();
            solve_affine(&emb, &flat).particular.expect("inner derivation")
        })
        .collect();
    let t = Matrix::from_columns(der.dim(), &t_cols);
    let mats: Vec<Matrix> = (0..der.dim())
        .map(|i| {
            let col = emb.column(i);
            Matrix::from_fn(d, d, |r, c| col[r * d + c].clone())
        })
        .collect();
    let alpha = ActionTensor::from_matrices(d, mats).unwrap();
    CrossedModule::new(h, der, t, alpha).unwrap()
}

/// f = abelian(3), a = ℚ, KL = [3·vol]; admits no adjustment.
pub fn cubic_module() -> CrossedModule {
    let g = LieAlgebra::from_brackets(6, &[(0, 1, 3, q(1)), (0, 2, 4, q(1)), (1, 2, 5, q(1))]).unwrap();
    let h = abelian(4);
    let t = Matrix::from_fn(6, 4, |r, c| if c < 3 && r == c + 3 { q(1) } else { q(0) });
    let mut mats = vec![Matrix::zeros(4, 4); 6];
    mats[0][(3, 2)] = q(1);
    mats[1][(3, 1)] = q(-1);
    mats[2][(3, 0)] = q(1);
    let alpha = ActionTensor::from_matrices(4, mats).unwrap();
    CrossedModule::new(h, g, t, alpha).unwrap()
}

/// g = heisenberg3, h = ℚ² with t(e0) = z and t(e1) = 0, α = 0; so
/// f = abelian(2) and a = ℚ.
pub fn central_ext() -> CrossedModule {
    let t = Matrix::from_fn(3, 2, |r, c| if r == 2 && c == 0 { q(1) } else { q(0) });
    CrossedModule::new(abelian(2), heisenberg3(), t, ActionTensor::zero(3, 2)).unwrap()
}

/// The identity crossed module `L → L` with the adjoint action.
pub fn identity_module(l: &LieAlgebra) -> CrossedModule {
    CrossedModule::new(
        l.clone(),
        l.clone(),
        Matrix::identity(l.dim()),
        ActionTensor::adjoint(l),
    )
    .unwrap()
}

/// The 4-dimensional filiform algebra `[e0,e1] = e2`, `[e0,e2] = e3`.
pub fn filiform4() -> LieAlgebra {
    LieAlgebra::from_brackets(4, &[(0, 1, 2, q(1)), (0, 2, 3, q(1))]).unwrap()
}

/// Solves the defining identities of an adjustment (and adaptedness to `s`
/// when given) as one dense linear system in the `n²·k` unknowns
/// `η(e_i, e_j)_c`. Returns a solution and the dimension of the solution
/// set.
pub fn brute_force_adjustments(m: &CrossedModule, s: Option<&Matrix>) -> (Option<Bilinear>, usize) {
    let (g, h) = (m.g(), m.h());
    let (n, k) = (g.dim(), h.dim());
    let nv = n * n * k;
    let var = |i: usize, j: usize, c: usize| (i * n + j) * k + c;
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vector = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for c in 0..k {
                    let mut row = vzero(nv);
                    for mm in 0..n {
                        row[var(mm, z, c)] += g.structure(x, y, mm);
                        row[var(y, mm, c)] += g.structure(x, z, mm);
                        row[var(x, mm, c)] -= g.structure(y, z, mm);
                    }
                    rows.push(row);
                    rhs.push(q(0));
                }
            }
        }
    }
    let t = m.t();
    for x in 0..k {
        for y in 0..n {
            let act = m.alpha().matrix(y).column(x);
            for c in 0..k {
                let mut left = vzero(nv);
                let mut right = vzero(nv);
                for i in 0..n {
                    left[var(i, y, c)] += &t[(i, x)];
                    right[var(y, i, c)] += &t[(i, x)];
                }
                rows.push(left);
                rhs.push(-act[c].clone());
                rows.push(right);
                rhs.push(act[c].clone());
            }
        }
    }
    if let Some(s) = s {
        let rho = Matrix::identity(n).sub(&s.mul(m.p()));
        for x in 0..n {
            for y in 0..n {
                let target = rho.apply(g.bracket_basis(x, y));
                for r in 0..n {
                    let mut row = vzero(nv);
                    for c in 0..k {
                        row[var(x, y, c)] += &t[(r, c)];
                    }
                    rows.push(row);
                    rhs.push(target[r].clone());
                }
            }
        }
    }
    let a = Matrix::from_rows(nv, &rows).unwrap();
    let sol = solve_affine(&a, &rhs);
    let dim = sol.homogeneous.dim();
    (sol.particular.map(|v| Bilinear::from_data(n, k, v)), dim)
}
