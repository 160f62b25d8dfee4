//! Lie algebras given by structure constants.

use crossmod_linalg::{kernel, q, vaxpy, vis_zero, vzero, LinearSystem, Matrix, Subspace, Vector, Q};
use num_traits::Zero;

use crate::LieError;

/// A finite-dimensional Lie algebra over `ℚ`.
///
/// `[e_i, e_j] = Σ_k c[i][j][k] e_k`, stored flat as `c[(i·n + j)·n + k]`.
/// Equality compares structure constants only; labels are cosmetic.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    c: Vec<Q>,
    labels: Vec<String>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.c == other.c
    }
}

impl Eq for LieAlgebra {}

impl std::hash::Hash for LieAlgebra {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.dim.hash(state);
        self.c.hash(state);
    }
}

impl LieAlgebra {
    /// Builds an algebra from a full structure-constant tensor without
    /// validating it. Use [`LieAlgebra::validate`] before trusting it.
    pub fn from_tensor(dim: usize, c: Vec<Q>) -> Result<Self, LieError> {
        if c.len() != dim * dim * dim {
            return Err(LieError::Shape(format!(
                "structure tensor has {} entries, expected {}",
                c.len(),
                dim * dim * dim
            )));
        }
        Ok(LieAlgebra {
            dim,
            c,
            labels: default_labels(dim),
        })
    }

    /// Builds an algebra from brackets `[e_i, e_j] ∋ coeff · e_k`; the
    /// entry for `[e_j, e_i]` is filled in by antisymmetry.
    pub fn from_brackets(dim: usize, brackets: &[(usize, usize, usize, Q)]) -> Result<Self, LieError> {
        let mut c = vzero(dim * dim * dim);
        for (i, j, k, v) in brackets {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(LieError::Shape(format!(
                    "bracket index ({i},{j},{k}) out of range for dimension {dim}"
                )));
            }
            if i == j {
                if !v.is_zero() {
                    return Err(LieError::Antisymmetry { i, j });
                }
                continue;
            }
            c[(i * dim + j) * dim + k] += v;
            c[(j * dim + i) * dim + k] -= v;
        }
        LieAlgebra::from_tensor(dim, c)
    }

    /// Replaces the basis labels.
    pub fn with_labels(mut self, labels: &[&str]) -> Self {
        assert_eq!(labels.len(), self.dim, "label count mismatch");
        self.labels = labels.iter().map(|s| s.to_string()).collect();
        self
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Basis labels.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The structure constant `c[i][j][k]`.
    pub fn structure(&self, i: usize, j: usize, k: usize) -> &Q {
        &self.c[(i * self.dim + j) * self.dim + k]
    }

    /// `[e_i, e_j]` as a coordinate slice.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Q] {
        let n = self.dim;
        &self.c[(i * n + j) * n..(i * n + j + 1) * n]
    }

    /// The flat structure tensor.
    pub fn tensor(&self) -> &[Q] {
        &self.c
    }

    /// Checks antisymmetry and the Jacobi identity on all basis triples,
    /// reporting the first failure.
    pub fn validate(&self) -> Result<(), LieError> {
        let n = self.dim;
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if self.structure(i, j, k) != &-self.structure(j, i, k) {
                        return Err(LieError::Antisymmetry { i, j });
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    if !vis_zero(&self.jacobiator(i, j, k)) {
                        return Err(LieError::Jacobi { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vector {
        let n = self.dim;
        let ei = crossmod_linalg::unit(n, i);
        let ej = crossmod_linalg::unit(n, j);
        let ek = crossmod_linalg::unit(n, k);
        let a = self.bracket(&ei, self.bracket_basis(j, k));
        let b = self.bracket(&ej, self.bracket_basis(k, i));
        let c = self.bracket(&ek, self.bracket_basis(i, j));
        crossmod_linalg::vadd(&crossmod_linalg::vadd(&a, &b), &c)
    }

    /// The bracket of two coordinate vectors.
    pub fn bracket(&self, x: &[Q], y: &[Q]) -> Vector {
        assert!(x.len() == self.dim && y.len() == self.dim, "vector dimension mismatch");
        let mut out = vzero(self.dim);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                vaxpy(&mut out, &(xi * yj), self.bracket_basis(i, j));
            }
        }
        out
    }

    /// Checked version of [`LieAlgebra::bracket`].
    pub fn bracket_vectors(&self, x: &[Q], y: &[Q]) -> Result<Vector, LieError> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(LieError::Shape(format!(
                "vectors of length {} and {} in an algebra of dimension {}",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        Ok(self.bracket(x, y))
    }

    /// The matrix of `ad_x = [x, ·]`.
    pub fn ad(&self, x: &[Q]) -> Matrix {
        let n = self.dim;
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            let col = self.bracket(x, &crossmod_linalg::unit(n, j));
            for (i, v) in col.into_iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    /// The matrix of `ad_{e_i}`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(n, n, |r, j| self.structure(i, j, r).clone())
    }

    /// True when all brackets vanish.
    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// The derived algebra `[L, L]`.
    pub fn derived(&self) -> Subspace {
        let n = self.dim;
        let vecs: Vec<Vector> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .map(|(i, j)| self.bracket_basis(i, j).to_vec())
            .collect();
        Subspace::span(n, &vecs)
    }

    /// The center.
    pub fn center(&self) -> Subspace {
        let n = self.dim;
        // x is central iff Σ_i x_i c[i][j][k] = 0 for all j, k.
        let mut sys = LinearSystem::new(n);
        for j in 0..n {
            for k in 0..n {
                let terms = (0..n)
                    .filter(|&i| !self.structure(i, j, k).is_zero())
                    .map(|i| (i, self.structure(i, j, k).clone()));
                sys.add_equation(terms, Q::zero());
            }
        }
        sys.solve().homogeneous
    }

    /// `[a, b]` for two subspaces.
    pub fn bracket_subspaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                vecs.push(self.bracket(x, y));
            }
        }
        Subspace::span(self.dim, &vecs)
    }

    /// The lower central series `L = L¹ ⊇ L² = [L, L¹] ⊇ …`, stopping once it
    /// stabilises. The last entry is zero exactly when `L` is nilpotent.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        let mut series = vec![full.clone()];
        loop {
            let next = self.bracket_subspaces(&full, series.last().unwrap());
            if &next == series.last().unwrap() {
                return series;
            }
            series.push(next);
        }
    }

    /// The nilpotency class `c` (so every bracket of `c + 1` elements
    /// vanishes), or `None` if the algebra is not nilpotent.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        if series.last().unwrap().dim() == 0 {
            Some(series.len() - 1)
        } else {
            None
        }
    }

    /// True when `m: self → target` preserves brackets.
    pub fn is_homomorphism_to(&self, target: &LieAlgebra, m: &Matrix) -> bool {
        assert!(m.cols() == self.dim && m.rows() == target.dim, "map shape mismatch");
        let cols = m.columns();
        for i in 0..self.dim {
            for j in (i + 1)..self.dim {
                let lhs = m.apply(self.bracket_basis(i, j));
                let rhs = target.bracket(&cols[i], &cols[j]);
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// True when the subspace is closed under the bracket.
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let b = self.bracket_subspaces(s, s);
        s.contains_subspace(&b)
    }

    /// True when the subspace is an ideal.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        let b = self.bracket_subspaces(&Subspace::full(self.dim), s);
        s.contains_subspace(&b)
    }

    /// The subalgebra spanned by the given basis, with structure constants
    /// expressed in that basis. The vectors must span a subalgebra and be
    /// linearly independent.
    pub fn subalgebra(&self, basis: &[Vector]) -> Result<LieAlgebra, LieError> {
        let n = self.dim;
        let m = basis.len();
        let emb = Matrix::from_columns(n, basis);
        if kernel(&emb).dim() != 0 {
            return Err(LieError::Shape("subalgebra basis is dependent".into()));
        }
        let mut c = vzero(m * m * m);
        for i in 0..m {
            for j in 0..m {
                let b = self.bracket(&basis[i], &basis[j]);
                let sol = crossmod_linalg::solve_affine(&emb, &b);
                let coords = sol
                    .particular
                    .ok_or_else(|| LieError::Shape("span is not closed under the bracket".into()))?;
                for (k, v) in coords.into_iter().enumerate() {
                    c[(i * m + j) * m + k] = v;
                }
            }
        }
        LieAlgebra::from_tensor(m, c)
    }

    /// The quotient by an ideal, realised on the coordinates of the
    /// deterministic complement, together with the projection matrix.
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LieAlgebra, Matrix, Matrix), LieError> {
        if !self.is_ideal(ideal) {
            return Err(LieError::Shape("not an ideal".into()));
        }
        let (proj, lift) = crossmod_linalg::quotient_data(self.dim, ideal);
        let m = proj.rows();
        let lifts = lift.columns();
        let mut c = vzero(m * m * m);
        for i in 0..m {
            for j in 0..m {
                let b = proj.apply(&self.bracket(&lifts[i], &lifts[j]));
                for (k, v) in b.into_iter().enumerate() {
                    c[(i * m + j) * m + k] = v;
                }
            }
        }
        Ok((LieAlgebra::from_tensor(m, c)?, proj, lift))
    }

    /// `L ⊕ M` with `L` in the first coordinates.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (a, b) = (self.dim, other.dim);
        let n = a + b;
        let mut c = vzero(n * n * n);
        for i in 0..a {
            for j in 0..a {
                for k in 0..a {
                    c[(i * n + j) * n + k] = self.structure(i, j, k).clone();
                }
            }
        }
        for i in 0..b {
            for j in 0..b {
                for k in 0..b {
                    c[((a + i) * n + a + j) * n + a + k] = other.structure(i, j, k).clone();
                }
            }
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|l| format!("{l}'")));
        LieAlgebra { dim: n, c, labels }
    }

    /// The algebra in a new basis: the columns of `change` are the new basis
    /// vectors written in the old basis.
    pub fn change_basis(&self, change: &Matrix) -> Result<LieAlgebra, LieError> {
        let inv = change
            .inverse()
            .ok_or_else(|| LieError::Shape("basis change is singular".into()))?;
        let n = self.dim;
        let cols = change.columns();
        let mut c = vzero(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let b = inv.apply(&self.bracket(&cols[i], &cols[j]));
                for (k, v) in b.into_iter().enumerate() {
                    c[(i * n + j) * n + k] = v;
                }
            }
        }
        LieAlgebra::from_tensor(n, c)
    }
}

fn default_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("e{i}")).collect()
}

/// `ℚ^n` with zero bracket.
pub fn abelian(n: usize) -> LieAlgebra {
    LieAlgebra::from_tensor(n, vzero(n * n * n)).unwrap()
}

/// The Heisenberg algebra with basis `(x, y, z)` and `[x, y] = z`.
pub fn heisenberg3() -> LieAlgebra {
    LieAlgebra::from_brackets(3, &[(0, 1, 2, q(1))])
        .unwrap()
        .with_labels(&["x", "y", "z"])
}

/// `so(3)` with cyclic basis: `[e1,e2]=e3`, `[e2,e3]=e1`, `[e3,e1]=e2`.
pub fn so3() -> LieAlgebra {
    LieAlgebra::from_brackets(3, &[(0, 1, 2, q(1)), (1, 2, 0, q(1)), (2, 0, 1, q(1))]).unwrap()
}

/// `sl(2)` with basis `(h, e, f)`: `[h,e]=2e`, `[h,f]=−2f`, `[e,f]=h`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_brackets(3, &[(0, 1, 1, q(2)), (0, 2, 2, q(-2)), (1, 2, 0, q(1))])
        .unwrap()
        .with_labels(&["h", "e", "f"])
}

/// `gl(n)` under the commutator, basis `E_11, E_12, …` row-major.
pub fn gl(n: usize) -> LieAlgebra {
    crate::assoc::matrix_algebra(n).commutator_lie()
}

/// Same as [`gl`]: the matrix algebra `ℚ^{n×n}` viewed as a Lie algebra.
pub fn matrix_algebra_commutator(n: usize) -> LieAlgebra {
    gl(n)
}

/// Looks up a standard algebra by name: `abelian(n)`, `heisenberg3`, `so3`,
/// `sl2`, `gl(n)` or `matrix_algebra_commutator(n)`.
pub fn standard_algebra(name: &str) -> Result<LieAlgebra, LieError> {
    let name = name.trim();
    let unknown = || LieError::UnknownAlgebra(name.to_string());
    let (head, arg) = match name.split_once('(') {
        Some((h, rest)) => {
            let arg = rest.strip_suffix(')').ok_or_else(unknown)?;
            let n: usize = arg.trim().parse().map_err(|_| unknown())?;
            (h.trim(), Some(n))
        }
        None => (name, None),
    };
    match (head, arg) {
        ("abelian", Some(n)) => Ok(abelian(n)),
        ("heisenberg3", None) => Ok(heisenberg3()),
        ("so3", None) => Ok(so3()),
        ("sl2", None) => Ok(sl2()),
        ("gl", Some(n)) if n >= 1 => Ok(gl(n)),
        ("matrix_algebra_commutator", Some(n)) if n >= 1 => Ok(matrix_algebra_commutator(n)),
        _ => Err(unknown()),
    }
}
