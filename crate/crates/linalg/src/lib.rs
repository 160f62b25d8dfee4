//! Exact rational linear algebra.
//!
//! Everything is computed over `ℚ` with arbitrary-precision integers, so
//! ranks, kernels and solvability are decided exactly. Subspaces carry a
//! canonical echelon basis, which makes subspace equality a plain comparison
//! and makes complements and quotient maps reproducible.

mod matrix;
mod scalar;
mod subspace;
mod system;
mod vector;

pub use matrix::Matrix;
pub use scalar::{format_q, one, parse_q, q, qf, zero, Q};
pub use subspace::Subspace;
pub use system::{AffineSolution, LinearSystem};
pub use vector::{dot, unit, vadd, vaxpy, vconcat, vis_zero, vneg, vscale, vsub, vzero, Vector};

/// Errors raised by malformed input.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LinalgError {
    /// A scalar string that is not of the form `p`, `p/q`.
    #[error("cannot parse rational number from {0:?}")]
    Parse(String),
    /// Inconsistent dimensions.
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// The null space of `m`.
pub fn kernel(m: &Matrix) -> Subspace {
    m.row_system().solve().homogeneous
}

/// The column space of `m`.
pub fn image(m: &Matrix) -> Subspace {
    Subspace::span(m.rows(), &m.columns())
}

/// The deterministic complement of `s`: the span of the standard basis
/// vectors at the non-pivot coordinates of its canonical basis.
pub fn complement(s: &Subspace) -> Subspace {
    s.complement()
}

/// All solutions of `a · x = b`.
pub fn solve_affine(a: &Matrix, b: &[Q]) -> AffineSolution {
    assert_eq!(a.rows(), b.len(), "right-hand side length mismatch");
    let mut sys = LinearSystem::new(a.cols());
    for (i, bi) in b.iter().enumerate() {
        sys.add_dense_equation(&a.row(i), bi.clone());
    }
    sys.solve()
}

/// A projection onto `ℚ^ambient / s` and a linear section of it.
///
/// The quotient is identified with the coordinates of the complement of `s`
/// (the non-pivot coordinates `c_0 < c_1 < …`). `proj` kills `s`, `lift`
/// sends the `j`-th quotient coordinate to the unit vector `e_{c_j}`, and
/// `proj · lift` is the identity.
pub fn quotient_data(ambient: usize, s: &Subspace) -> (Matrix, Matrix) {
    assert_eq!(s.ambient_dim(), ambient, "ambient mismatch");
    let comp = s.complement();
    let free = comp.pivots();
    let m = free.len();
    // Write v = Σ v[p_i] b_i + r where r is supported on the free coordinates;
    // then proj(v)_j = r[c_j] = v[c_j] − Σ_i v[p_i] b_i[c_j].
    let mut proj = Matrix::zeros(m, ambient);
    for (j, &c) in free.iter().enumerate() {
        proj[(j, c)] += one();
        for (p, b) in s.pivots().iter().zip(s.basis()) {
            proj[(j, *p)] -= &b[c];
        }
    }
    let lift = Matrix::from_fn(ambient, m, |i, j| if i == free[j] { one() } else { zero() });
    (proj, lift)
}
