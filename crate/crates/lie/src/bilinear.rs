//! Vector-valued bilinear maps on a single space.

use crossmod_linalg::{vaxpy, vis_zero, vzero, Matrix, Vector, Q};
use num_traits::Zero;

/// A bilinear map `b: ℚ^n × ℚ^n → ℚ^v`, stored as `b(e_i, e_j)` at
/// `data[(i·n + j)·v ..]`. No symmetry is assumed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bilinear {
    n: usize,
    v: usize,
    data: Vec<Q>,
}

impl Bilinear {
    /// The zero map.
    pub fn zero(n: usize, v: usize) -> Self {
        Bilinear {
            n,
            v,
            data: vzero(n * n * v),
        }
    }

    /// Builds a map from its values on basis pairs.
    pub fn from_fn(n: usize, v: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut data = Vec::with_capacity(n * n * v);
        for i in 0..n {
            for j in 0..n {
                let val = f(i, j);
                assert_eq!(val.len(), v, "value dimension mismatch");
                data.extend(val);
            }
        }
        Bilinear { n, v, data }
    }

    /// Builds a map from its flat data.
    pub fn from_data(n: usize, v: usize, data: Vec<Q>) -> Self {
        assert_eq!(data.len(), n * n * v, "bilinear data has wrong size");
        Bilinear { n, v, data }
    }

    /// Dimension of the source.
    pub fn source_dim(&self) -> usize {
        self.n
    }

    /// Dimension of the values.
    pub fn values_dim(&self) -> usize {
        self.v
    }

    /// Flat data.
    pub fn data(&self) -> &[Q] {
        &self.data
    }

    /// `b(e_i, e_j)`.
    pub fn at(&self, i: usize, j: usize) -> &[Q] {
        let s = (i * self.n + j) * self.v;
        &self.data[s..s + self.v]
    }

    /// Mutable access to `b(e_i, e_j)`.
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut [Q] {
        let s = (i * self.n + j) * self.v;
        &mut self.data[s..s + self.v]
    }

    /// `b(x, y)`.
    pub fn eval(&self, x: &[Q], y: &[Q]) -> Vector {
        assert!(x.len() == self.n && y.len() == self.n, "argument dimension mismatch");
        let mut out = vzero(self.v);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                vaxpy(&mut out, &(xi * yj), self.at(i, j));
            }
        }
        out
    }

    /// `self + other`.
    pub fn add(&self, other: &Bilinear) -> Bilinear {
        self.assert_same_shape(other);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Bilinear {
            n: self.n,
            v: self.v,
            data,
        }
    }

    /// `self − other`.
    pub fn sub(&self, other: &Bilinear) -> Bilinear {
        self.assert_same_shape(other);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Bilinear {
            n: self.n,
            v: self.v,
            data,
        }
    }

    /// `c · self`.
    pub fn scale(&self, c: &Q) -> Bilinear {
        let data = self.data.iter().map(|a| c * a).collect();
        Bilinear {
            n: self.n,
            v: self.v,
            data,
        }
    }

    /// `−self`.
    pub fn neg(&self) -> Bilinear {
        let data = self.data.iter().map(|a| -a).collect();
        Bilinear {
            n: self.n,
            v: self.v,
            data,
        }
    }

    /// `(x, y) ↦ b(y, x)`.
    pub fn transpose(&self) -> Bilinear {
        Bilinear::from_fn(self.n, self.v, |i, j| self.at(j, i).to_vec())
    }

    /// True when every value vanishes.
    pub fn is_zero(&self) -> bool {
        vis_zero(&self.data)
    }

    /// True when `b(x, y) = b(y, x)`.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    /// True when `b(x, y) = −b(y, x)`.
    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|i| {
            vis_zero(self.at(i, i)) && (0..i).all(|j| self.at(i, j).iter().zip(self.at(j, i)).all(|(a, b)| a == &-b))
        })
    }

    /// `(b − bᵀ)/2`.
    pub fn antisymmetric_part(&self) -> Bilinear {
        let half = Q::new(1.into(), 2.into());
        self.sub(&self.transpose()).scale(&half)
    }

    /// `(b + bᵀ)/2`.
    pub fn symmetric_part(&self) -> Bilinear {
        let half = Q::new(1.into(), 2.into());
        self.add(&self.transpose()).scale(&half)
    }

    /// `(x, y) ↦ b(m x, m y)` where `m: ℚ^k → ℚ^n`.
    pub fn pullback(&self, m: &Matrix) -> Bilinear {
        self.pullback2(m, m)
    }

    /// `(x, y) ↦ b(m1 x, m2 y)`.
    pub fn pullback2(&self, m1: &Matrix, m2: &Matrix) -> Bilinear {
        assert!(m1.rows() == self.n && m2.rows() == self.n, "pullback shape mismatch");
        assert_eq!(m1.cols(), m2.cols(), "pullback source mismatch");
        let k = m1.cols();
        let c1 = m1.columns();
        let c2 = m2.columns();
        Bilinear::from_fn(k, self.v, |i, j| self.eval(&c1[i], &c2[j]))
    }

    /// `(x, y) ↦ m b(x, y)` where `m: ℚ^v → ℚ^w`.
    pub fn pushforward(&self, m: &Matrix) -> Bilinear {
        assert_eq!(m.cols(), self.v, "pushforward shape mismatch");
        Bilinear::from_fn(self.n, m.rows(), |i, j| m.apply(self.at(i, j)))
    }

    fn assert_same_shape(&self, other: &Bilinear) {
        assert!(self.n == other.n && self.v == other.v, "bilinear shape mismatch");
    }
}
