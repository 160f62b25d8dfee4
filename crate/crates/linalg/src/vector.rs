//! Helpers for plain coordinate vectors `Vec<Q>`.

use num_traits::Zero;

use crate::scalar::{one, Q};

/// A coordinate vector.
pub type Vector = Vec<Q>;

/// The zero vector of length `n`.
pub fn vzero(n: usize) -> Vector {
    vec![Q::zero(); n]
}

/// The `i`-th standard basis vector of length `n`.
pub fn unit(n: usize, i: usize) -> Vector {
    let mut v = vzero(n);
    v[i] = one();
    v
}

/// `a + b`.
pub fn vadd(a: &[Q], b: &[Q]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `a - b`.
pub fn vsub(a: &[Q], b: &[Q]) -> Vector {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// `c * a`.
pub fn vscale(c: &Q, a: &[Q]) -> Vector {
    a.iter().map(|x| c * x).collect()
}

/// `-a`.
pub fn vneg(a: &[Q]) -> Vector {
    a.iter().map(|x| -x).collect()
}

/// `acc += c * a`, skipping the work when `c` is zero.
pub fn vaxpy(acc: &mut [Q], c: &Q, a: &[Q]) {
    if c.is_zero() {
        return;
    }
    assert_eq!(acc.len(), a.len(), "vector length mismatch");
    for (x, y) in acc.iter_mut().zip(a) {
        if !y.is_zero() {
            *x += c * y;
        }
    }
}

/// True when every entry vanishes.
pub fn vis_zero(a: &[Q]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Euclidean pairing `Σ a_i b_i`.
pub fn dot(a: &[Q], b: &[Q]) -> Q {
    assert_eq!(a.len(), b.len(), "vector length mismatch");
    let mut s = Q::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

/// Concatenation `(a, b)`.
pub fn vconcat(a: &[Q], b: &[Q]) -> Vector {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}
