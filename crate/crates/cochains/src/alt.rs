//! Alternating vector-valued cochains stored as full tensors.

use std::collections::HashMap;

use crossmod_lie::{Bilinear, LieAlgebra};
use crossmod_linalg::{vis_zero, vzero, Matrix, Vector, Q};
use num_traits::Zero;

use crate::CochainError;

/// An alternating `k`-linear map `ℚ^n × … × ℚ^n → ℚ^v`.
///
/// The full tensor is stored: the value on `(e_{i1}, …, e_{ik})` starts at
/// offset `(((i1·n + i2)·n + …)·n + ik)·v`. Antisymmetry is checked on
/// construction from raw data and preserved by every operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AltCochain {
    k: usize,
    n: usize,
    v: usize,
    data: Vec<Q>,
}

/// Strictly increasing index tuples of length `k` in `0..n`, in
/// lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Sorts `idx` and returns the sign of the sorting permutation, or `None`
/// when an index repeats.
pub fn sort_with_sign(idx: &[usize]) -> Option<(Vec<usize>, i32)> {
    let mut v = idx.to_vec();
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, sign))
    }
}

/// Lookup table from increasing tuples to their position in
/// [`combinations`].
pub(crate) fn combo_index(n: usize, k: usize) -> (Vec<Vec<usize>>, HashMap<Vec<usize>, usize>) {
    let combos = combinations(n, k);
    let map = combos.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    (combos, map)
}

fn offset(n: usize, v: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * n + i) * v
}

impl AltCochain {
    /// The zero cochain.
    pub fn zero(k: usize, n: usize, v: usize) -> Self {
        AltCochain {
            k,
            n,
            v,
            data: vzero(n.pow(k as u32) * v),
        }
    }

    /// Builds a cochain from its values on increasing index tuples; the other
    /// entries are filled in by antisymmetry.
    pub fn from_fn(k: usize, n: usize, v: usize, mut f: impl FnMut(&[usize]) -> Vector) -> Self {
        let mut c = AltCochain::zero(k, n, v);
        for combo in combinations(n, k) {
            let val = f(&combo);
            assert_eq!(val.len(), v, "value dimension mismatch");
            c.set_alternating(&combo, &val);
        }
        c
    }

    /// Builds a cochain from a flat full tensor, checking antisymmetry.
    pub fn from_data(k: usize, n: usize, v: usize, data: Vec<Q>) -> Result<Self, CochainError> {
        if data.len() != n.pow(k as u32) * v {
            return Err(CochainError::Shape("cochain data has wrong size".into()));
        }
        let c = AltCochain { k, n, v, data };
        let rebuilt = AltCochain::from_fn(k, n, v, |idx| c.at(idx).to_vec());
        if rebuilt != c {
            return Err(CochainError::NotAlternating);
        }
        Ok(c)
    }

    /// Builds a cochain from coordinates on increasing tuples, laid out as
    /// `components[combo · v + value]`.
    pub fn from_components(k: usize, n: usize, v: usize, components: &[Q]) -> Self {
        let combos = combinations(n, k);
        assert_eq!(components.len(), combos.len() * v, "component vector has wrong size");
        let mut c = AltCochain::zero(k, n, v);
        for (ci, combo) in combos.iter().enumerate() {
            c.set_alternating(combo, &components[ci * v..(ci + 1) * v]);
        }
        c
    }

    /// The coordinates on increasing tuples (inverse of
    /// [`AltCochain::from_components`]).
    pub fn to_components(&self) -> Vector {
        let mut out = Vec::new();
        for combo in combinations(self.n, self.k) {
            out.extend(self.at(&combo).iter().cloned());
        }
        out
    }

    /// An alternating bilinear map as a 2-cochain.
    pub fn from_bilinear(b: &Bilinear) -> Result<Self, CochainError> {
        if !b.is_antisymmetric() {
            return Err(CochainError::NotAlternating);
        }
        Ok(AltCochain {
            k: 2,
            n: b.source_dim(),
            v: b.values_dim(),
            data: b.data().to_vec(),
        })
    }

    /// A 2-cochain as a bilinear map.
    pub fn to_bilinear(&self) -> Bilinear {
        assert_eq!(self.k, 2, "only 2-cochains are bilinear");
        Bilinear::from_data(self.n, self.v, self.data.clone())
    }

    /// A 1-cochain from its matrix `v × n`.
    pub fn from_matrix(m: &Matrix) -> Self {
        AltCochain::from_fn(1, m.cols(), m.rows(), |idx| m.column(idx[0]))
    }

    /// A 1-cochain as its `v × n` matrix.
    pub fn to_matrix(&self) -> Matrix {
        assert_eq!(self.k, 1, "only 1-cochains are linear maps");
        Matrix::from_fn(self.v, self.n, |i, j| self.at(&[j])[i].clone())
    }

    fn set_alternating(&mut self, sorted: &[usize], val: &[Q]) {
        let (n, v) = (self.n, self.v);
        let neg: Vector = val.iter().map(|x| -x).collect();
        for (perm, sign) in permutations_with_sign(sorted) {
            let o = offset(n, v, &perm);
            let src = if sign > 0 { val } else { &neg[..] };
            self.data[o..o + v].clone_from_slice(src);
        }
    }

    /// Degree.
    pub fn degree(&self) -> usize {
        self.k
    }

    /// Dimension of the source.
    pub fn source_dim(&self) -> usize {
        self.n
    }

    /// Dimension of the values.
    pub fn values_dim(&self) -> usize {
        self.v
    }

    /// The flat full tensor.
    pub fn data(&self) -> &[Q] {
        &self.data
    }

    /// The value on basis vectors `(e_{i1}, …, e_{ik})`.
    pub fn at(&self, idx: &[usize]) -> &[Q] {
        assert_eq!(idx.len(), self.k, "wrong number of arguments");
        let o = offset(self.n, self.v, idx);
        &self.data[o..o + self.v]
    }

    /// The value on arbitrary vectors.
    pub fn eval(&self, args: &[Vector]) -> Vector {
        assert_eq!(args.len(), self.k, "wrong number of arguments");
        if self.v == 0 || (self.n == 0 && self.k > 0) {
            return vzero(self.v);
        }
        // Contract the last slot first so the remaining tensor stays
        // contiguous.
        let mut cur = self.data.clone();
        let block = self.v;
        for a in args.iter().rev() {
            assert_eq!(a.len(), self.n, "argument dimension mismatch");
            let outer = cur.len() / (self.n * block);
            let mut next = vzero(outer * block);
            for o in 0..outer {
                for (i, ai) in a.iter().enumerate() {
                    if ai.is_zero() {
                        continue;
                    }
                    let base = (o * self.n + i) * block;
                    for b in 0..block {
                        let x = &cur[base + b];
                        if !x.is_zero() {
                            next[o * block + b] += ai * x;
                        }
                    }
                }
            }
            cur = next;
        }
        cur
    }

    /// `self + other`.
    pub fn add(&self, other: &AltCochain) -> AltCochain {
        self.assert_same_shape(other);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        AltCochain { data, ..self.shape() }
    }

    /// `self − other`.
    pub fn sub(&self, other: &AltCochain) -> AltCochain {
        self.assert_same_shape(other);
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        AltCochain { data, ..self.shape() }
    }

    /// `c · self`.
    pub fn scale(&self, c: &Q) -> AltCochain {
        let data = self.data.iter().map(|a| c * a).collect();
        AltCochain { data, ..self.shape() }
    }

    /// `−self`.
    pub fn neg(&self) -> AltCochain {
        let data = self.data.iter().map(|a| -a).collect();
        AltCochain { data, ..self.shape() }
    }

    /// True when every value vanishes.
    pub fn is_zero(&self) -> bool {
        vis_zero(&self.data)
    }

    /// The Chevalley–Eilenberg differential with trivial coefficients,
    /// for a cochain on the Lie algebra `l`:
    /// `δω(X_1, …, X_{k+1}) = Σ_{i<j} (−1)^{i+j} ω([X_i, X_j], X_1, …, X̂_i, …, X̂_j, …)`.
    pub fn differential(&self, l: &LieAlgebra) -> AltCochain {
        assert_eq!(l.dim(), self.n, "cochain source does not match the algebra");
        let (n, v, k) = (self.n, self.v, self.k);
        AltCochain::from_fn(k + 1, n, v, |idx| {
            let mut out = vzero(v);
            if k == 0 {
                return out;
            }
            for a in 0..idx.len() {
                for b in (a + 1)..idx.len() {
                    let sign_neg = (a + b) % 2 == 1;
                    let rest: Vec<usize> = idx
                        .iter()
                        .enumerate()
                        .filter(|(p, _)| *p != a && *p != b)
                        .map(|(_, &i)| i)
                        .collect();
                    let br = l.bracket_basis(idx[a], idx[b]);
                    for (m, c) in br.iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let mut args = Vec::with_capacity(k);
                        args.push(m);
                        args.extend_from_slice(&rest);
                        let val = self.at(&args);
                        for (o, x) in out.iter_mut().zip(val) {
                            if x.is_zero() {
                                continue;
                            }
                            if sign_neg {
                                *o -= c * x;
                            } else {
                                *o += c * x;
                            }
                        }
                    }
                }
            }
            out
        })
    }

    /// `(m^*ω)(X_1, …) = ω(m X_1, …)` for `m: ℚ^{n'} → ℚ^n`.
    pub fn pullback(&self, m: &Matrix) -> AltCochain {
        assert_eq!(m.rows(), self.n, "pullback shape mismatch");
        let n2 = m.cols();
        let cols = m.columns();
        AltCochain::from_fn(self.k, n2, self.v, |idx| {
            let args: Vec<Vector> = idx.iter().map(|&i| cols[i].clone()).collect();
            self.eval(&args)
        })
    }

    /// `m ∘ ω` for `m: ℚ^v → ℚ^{v'}`.
    pub fn pushforward(&self, m: &Matrix) -> AltCochain {
        assert_eq!(m.cols(), self.v, "pushforward shape mismatch");
        let v2 = m.rows();
        let mut data = Vec::with_capacity(self.data.len() / self.v.max(1) * v2);
        if self.v == 0 {
            data = vzero(self.n.pow(self.k as u32) * v2);
        } else {
            for chunk in self.data.chunks(self.v) {
                data.extend(m.apply(chunk));
            }
        }
        AltCochain {
            k: self.k,
            n: self.n,
            v: v2,
            data,
        }
    }

    fn shape(&self) -> AltCochain {
        AltCochain {
            k: self.k,
            n: self.n,
            v: self.v,
            data: Vec::new(),
        }
    }

    fn assert_same_shape(&self, other: &AltCochain) {
        assert!(
            self.k == other.k && self.n == other.n && self.v == other.v,
            "cochain shape mismatch"
        );
    }
}

fn permutations_with_sign(sorted: &[usize]) -> Vec<(Vec<usize>, i32)> {
    if sorted.is_empty() {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (pos, &first) in sorted.iter().enumerate() {
        let rest: Vec<usize> = sorted
            .iter()
            .enumerate()
            .filter(|(p, _)| *p != pos)
            .map(|(_, &x)| x)
            .collect();
        let sign = if pos % 2 == 0 { 1 } else { -1 };
        for (mut p, s) in permutations_with_sign(&rest) {
            p.insert(0, first);
            out.push((p, s * sign));
        }
    }
    out
}
