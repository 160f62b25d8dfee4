//! Sparse incremental Gaussian elimination over ℚ.
//!
//! Every kernel, image, rank and affine solve in the workspace goes through
//! [`LinearSystem`]. Equations are added one at a time as sparse rows and are
//! reduced against the pivot rows collected so far, so large but sparse
//! systems (the adjustment and derivation equations) stay cheap.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalar::Q;
use crate::subspace::Subspace;
use crate::vector::{vzero, Vector};

type SparseRow = BTreeMap<usize, Q>;

/// A system of linear equations `Σ_j a_ij x_j = b_i` in a fixed number of
/// unknowns.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    nvars: usize,
    pivots: BTreeMap<usize, (SparseRow, Q)>,
    inconsistent: bool,
}

/// The full solution set of an affine system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    /// One solution, or `None` when the system is inconsistent.
    pub particular: Option<Vector>,
    /// The solution space of the homogeneous system, in canonical form.
    pub homogeneous: Subspace,
}

impl AffineSolution {
    /// True when a solution exists.
    pub fn is_consistent(&self) -> bool {
        self.particular.is_some()
    }
}

impl LinearSystem {
    /// An empty system in `nvars` unknowns.
    pub fn new(nvars: usize) -> Self {
        LinearSystem {
            nvars,
            pivots: BTreeMap::new(),
            inconsistent: false,
        }
    }

    /// Number of unknowns.
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Rank of the equations added so far.
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// True once an equation `0 = b` with `b ≠ 0` has been derived.
    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    /// Adds the equation `Σ coeff · x_index = rhs`. Repeated indices are
    /// summed.
    pub fn add_equation<I>(&mut self, terms: I, rhs: Q)
    where
        I: IntoIterator<Item = (usize, Q)>,
    {
        let mut row = SparseRow::new();
        for (j, c) in terms {
            assert!(j < self.nvars, "unknown index {j} out of range");
            if c.is_zero() {
                continue;
            }
            let entry = row.entry(j).or_insert_with(Q::zero);
            *entry += c;
            if entry.is_zero() {
                row.remove(&j);
            }
        }
        self.insert(row, rhs);
    }

    /// Adds a dense equation `a · x = rhs`.
    pub fn add_dense_equation(&mut self, a: &[Q], rhs: Q) {
        assert_eq!(a.len(), self.nvars, "equation length mismatch");
        let terms = a
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c.clone()));
        self.add_equation(terms, rhs);
    }

    fn insert(&mut self, mut row: SparseRow, mut rhs: Q) {
        loop {
            let hit = row
                .iter()
                .find(|(c, _)| self.pivots.contains_key(c))
                .map(|(c, v)| (*c, v.clone()));
            let Some((col, factor)) = hit else { break };
            let (prow, prhs) = &self.pivots[&col];
            for (k, pv) in prow {
                let entry = row.entry(*k).or_insert_with(Q::zero);
                *entry -= &factor * pv;
                if entry.is_zero() {
                    row.remove(k);
                }
            }
            rhs -= &factor * prhs;
        }
        let Some((&lead, lead_val)) = row.iter().next() else {
            if !rhs.is_zero() {
                self.inconsistent = true;
            }
            return;
        };
        let inv = Q::one() / lead_val;
        if !inv.is_one() {
            for v in row.values_mut() {
                *v *= &inv;
            }
            rhs *= &inv;
        }
        self.pivots.insert(lead, (row, rhs));
    }

    /// Reduces the collected pivot rows to reduced row echelon form.
    fn reduced(&self) -> BTreeMap<usize, (SparseRow, Q)> {
        let mut done: BTreeMap<usize, (SparseRow, Q)> = BTreeMap::new();
        for (&col, (row, rhs)) in self.pivots.iter().rev() {
            let mut row = row.clone();
            let mut rhs = rhs.clone();
            let hits: Vec<(usize, Q)> = row
                .iter()
                .filter(|(c, _)| **c != col && done.contains_key(c))
                .map(|(c, v)| (*c, v.clone()))
                .collect();
            for (c, factor) in hits {
                let (prow, prhs) = &done[&c];
                for (k, pv) in prow {
                    let entry = row.entry(*k).or_insert_with(Q::zero);
                    *entry -= &factor * pv;
                    if entry.is_zero() {
                        row.remove(k);
                    }
                }
                rhs -= &factor * prhs;
            }
            done.insert(col, (row, rhs));
        }
        done
    }

    /// Solves the system: a particular solution (free unknowns set to zero)
    /// and the homogeneous solution space.
    pub fn solve(&self) -> AffineSolution {
        let rref = self.reduced();
        let particular = if self.inconsistent {
            None
        } else {
            let mut x = vzero(self.nvars);
            for (&col, (_, rhs)) in &rref {
                x[col] = rhs.clone();
            }
            Some(x)
        };
        let mut kernel = Vec::new();
        for free in (0..self.nvars).filter(|c| !rref.contains_key(c)) {
            let mut v = vzero(self.nvars);
            v[free] = Q::one();
            for (&col, (row, _)) in &rref {
                if let Some(c) = row.get(&free) {
                    v[col] = -c;
                }
            }
            kernel.push(v);
        }
        AffineSolution {
            particular,
            homogeneous: Subspace::span(self.nvars, &kernel),
        }
    }

    /// The row space of the equations, in canonical form.
    pub fn row_space(&self) -> Subspace {
        let rows: Vec<Vector> = self
            .pivots
            .values()
            .map(|(row, _)| {
                let mut v = vzero(self.nvars);
                for (k, c) in row {
                    v[*k] = c.clone();
                }
                v
            })
            .collect();
        Subspace::span(self.nvars, &rows)
    }

    /// Pivot rows as dense vectors in reduced row echelon form, ordered by
    /// pivot column, together with those pivot columns.
    pub(crate) fn rref_rows(&self) -> (Vec<usize>, Vec<Vector>) {
        let rref = self.reduced();
        let mut cols = Vec::with_capacity(rref.len());
        let mut rows = Vec::with_capacity(rref.len());
        for (col, (row, _)) in rref {
            let mut v = vzero(self.nvars);
            for (k, c) in row {
                v[k] = c;
            }
            cols.push(col);
            rows.push(v);
        }
        (cols, rows)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn detects_inconsistency() {
        let mut s = LinearSystem::new(2);
        s.add_equation([(0, q(1)), (1, q(1))], q(1));
        s.add_equation([(0, q(2)), (1, q(2))], q(3));
        assert!(s.is_inconsistent());
        assert!(s.solve().particular.is_none());
    }

    #[test]
    fn repeated_indices_are_summed() {
        let mut s = LinearSystem::new(1);
        s.add_equation([(0, q(1)), (0, q(-1))], q(0));
        assert_eq!(s.rank(), 0);
    }
}
