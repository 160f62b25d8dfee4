//! Butterflies with an explicit middle algebra, reconstruction from cocycle
//! data and extraction of cocycle data along a section.

use crossmod_cochains::AltCochain;
use crossmod_crossed::CrossedModule;
use crossmod_lie::LieAlgebra;
use crossmod_linalg::{solve_affine, unit, vadd, vsub, vzero, Matrix, Vector, Q};

use crate::data::{validate_cocycle_data, CocycleData};
use crate::ButterflyError;

/// One of the axioms of a butterfly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ButterflyAxiom {
    /// The middle algebra satisfies antisymmetry and the Jacobi identity.
    MiddleLie,
    /// `i1, i2, r1, r2` are Lie algebra homomorphisms.
    Homomorphisms,
    /// `r1 i1 = t1` and `r2 i2 = t2`.
    Wings,
    /// `r2 i1 = 0` and `r1 i2 = 0`.
    Complexes,
    /// `0 → h2 → k → g1 → 0` is exact.
    Exactness,
    /// `i1(α1(r1 X, y)) = [X, i1 y]` and `i2(α2(r2 X, y)) = [X, i2 y]`.
    Relations,
}

/// A butterfly from `source` to `target` with an explicit middle algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Butterfly {
    source: CrossedModule,
    target: CrossedModule,
    middle: LieAlgebra,
    i1: Matrix,
    i2: Matrix,
    r1: Matrix,
    r2: Matrix,
}

fn axiom(axiom: ButterflyAxiom, detail: impl Into<String>) -> ButterflyError {
    ButterflyError::Axiom {
        axiom,
        detail: detail.into(),
    }
}

impl Butterfly {
    /// Validates all butterfly axioms.
    pub fn new(
        source: CrossedModule,
        target: CrossedModule,
        middle: LieAlgebra,
        i1: Matrix,
        i2: Matrix,
        r1: Matrix,
        r2: Matrix,
    ) -> Result<Self, ButterflyError> {
        let n = middle.dim();
        let (h1, g1) = (source.h().dim(), source.g().dim());
        let (h2, g2) = (target.h().dim(), target.g().dim());
        let shapes = [(&i1, n, h1), (&i2, n, h2), (&r1, g1, n), (&r2, g2, n)];
        if shapes.iter().any(|(m, r, c)| m.rows() != *r || m.cols() != *c) {
            return Err(ButterflyError::Shape("butterfly maps have inconsistent shapes".into()));
        }
        middle
            .validate()
            .map_err(|e| axiom(ButterflyAxiom::MiddleLie, e.to_string()))?;
        let homs = [
            (source.h().is_homomorphism_to(&middle, &i1), "i1"),
            (target.h().is_homomorphism_to(&middle, &i2), "i2"),
            (middle.is_homomorphism_to(source.g(), &r1), "r1"),
            (middle.is_homomorphism_to(target.g(), &r2), "r2"),
        ];
        if let Some((_, name)) = homs.iter().find(|(ok, _)| !ok) {
            return Err(axiom(
                ButterflyAxiom::Homomorphisms,
                format!("{name} does not preserve brackets"),
            ));
        }
        if &r1.mul(&i1) != source.t() || &r2.mul(&i2) != target.t() {
            return Err(axiom(ButterflyAxiom::Wings, "r1 i1 = t1 or r2 i2 = t2 fails"));
        }
        if !r2.mul(&i1).is_zero() || !r1.mul(&i2).is_zero() {
            return Err(axiom(ButterflyAxiom::Complexes, "a diagonal is not a complex"));
        }
        if i2.rank() != h2 || r1.rank() != g1 || n != h2 + g1 {
            return Err(axiom(ButterflyAxiom::Exactness, "h2 → k → g1 is not short exact"));
        }
        let b = Butterfly {
            source,
            target,
            middle,
            i1,
            i2,
            r1,
            r2,
        };
        b.check_relations()?;
        Ok(b)
    }

    fn check_relations(&self) -> Result<(), ButterflyError> {
        let n = self.middle.dim();
        let sides = [
            (&self.source, &self.i1, &self.r1, "i1"),
            (&self.target, &self.i2, &self.r2, "i2"),
        ];
        for (m, i, r, name) in sides {
            let icols = i.columns();
            for x in 0..n {
                let ex = unit(n, x);
                let rx = r.column(x);
                for (y, iy) in icols.iter().enumerate() {
                    let lhs = i.apply(&m.act(&rx, &unit(m.h().dim(), y)));
                    if lhs != self.middle.bracket(&ex, iy) {
                        return Err(axiom(
                            ButterflyAxiom::Relations,
                            format!("{name} relation fails for middle basis {x} and basis {y}"),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// The source module.
    pub fn source(&self) -> &CrossedModule {
        &self.source
    }

    /// The target module.
    pub fn target(&self) -> &CrossedModule {
        &self.target
    }

    /// The middle algebra `k`.
    pub fn middle(&self) -> &LieAlgebra {
        &self.middle
    }

    /// `i1: h1 → k`.
    pub fn i1(&self) -> &Matrix {
        &self.i1
    }

    /// `i2: h2 → k`.
    pub fn i2(&self) -> &Matrix {
        &self.i2
    }

    /// `r1: k → g1`.
    pub fn r1(&self) -> &Matrix {
        &self.r1
    }

    /// `r2: k → g2`.
    pub fn r2(&self) -> &Matrix {
        &self.r2
    }

    /// True when the other diagonal `0 → h1 → k → g2 → 0` is also short
    /// exact, which happens exactly when the induced maps on homotopy are
    /// isomorphisms.
    pub fn is_invertible(&self) -> bool {
        let (h1, g2) = (self.source.h().dim(), self.target.g().dim());
        self.i1.rank() == h1 && self.r2.rank() == g2 && self.middle.dim() == h1 + g2
    }

    /// The inverse butterfly, obtained by reflecting the diagram.
    pub fn inverse(&self) -> Result<Butterfly, ButterflyError> {
        if !self.is_invertible() {
            return Err(ButterflyError::NotInvertible);
        }
        Butterfly::new(
            self.target.clone(),
            self.source.clone(),
            self.middle.clone(),
            self.i2.clone(),
            self.i1.clone(),
            self.r2.clone(),
            self.r1.clone(),
        )
    }

    /// Some section `q: g1 → k` of `r1`.
    pub fn section(&self) -> Matrix {
        let g1 = self.source.g().dim();
        let cols: Vec<Vector> = (0..g1)
            .map(|x| {
                solve_affine(&self.r1, &unit(g1, x))
                    .particular
                    .expect("r1 is surjective")
            })
            .collect();
        Matrix::from_columns(self.middle.dim(), &cols)
    }

    /// The retraction `j: k → h2` with `i2 j + q r1 = id`.
    pub fn retraction(&self, q: &Matrix) -> Result<Matrix, ButterflyError> {
        self.check_section(q)?;
        let n = self.middle.dim();
        let rest = Matrix::identity(n).sub(&q.mul(&self.r1));
        let cols: Vec<Vector> = rest
            .columns()
            .iter()
            .map(|c| {
                solve_affine(&self.i2, c)
                    .particular
                    .expect("exactness puts ker r1 in im i2")
            })
            .collect();
        Ok(Matrix::from_columns(self.target.h().dim(), &cols))
    }

    fn check_section(&self, q: &Matrix) -> Result<(), ButterflyError> {
        let g1 = self.source.g().dim();
        if q.rows() != self.middle.dim() || q.cols() != g1 {
            return Err(ButterflyError::NotSection("q must map g1 to k".into()));
        }
        if self.r1.mul(q) != Matrix::identity(g1) {
            return Err(ButterflyError::NotSection("r1 q is not the identity".into()));
        }
        Ok(())
    }
}

/// A butterfly realized from cocycle data on `k = h2 ⊕ g1`, with its
/// canonical section `q0(X) = (0, X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reconstruction {
    /// The realized butterfly.
    pub butterfly: Butterfly,
    /// The canonical section.
    pub canonical_section: Matrix,
}

/// Realizes cocycle data on `k = h2 ⊕ g1` (coordinates `(x, X)`, the `h2`
/// part first) with the bracket
/// `[(x, X), (y, Y)] = ([x, y] + α2(φX, y) − α2(φY, x) + λ(X, Y), [X, Y])`
/// and the maps `i1(y) = (−f y, t1 y)`, `i2(y) = (y, 0)`, `r1(x, X) = X`,
/// `r2(x, X) = φX + t2 x`. All butterfly axioms are verified.
pub fn reconstruct(d: &CocycleData) -> Result<Reconstruction, ButterflyError> {
    validate_cocycle_data(d).into_result()?;
    let (m1, m2) = (d.source(), d.target());
    let (k2, n1) = (m2.h().dim(), m1.g().dim());
    let n = k2 + n1;
    let (h2, g1) = (m2.h(), m1.g());
    let split = |v: &[Q]| (v[..k2].to_vec(), v[k2..].to_vec());
    let bracket = |a: &[Q], b: &[Q]| -> Vector {
        let (x, xx) = split(a);
        let (y, yy) = split(b);
        let (px, py) = (d.phi().apply(&xx), d.phi().apply(&yy));
        let mut low = h2.bracket(&x, &y);
        low = vadd(&low, &m2.act(&px, &y));
        low = vsub(&low, &m2.act(&py, &x));
        low = vadd(&low, &d.lambda().eval(&[xx.clone(), yy.clone()]));
        let mut out = low;
        out.extend(g1.bracket(&xx, &yy));
        out
    };
    let mut c = vzero(n * n * n);
    for i in 0..n {
        for j in 0..n {
            let b = bracket(&unit(n, i), &unit(n, j));
            for (k, v) in b.into_iter().enumerate() {
                c[(i * n + j) * n + k] = v;
            }
        }
    }
    let middle = LieAlgebra::from_tensor(n, c).map_err(|e| axiom(ButterflyAxiom::MiddleLie, e.to_string()))?;
    let k1 = m1.h().dim();
    let i1 = Matrix::from_fn(n, k1, |r, y| {
        if r < k2 {
            -d.f()[(r, y)].clone()
        } else {
            m1.t()[(r - k2, y)].clone()
        }
    });
    let i2 = Matrix::from_fn(n, k2, |r, y| {
        if r == y {
            crossmod_linalg::one()
        } else {
            crossmod_linalg::zero()
        }
    });
    let r1 = Matrix::from_fn(n1, n, |r, c| {
        if c == r + k2 {
            crossmod_linalg::one()
        } else {
            crossmod_linalg::zero()
        }
    });
    let r2 = m2.t().hstack(d.phi());
    let canonical_section = r1.transpose();
    let butterfly = Butterfly::new(m1.clone(), m2.clone(), middle, i1, i2, r1, r2)?;
    Ok(Reconstruction {
        butterfly,
        canonical_section,
    })
}

/// The cocycle data of a butterfly along a section `q` of `r1`:
/// `φ = r2 q`, `f = −j i1` and `λ(X, Y) = j([qX, qY])`, where `j` is the
/// retraction with `i2 j + q r1 = id`.
pub fn extract(b: &Butterfly, q: &Matrix) -> Result<CocycleData, ButterflyError> {
    let j = b.retraction(q)?;
    let phi = b.r2.mul(q);
    let f = j.mul(&b.i1).scale(&-crossmod_linalg::one());
    let qcols = q.columns();
    let lambda = AltCochain::from_fn(2, q.cols(), b.target.h().dim(), |idx| {
        j.apply(&b.middle.bracket(&qcols[idx[0]], &qcols[idx[1]]))
    });
    let d = CocycleData::new(b.source.clone(), b.target.clone(), phi, f, lambda)?;
    validate_cocycle_data(&d).into_result()?;
    Ok(d)
}
