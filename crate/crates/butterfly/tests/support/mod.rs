//! Shared instances for the butterfly tests.

#![allow(dead_code)]

use crossmod_butterfly::*;
use crossmod_catalog::*;
use crossmod_cochains::{cohomology, AltCochain};
use crossmod_crossed::CrossedModule;
use crossmod_lie::{abelian, heisenberg3, so3, Bilinear};
use crossmod_linalg::{q, qf, Matrix, Vector, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small<R: Rng>(rng: &mut R) -> Q {
    qf(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small(rng))
}

pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let m = random_matrix(rng, n, n);
        if m.rank() == n {
            return m;
        }
    }
}

pub fn random_cochain<R: Rng>(rng: &mut R, k: usize, n: usize, v: usize) -> AltCochain {
    AltCochain::from_fn(k, n, v, |_| (0..v).map(|_| small(rng)).collect())
}

/// A random closed `a`-valued 2-cochain on `f` and the coordinates of its
/// class.
pub fn random_closed<R: Rng>(rng: &mut R, m: &CrossedModule) -> (AltCochain, Vector) {
    let (f, v) = (m.f(), m.a_dim());
    let h2 = cohomology(f, v, 2);
    let coords: Vector = (0..h2.dim()).map(|_| small(rng)).collect();
    let mut xi = random_cochain(rng, 1, f.dim(), v).differential(f);
    for (c, rep) in coords.iter().zip(&h2.basis) {
        xi = xi.add(&rep.scale(c));
    }
    (xi, coords)
}

pub fn heis_product() -> CrossedModule {
    product_module(&heisenberg3(), 1)
}

pub fn plane_form() -> Bilinear {
    Bilinear::from_fn(2, 1, |i, j| vec![q((i + j) as i64 + 1)])
}

pub fn torus() -> CrossedModule {
    categorical_torus(&Matrix::from_fn(2, 2, |r, c| q((r * 2 + c) as i64 - 1)))
        .unwrap()
        .module
}

pub fn strict_data(src: &CrossedModule, tgt: &CrossedModule, on_g: Matrix, on_h: Matrix) -> CocycleData {
    let lambda = AltCochain::zero(2, src.g().dim(), tgt.h().dim());
    CocycleData::validated(src.clone(), tgt.clone(), on_g, on_h, lambda).unwrap()
}

/// The strict morphism from the Heisenberg extension to the product module
/// over the plane: `(x, y, z) ↦ (x, y)` on `g` and `h = ℚ² → ℚ` picking the
/// kernel coordinate scaled by `scale_a`.
pub fn heis_to_product(scale_a: i64) -> CocycleData {
    let src = heisenberg_extension();
    let tgt = product_module(&abelian(2), 1);
    let on_g = Matrix::from_fn(2, 3, |r, c| if r == c { q(1) } else { q(0) });
    let on_h = Matrix::from_fn(1, 2, |_, c| if c == 1 { q(scale_a) } else { q(0) });
    strict_data(&src, &tgt, on_g, on_h)
}

pub fn truncation_strict() -> CocycleData {
    let (f, b) = (abelian(2), plane_form());
    let hi = path_truncation_module(&f, &b, 2).unwrap();
    let lo = path_truncation_module(&f, &b, 1).unwrap();
    let w = truncation_intertwiner(&f, &b, 2, 1).unwrap();
    strict_data(&hi, &lo, w.on_g, w.on_h)
}

pub fn connect(m1: &CrossedModule, m2: &CrossedModule) -> Option<CocycleData> {
    connect_same_kl(m1, &m1.default_splitting(), m2, &m2.default_splitting()).unwrap()
}

/// Invertible cocycle data with a label.
pub fn invertible_instances() -> Vec<(&'static str, CocycleData)> {
    let mut r = rng(5);
    let hp = heis_product();
    let (xi, _) = random_closed(&mut r, &hp);
    let trunc_plane = path_truncation_module(&abelian(2), &plane_form(), 1).unwrap();
    let trunc_so3 = path_truncation_module(&so3(), &Bilinear::zero(3, 1), 1).unwrap();
    vec![
        (
            "identity on the Heisenberg extension",
            identity_data(&heisenberg_extension()),
        ),
        ("identity on a torus", identity_data(&torus())),
        ("identity on the cubic module", identity_data(&cubic_module())),
        ("identity on matrix_aut(2)", identity_data(&matrix_aut(2))),
        ("twist on heisenberg3 x R", twist_data(&hp, &xi).unwrap()),
        ("Heisenberg extension to product", heis_to_product(2)),
        ("truncation projection", truncation_strict()),
        (
            "truncation to product",
            connect(&trunc_plane, &product_module(&abelian(2), 1)).unwrap(),
        ),
        (
            "so3 truncation to product",
            connect(&trunc_so3, &product_module(&so3(), 1)).unwrap(),
        ),
        (
            "product to so3 truncation",
            connect(&product_module(&so3(), 1), &trunc_so3).unwrap(),
        ),
    ]
}

/// Valid cocycle data that does not induce isomorphisms on homotopy.
pub fn non_invertible_instances() -> Vec<CocycleData> {
    let p = product_module(&so3(), 1);
    let zero = CocycleData::validated(
        p.clone(),
        p.clone(),
        Matrix::zeros(3, 3),
        Matrix::zeros(1, 1),
        AltCochain::zero(2, 3, 1),
    )
    .unwrap();
    vec![zero, heis_to_product(0)]
}

/// Shifts the section of `d` by a random `γ: g1 → h2`.
pub fn random_shift<R: Rng>(rng: &mut R, d: &CocycleData) -> (CocycleData, Matrix) {
    let gamma = random_matrix(rng, d.target().h().dim(), d.source().g().dim());
    (shift_section(d, &gamma).unwrap(), gamma)
}
