//! Acceptance checks across the whole workspace. Each criterion is one test
//! and prints a single `criterion N: PASS` or `criterion N: FAIL` line.
//! All comparisons are exact rational equalities.

use crossmod_adjust::*;
use crossmod_butterfly::*;
use crossmod_catalog::path::*;
use crossmod_catalog::*;
use crossmod_cochains::{cohomology, AltCochain};
use crossmod_crossed::CrossedModule;
use crossmod_lie::*;
use crossmod_linalg::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

/// Runs one criterion, prints its line and fails the test on failure.
fn report(n: usize, title: &str, body: impl FnOnce() -> Outcome + std::panic::UnwindSafe) {
    let outcome = std::panic::catch_unwind(body).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".into());
        Err(format!("panicked: {msg}"))
    });
    match outcome {
        Ok(detail) => println!("criterion {n}: PASS  {title} ({detail})"),
        Err(why) => {
            println!("criterion {n}: FAIL  {title}: {why}");
            panic!("criterion {n} failed: {why}");
        }
    }
}

// ---------------------------------------------------------------------------
// Random inputs and shared instances.

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small<R: Rng>(rng: &mut R) -> Q {
    qf(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |_, _| small(rng))
}

fn random_integral<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    Matrix::from_fn(n, n, |_, _| q(rng.gen_range(-5..=5)))
}

fn random_vector<R: Rng>(rng: &mut R, n: usize) -> Vector {
    (0..n).map(|_| small(rng)).collect()
}

fn random_cochain<R: Rng>(rng: &mut R, k: usize, n: usize, v: usize) -> AltCochain {
    AltCochain::from_fn(k, n, v, |_| (0..v).map(|_| small(rng)).collect())
}

/// A random closed `a`-valued 2-cochain on `f` and the coordinates of its
/// class.
fn random_closed<R: Rng>(rng: &mut R, m: &CrossedModule) -> (AltCochain, Vector) {
    let (f, v) = (m.f(), m.a_dim());
    let h2 = cohomology(f, v, 2);
    let coords: Vector = (0..h2.dim()).map(|_| small(rng)).collect();
    let mut xi = random_cochain(rng, 1, f.dim(), v).differential(f);
    for (c, rep) in coords.iter().zip(&h2.basis) {
        xi = xi.add(&rep.scale(c));
    }
    (xi, coords)
}

fn form_of(j: &Matrix) -> Bilinear {
    Bilinear::from_fn(j.rows(), 1, |a, b| vec![j[(a, b)].clone()])
}

fn identity_form(n: usize) -> Bilinear {
    Bilinear::from_fn(n, 1, |i, j| vec![if i == j { q(1) } else { q(0) }])
}

fn plane_form() -> Bilinear {
    Bilinear::from_fn(2, 1, |i, j| vec![q((i + j) as i64 + 1)])
}

/// A nonzero invariant form on heisenberg3, supported on `span(e0, e1)`.
fn heisenberg_form() -> Bilinear {
    Bilinear::from_fn(3, 1, |i, j| {
        vec![if i < 2 && j < 2 { q((i * j) as i64 + 1) } else { q(0) }]
    })
}

fn heis_product() -> CrossedModule {
    product_module(&heisenberg3(), 1)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn strict_data(src: &CrossedModule, tgt: &CrossedModule, on_g: Matrix, on_h: Matrix) -> CocycleData {
    let lambda = AltCochain::zero(2, src.g().dim(), tgt.h().dim());
    CocycleData::validated(src.clone(), tgt.clone(), on_g, on_h, lambda).unwrap()
}

fn heis_to_plane(scale_a: i64) -> CocycleData {
    let on_g = Matrix::from_fn(2, 3, |r, c| if r == c { q(1) } else { q(0) });
    let on_h = Matrix::from_fn(1, 2, |_, c| if c == 1 { q(scale_a) } else { q(0) });
    strict_data(&heisenberg_extension(), &product_module(&abelian(2), 1), on_g, on_h)
}

fn truncation_strict(f: &LieAlgebra, b: &Bilinear) -> CocycleData {
    let hi = path_truncation_module(f, b, 2).unwrap();
    let lo = path_truncation_module(f, b, 1).unwrap();
    let w = truncation_intertwiner(f, b, 2, 1).unwrap();
    strict_data(&hi, &lo, w.on_g, w.on_h)
}

fn connect(m1: &CrossedModule, m2: &CrossedModule) -> Option<CocycleData> {
    connect_same_kl(m1, &m1.default_splitting(), m2, &m2.default_splitting()).unwrap()
}

fn torus(seed: u64) -> CrossedModule {
    categorical_torus(&random_integral(&mut rng(seed), 2)).unwrap().module
}

/// Labelled invertible cocycle data, including twists and connecting data.
fn invertible_instances() -> Vec<(&'static str, CocycleData)> {
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
        ("identity on a torus", identity_data(&torus(3))),
        ("identity on the cubic module", identity_data(&cubic_module())),
        ("identity on matrix_aut(2)", identity_data(&matrix_aut(2))),
        ("twist on heisenberg3 x Q", twist_data(&hp, &xi).unwrap()),
        ("Heisenberg extension to product", heis_to_plane(2)),
        ("truncation projection", truncation_strict(&abelian(2), &plane_form())),
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

fn non_invertible_instances() -> Vec<(&'static str, CocycleData)> {
    let p = product_module(&so3(), 1);
    let zero = CocycleData::validated(
        p.clone(),
        p,
        Matrix::zeros(3, 3),
        Matrix::zeros(1, 1),
        AltCochain::zero(2, 3, 1),
    )
    .unwrap();
    vec![
        ("zero data on so3 x Q", zero),
        ("Heisenberg extension collapsing a", heis_to_plane(0)),
    ]
}

fn random_shift<R: Rng>(rng: &mut R, d: &CocycleData) -> (CocycleData, Matrix) {
    let gamma = random_matrix(rng, d.target().h().dim(), d.source().g().dim());
    (shift_section(d, &gamma).unwrap(), gamma)
}

/// Shifts the section of `d` until it is neat for the default sections.
fn neat(d: &CocycleData) -> (Matrix, Matrix, CocycleData) {
    let (s1, s2) = (d.source().lift().clone(), d.target().lift().clone());
    let gamma = neat_shift(d, &s1, &s2).unwrap();
    (s1.clone(), s2.clone(), shift_section(d, &gamma).unwrap())
}

/// Solves every adjustment identity (and adaptedness to `s` when given) as
/// one dense linear system in the unknowns `η(e_i, e_j)_c`. Returns one
/// solution and the dimension of the solution set.
fn brute_force_adjustments(m: &CrossedModule, s: Option<&Matrix>) -> (Option<Bilinear>, usize) {
    let (g, h) = (m.g(), m.h());
    let (n, k) = (g.dim(), h.dim());
    let nv = n * n * k;
    let var = |i: usize, j: usize, c: usize| (i * n + j) * k + c;
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vector = Vec::new();
    let mut push = |row: Vector, value: Q| {
        if !vis_zero(&row) || value != q(0) {
            rows.push(row);
            rhs.push(value);
        }
    };
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
                    push(row, q(0));
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
                push(left, -act[c].clone());
                push(right, act[c].clone());
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
                    push(row, target[r].clone());
                }
            }
        }
    }
    if rows.is_empty() {
        return (Some(Bilinear::zero(n, k)), nv);
    }
    let a = Matrix::from_rows(nv, &rows).unwrap();
    let sol = solve_affine(&a, &rhs);
    let dim = sol.homogeneous.dim();
    (sol.particular.map(|v| Bilinear::from_data(n, k, v)), dim)
}

/// `dim f − dim [f, f]`.
fn abelianization_dim(f: &LieAlgebra) -> usize {
    let n = f.dim();
    let cols: Vec<Vector> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .map(|(i, j)| f.bracket_basis(i, j).to_vec())
        .collect();
    if cols.is_empty() {
        return n;
    }
    n - Matrix::from_columns(n, &cols).rank()
}

// ---------------------------------------------------------------------------
// Criteria.

#[test]
fn criterion_01_categorical_torus() {
    report(1, "categorical torus", || {
        let mut r = rng(101);
        let mut count = 0;
        for n in 1..=3 {
            for _ in 0..4 {
                let j = random_integral(&mut r, n);
                let t = categorical_torus(&j).unwrap();
                let m = &t.module;
                ensure!(m.kl_class().is_trivial(), "KL nonzero for n = {n}");
                let s = m.lift().clone();
                let dim = classify_adjustments(m, &s).unwrap().dim();
                let (_, oracle) = brute_force_adjustments(m, Some(&s));
                ensure!(
                    dim == n * n && oracle == n * n,
                    "adjustment space dim {dim}, oracle {oracle}, n = {n}"
                );
                ensure!(t.eta == form_of(&j), "torus form is not J");
                ensure!(
                    check_adjustment(m, &t.eta, Some(&s)).unwrap().passed(),
                    "J fails an identity"
                );
                let expected = form_of(&j.add(&j.transpose()).scale(&qf(-1, 2)));
                ensure!(
                    adjusted_kl(m, &t.eta).unwrap() == expected,
                    "adjusted class is not -(J+J^T)/2"
                );
                count += 1;
            }
        }
        Ok(format!("{count} random J"))
    });
}

/// `η(ad_a, ad_b) = ab − ba`, with `a` recovered from the action matrices
/// by solving `a x − x a = D x` with explicit matrix products.
fn commutator_oracle(m: &CrossedModule, n: usize) -> Bilinear {
    let d = n * n;
    let elem = |k: usize| Matrix::from_fn(n, n, |r, c| if r * n + c == k { q(1) } else { q(0) });
    let flat = |a: &Matrix| -> Vector { (0..d).map(|k| a[(k / n, k % n)].clone()).collect() };
    // Column k: the map x ↦ E_k x − x E_k, flattened over the basis x.
    let cols: Vec<Vector> = (0..d)
        .map(|k| {
            let ek = elem(k);
            (0..d)
                .flat_map(|x| flat(&ek.mul(&elem(x)).sub(&elem(x).mul(&ek))))
                .collect()
        })
        .collect();
    let system = Matrix::from_columns(d * d, &cols);
    let pre: Vec<Matrix> = (0..m.g().dim())
        .map(|i| {
            let dm = m.alpha().matrix(i);
            let target: Vector = (0..d).flat_map(|x| dm.column(x)).collect();
            let a = solve_affine(&system, &target).particular.expect("inner derivation");
            Matrix::from_fn(n, n, |r, c| a[r * n + c].clone())
        })
        .collect();
    Bilinear::from_fn(m.g().dim(), d, |i, j| {
        flat(&pre[i].mul(&pre[j]).sub(&pre[j].mul(&pre[i])))
    })
}

#[test]
fn criterion_02_automorphism_module() {
    report(2, "automorphism module of matrix algebras", || {
        for n in [2, 3] {
            let m = matrix_aut(n);
            ensure!(
                m.f().dim() == 0 && m.a_dim() == 1,
                "n = {n}: f dim {}, a dim {}",
                m.f().dim(),
                m.a_dim()
            );
            let (sol, dim) = brute_force_adjustments(&m, None);
            ensure!(dim == 0, "n = {n}: solution set has dimension {dim}");
            let sol = sol.ok_or(format!("n = {n}: no solution"))?;
            ensure!(sol == commutator_oracle(&m, n), "n = {n}: solution is not ab - ba");
            ensure!(
                sol == matrix_aut_commutator_form(&m).unwrap(),
                "n = {n}: library form differs"
            );
        }
        Ok("n = 2, 3".into())
    });
}

#[test]
fn criterion_03_existence_round_trip() {
    report(3, "existence and construction round trip", || {
        let j = Matrix::from_fn(2, 2, |r, c| q((3 * r + c) as i64 - 2));
        let modules: Vec<(&str, CrossedModule)> = vec![
            ("abelian(2) x Q", product_module(&abelian(2), 1)),
            ("heisenberg3 x Q", heis_product()),
            ("so3 x Q", product_module(&so3(), 1)),
            ("torus", categorical_torus(&j).unwrap().module),
            ("matrix_aut(2)", matrix_aut(2)),
            ("Heisenberg extension", heisenberg_extension()),
            (
                "plane truncation",
                path_truncation_module(&abelian(2), &plane_form(), 1).unwrap(),
            ),
            (
                "so3 truncation",
                path_truncation_module(&so3(), &Bilinear::zero(3, 1), 1).unwrap(),
            ),
            ("cubic", cubic_module()),
        ];
        let mut constructed = 0;
        for (name, m) in &modules {
            let ex = adjustment_exists(m);
            let (oracle, _) = brute_force_adjustments(m, None);
            ensure!(
                ex.exists() == oracle.is_some(),
                "{name}: existence disagrees with the oracle"
            );
            if let Some(eta) = &oracle {
                ensure!(
                    check_adjustment(m, eta, None).unwrap().is_adjustment(),
                    "{name}: oracle solution fails"
                );
            }
            let u = ex.splitting.clone();
            if let Some((b, xi)) = &ex.witness {
                let adj = construct_adjustment(m, &u, b, xi).unwrap();
                ensure!(
                    check_adjustment(m, &adj.eta, Some(&adj.section)).unwrap().passed(),
                    "{name}: witness fails"
                );
                ensure!(&adjusted_kl(m, &adj.eta).unwrap() == b, "{name}: witness class");
                constructed += 1;
            }
            for b in invariant_forms(m.f(), m.a_dim()) {
                if let Some(xi) = primitive_for_form(m, &u, &b).unwrap() {
                    let adj = construct_adjustment(m, &u, &b, &xi).unwrap();
                    ensure!(
                        check_adjustment(m, &adj.eta, Some(&adj.section)).unwrap().passed(),
                        "{name}: form fails"
                    );
                    ensure!(
                        adjusted_kl(m, &adj.eta).unwrap() == b,
                        "{name}: adjusted class is not B"
                    );
                    constructed += 1;
                }
            }
        }
        ensure!(
            !adjustment_exists(&cubic_module()).exists(),
            "cubic module has an adjustment"
        );
        Ok(format!("{} modules, {constructed} constructions", modules.len()))
    });
}

#[test]
fn criterion_04_cohomology() {
    report(4, "Chevalley-Eilenberg cohomology", || {
        let dims: Vec<usize> = (0..=3).map(|k| cohomology(&so3(), 1, k).dim()).collect();
        ensure!(dims == [1, 0, 0, 1], "so3 cohomology dims {dims:?}");
        for n in 1..=4 {
            for k in 0..=n {
                let d = cohomology(&abelian(n), 1, k).dim();
                ensure!(d == binomial(n, k), "H^{k}(abelian({n})) has dim {d}");
            }
        }
        let mut r = rng(404);
        let mut samples = 0;
        for l in [so3(), sl2(), heisenberg3(), abelian(3), gl(2), filiform4()] {
            for k in 0..=l.dim() - 2 {
                for v in [1, 2] {
                    for _ in 0..32 {
                        let w = random_cochain(&mut r, k, l.dim(), v);
                        ensure!(w.differential(&l).differential(&l).is_zero(), "dd != 0 in degree {k}");
                        samples += 1;
                    }
                }
            }
        }
        Ok(format!("{samples} random cochains"))
    });
}

#[test]
fn criterion_05_butterfly_calculus() {
    report(5, "butterfly calculus", || {
        let mut r = rng(505);
        let hp = heis_product();
        let mut pool = invertible_instances();
        pool.extend(non_invertible_instances());
        for i in 0..64 {
            let (name, base) = if i % 4 == 3 {
                ("random twist", twist_data(&hp, &random_closed(&mut r, &hp).0).unwrap())
            } else {
                pool[i % pool.len()].clone()
            };
            let (d, _) = random_shift(&mut r, &base);
            ensure!(validate_cocycle_data(&d).passed(), "{name}: shifted data invalid");
            let rec = reconstruct(&d).unwrap();
            ensure!(
                extract(&rec.butterfly, &rec.canonical_section).unwrap() == d,
                "{name}: round trip"
            );
            let (e, gamma) = random_shift(&mut r, &d);
            let q2 = rec.canonical_section.add(&rec.butterfly.i2().mul(&gamma));
            ensure!(extract(&rec.butterfly, &q2).unwrap() == e, "{name}: shifted section");
            let found = cocycle_equivalent(&d, &e)
                .unwrap()
                .ok_or(format!("{name}: shift not recovered"))?;
            ensure!(
                shift_section(&d, &found).unwrap() == e,
                "{name}: recovered shift is wrong"
            );
        }
        for (name, d) in invertible_instances() {
            ensure!(is_invertible(&d).unwrap(), "{name}: not invertible");
            ensure!(
                reconstruct(&d).unwrap().butterfly.is_invertible(),
                "{name}: butterfly not invertible"
            );
        }
        for (name, d) in non_invertible_instances() {
            ensure!(!is_invertible(&d).unwrap(), "{name}: invertible");
            ensure!(
                !reconstruct(&d).unwrap().butterfly.is_invertible(),
                "{name}: butterfly invertible"
            );
        }
        Ok("64 instances".into())
    });
}

#[test]
fn criterion_06_kl_invariance() {
    report(6, "Kassel-Loday invariance", || {
        let mut r = rng(606);
        let mut checked = 0;
        for (name, d) in invertible_instances() {
            for d in [d.clone(), random_shift(&mut r, &d).0] {
                let (m1, m2) = (d.source(), d.target());
                let report = kl_transfer_check(&d, &m1.default_splitting(), &m2.default_splitting()).unwrap();
                ensure!(report.coboundary_identity, "{name}: coboundary identity fails");
                ensure!(report.pulled_class == report.pushed_class, "{name}: classes differ");
                checked += 1;
            }
        }
        Ok(format!("{checked} butterflies"))
    });
}

#[test]
fn criterion_07_classification() {
    report(7, "classification of self-butterflies", || {
        let mut r = rng(707);
        for m in [heis_product(), product_module(&heisenberg3(), 2)] {
            let h2 = cohomology(m.f(), m.a_dim(), 2);
            ensure!(h2.dim() > 0, "H2 vanishes");
            let mut previous: Option<(AltCochain, Vector)> = None;
            for _ in 0..16 {
                let (xi, coords) = random_closed(&mut r, &m);
                let d = twist_data(&m, &xi).unwrap();
                let class = classify_self_butterfly(&random_shift(&mut r, &d).0).unwrap();
                ensure!(class.coords == coords, "class of the twist is not [xi]");
                let trivial = vis_zero(&coords);
                let equivalent = cocycle_equivalent(&identity_data(&m), &d).unwrap().is_some();
                ensure!(
                    equivalent == trivial,
                    "equivalence to the identity disagrees with [xi] = 0"
                );
                if let Some((zeta, b)) = previous.take() {
                    let both = compose(&d, &twist_data(&m, &zeta).unwrap()).unwrap();
                    ensure!(
                        classify_self_butterfly(&both).unwrap().coords == vadd(&coords, &b),
                        "not additive"
                    );
                }
                previous = Some((xi, coords));
            }
            for _ in 0..4 {
                let exact = random_cochain(&mut r, 1, m.f().dim(), m.a_dim()).differential(m.f());
                let d = twist_data(&m, &exact).unwrap();
                ensure!(
                    vis_zero(&classify_self_butterfly(&d).unwrap().coords),
                    "exact twist has a class"
                );
                ensure!(
                    cocycle_equivalent(&identity_data(&m), &d).unwrap().is_some(),
                    "exact twist not trivial"
                );
            }
        }
        Ok("32 random classes".into())
    });
}

#[test]
fn criterion_08_transfer() {
    report(8, "transfer of adapted adjustments", || {
        let mut transfers = 0;
        for (name, d) in invertible_instances() {
            if !adjustment_exists(d.source()).exists() {
                ensure!(
                    !adjustment_exists(d.target()).exists(),
                    "{name}: target has adjustments"
                );
                continue;
            }
            let (s1, s2, d) = neat(&d);
            let eta1 = classify_adjustments(d.source(), &s1).unwrap().base.eta;
            let out = transfer_adjustment(&d, &s1, &s2, &eta1).unwrap();
            ensure!(
                check_adjustment(d.target(), &out.eta, Some(&s2)).unwrap().passed(),
                "{name}: output fails"
            );
            ensure!(transfer_criterion(&d, &eta1, &out.eta), "{name}: criterion fails");
            let inv = reconstruct(&d).unwrap().butterfly.inverse().unwrap();
            let q = neat_section_adjust(&inv, &inv.section(), &s2, &s1).unwrap();
            let back = transfer_adjustment(&extract(&inv, &q).unwrap(), &s2, &s1, &out.eta).unwrap();
            let from = AdaptedAdjustment {
                section: s1.clone(),
                eta: eta1,
            };
            ensure!(
                solve_morphism(d.source(), &from, &back).unwrap().particular.is_some(),
                "{name}: round trip"
            );
            transfers += 1;
        }
        for m in [heisenberg_extension(), matrix_aut(2), torus(8)] {
            let s = m.lift().clone();
            let eta = classify_adjustments(&m, &s).unwrap().base.eta;
            ensure!(
                transfer_adjustment(&identity_data(&m), &s, &s, &eta).unwrap().eta == eta,
                "identity transfer"
            );
        }
        let m = heis_product();
        let s = m.lift().clone();
        let eta = classify_adjustments(&m, &s).unwrap().base.eta;
        let mut r = rng(808);
        for _ in 0..4 {
            let (xi, _) = random_closed(&mut r, &m);
            let d = twist_data(&m, &xi).unwrap();
            let base = transfer_adjustment(&d, &s, &s, &eta).unwrap().eta;
            ensure!(
                base == eta.add(&lift_from_homotopy(&m, &xi.to_bilinear())),
                "twist does not add p*xi"
            );
            let c = random_matrix(&mut r, m.a_dim(), m.f().dim());
            let free = random_matrix(&mut r, m.h().dim(), m.g().dim());
            let gamma = m.iota().mul(&c).mul(m.p()).add(&free.mul(&m.rho_of_section(&s)));
            let moved = transfer_adjustment(&shift_section(&d, &gamma).unwrap(), &s, &s, &eta)
                .unwrap()
                .eta;
            let dc = AltCochain::from_matrix(&c).differential(m.f()).to_bilinear();
            ensure!(
                moved.sub(&base) == lift_from_homotopy(&m, &dc),
                "section dependence formula fails"
            );
        }
        Ok(format!("{transfers} transfers and round trips"))
    });
}

#[test]
fn criterion_09_groupoid() {
    report(9, "groupoid of adapted adjustments", || {
        let modules: Vec<(&str, CrossedModule)> = vec![
            ("abelian(2) x Q", product_module(&abelian(2), 1)),
            ("heisenberg3 x Q", heis_product()),
            ("heisenberg3 x Q^2", product_module(&heisenberg3(), 2)),
            ("so3 x Q", product_module(&so3(), 1)),
            ("torus", torus(9)),
            ("matrix_aut(2)", matrix_aut(2)),
            ("Heisenberg extension", heisenberg_extension()),
            ("identity on heisenberg3", identity_module(&heisenberg3())),
            (
                "plane truncation",
                path_truncation_module(&abelian(2), &plane_form(), 2).unwrap(),
            ),
            (
                "so3 truncation",
                path_truncation_module(&so3(), &Bilinear::zero(3, 1), 1).unwrap(),
            ),
        ];
        for (name, m) in &modules {
            let s = m.lift().clone();
            let base = classify_adjustments(m, &s).unwrap().base;
            let sol = solve_morphism(m, &base, &base).unwrap();
            ensure!(sol.particular.is_some(), "{name}: no identity morphism");
            let expected = abelianization_dim(m.f()) * m.a_dim();
            ensure!(
                sol.homogeneous.len() == expected,
                "{name}: {} automorphisms, expected {expected}",
                sol.homogeneous.len()
            );
        }
        let mut r = rng(909);
        for n in 1..=3 {
            let t = torus_n(&mut r, n);
            let j = random_integral(&mut r, n);
            let b = form_of(&j.add(&j.transpose()));
            match adjustment_pi0_fibre(&t, t.lift(), &b).unwrap() {
                Pi0Fibre::Affine { base, h2 } => {
                    ensure!(h2.dim() == binomial(n, 2), "torus fibre dim {}", h2.dim());
                    ensure!(adjusted_kl(&t, &base.eta).unwrap() == b, "torus fibre base class");
                }
                Pi0Fibre::Empty { .. } => return Err(format!("torus fibre over B is empty for n = {n}")),
            }
        }
        let so3_trunc = path_truncation_module(&so3(), &Bilinear::zero(3, 1), 1).unwrap();
        let s = so3_trunc.lift().clone();
        match adjustment_pi0_fibre(&so3_trunc, &s, &identity_form(3)).unwrap() {
            Pi0Fibre::Empty { difference } => ensure!(!vis_zero(&difference), "empty fibre with zero difference"),
            Pi0Fibre::Affine { .. } => {
                return Err("so3 truncation fibre over the Killing-type form is not empty".into())
            }
        }
        let fibre = adjustment_pi0_fibre(&so3_trunc, &s, &Bilinear::zero(3, 1)).unwrap();
        ensure!(
            fibre.dim() == Some(0),
            "so3 truncation fibre over 0 has dim {:?}",
            fibre.dim()
        );
        let c = cubic_module();
        ensure!(
            matches!(
                adjustment_pi0_fibre(&c, c.lift(), &Bilinear::zero(3, 1)).unwrap(),
                Pi0Fibre::Empty { .. }
            ),
            "cubic fibre is not empty"
        );
        Ok(format!(
            "{} modules; nonzero so3 class not realizable in finite dimensions",
            modules.len()
        ))
    });
}

fn torus_n<R: Rng>(rng: &mut R, n: usize) -> CrossedModule {
    categorical_torus(&random_integral(rng, n)).unwrap().module
}

#[test]
fn criterion_10_path_model() {
    report(10, "polynomial path model", || {
        let mut r = rng(1010);
        let models = [
            PathCrossedModule::new(abelian(2), plane_form()).unwrap(),
            PathCrossedModule::new(so3(), identity_form(3)).unwrap(),
        ];
        for m in &models {
            let n = m.f().dim();
            let sections = [
                PathSection::canonical(n),
                PathSection::from_psi(n, &[q(0), q(0), q(3), q(-2)]).unwrap(),
            ];
            let adjustments: Vec<PathAdjustment> = sections.iter().map(|s| path_adjustment(m, s).unwrap()).collect();
            for i in 0..128 {
                let degree = 1 + i % 6;
                let f = PolyPath::random_based(&mut r, n, degree);
                let g = PolyPath::random_based(&mut r, n, degree);
                let k = PolyPath::random_based(&mut r, n, degree);
                ensure!(
                    vis_zero(&m.t_condition_defect(&f, &g, &k)),
                    "eta tilde fails the T-condition"
                );
                let sym = vadd(&m.eta_tilde(&f, &g), &m.eta_tilde(&g, &f));
                ensure!(
                    sym == vscale(&q(-2), &m.form().eval(&f.end(), &g.end())),
                    "symmetric part law fails"
                );
                let x = PathCMElement::new(PolyPath::random_loop(&mut r, n, degree), random_vector(&mut r, 1)).unwrap();
                let y = PathCMElement::new(PolyPath::random_loop(&mut r, n, degree), random_vector(&mut r, 1)).unwrap();
                for (s, adj) in sections.iter().zip(&adjustments) {
                    let check = adj.check([&f, &g, &k], &x, &y);
                    ensure!(check.passed(), "adjustment identities fail: {check:?}");
                    let value = m.kl_cocycle_value(s, &f.end(), &g.end(), &k.end());
                    ensure!(value.loop_part().is_zero(), "KL cocycle is not central");
                }
                let s0 = &sections[0];
                ensure!(
                    m.omega(s0, &f, &g) == m.omega_closed_form(s0, &f, &g),
                    "omega closed form fails"
                );
            }
        }
        Ok("128 samples per algebra".into())
    });
}

#[test]
fn criterion_11_nilpotent_integration() {
    report(11, "nilpotent integration", || {
        let mut r = rng(1111);
        let l = heisenberg3();
        // Two-step nilpotent: Ad_z x = x + [z, x] and z1 * z2 = z1 + z2 + [z1, z2] / 2.
        let ad = |z: &[Q], x: &[Q]| vadd(x, &l.bracket(z, x));
        let product = |a: &[Q], b: &[Q]| vadd(&vadd(a, b), &vscale(&qf(1, 2), &l.bracket(a, b)));
        let mut samples = 0;
        for a_dim in [1, 2] {
            let m = product_module(&l, a_dim);
            let u = random_matrix(&mut r, a_dim, 3);
            let exact = AltCochain::from_matrix(&u).differential(m.g()).neg().to_bilinear();
            ensure!(
                check_adjustment(&m, &exact, None).unwrap().is_adjustment(),
                "-du is not an adjustment"
            );
            let space = classify_adjustments(&m, m.lift()).unwrap();
            let coeffs = random_vector(&mut r, space.dim());
            let general = space.point(&coeffs);
            for _ in 0..16 {
                let (z1, z2, x) = (
                    random_vector(&mut r, 3),
                    random_vector(&mut r, 3),
                    random_vector(&mut r, 3),
                );
                ensure!(
                    bch(&l, &z1, &z2).unwrap() == product(&z1, &z2),
                    "BCH differs from the closed form"
                );
                for eta in [&exact, &general] {
                    let kappa = |z: &[Q], y: &[Q]| integrate_nilpotent(&m, eta, z, y, None).unwrap();
                    let left = kappa(&product(&z1, &z2), &x);
                    let right = vadd(&kappa(&z1, &ad(&z2, &x)), &kappa(&z2, &x));
                    ensure!(left == right, "cocycle law fails");
                }
                let kappa = integrate_nilpotent(&m, &exact, &z1, &x, None).unwrap();
                ensure!(
                    kappa == u.apply(&vsub(&ad(&z1, &x), &x)),
                    "closed form u(Ad_g X - X) fails"
                );
                samples += 1;
            }
        }
        Ok(format!("{samples} samples"))
    });
}

#[test]
fn criterion_12_adjusted_classification() {
    report(12, "adjusted classification on path truncations", || {
        let mut r = rng(1212);
        let cases = [
            (abelian(2), plane_form()),
            (heisenberg3(), heisenberg_form()),
            (so3(), Bilinear::zero(3, 1)),
        ];
        for (f, b) in &cases {
            let hi = path_truncation_module(f, b, 2).unwrap();
            let lo = path_truncation_module(f, b, 1).unwrap();
            let d = connect(&hi, &lo).ok_or("connect_same_kl found no data")?;
            let maps = homotopy_maps(&d).unwrap();
            ensure!(
                maps.pi0 == Matrix::identity(f.dim()) && maps.pi1 == Matrix::identity(1),
                "homotopy maps"
            );
            let (s1, s2, d) = neat(&d);
            let (fib1, fib2) = (
                adjustment_pi0_fibre(&hi, &s1, b).unwrap(),
                adjustment_pi0_fibre(&lo, &s2, b).unwrap(),
            );
            let (Pi0Fibre::Affine { base: base1, h2 }, Pi0Fibre::Affine { base: base2, .. }) = (fib1, fib2) else {
                return Err("fibre over B is empty".into());
            };
            // cw(KL^adj) = KL on both sides.
            for (m, base) in [(&hi, &base1), (&lo, &base2)] {
                let class = adjusted_kl(m, &base.eta).unwrap();
                ensure!(&class == b, "adjusted class is not B");
                let kl = m.kl_class();
                let cw = kl.space.class_of(&chern_weil(m.f(), &class).unwrap()).unwrap();
                ensure!(cw == kl.coords, "[cw(B)] differs from the Kassel-Loday class");
            }
            let moved = transfer_adjustment(&d, &s1, &s2, &base1.eta).unwrap();
            ensure!(
                &adjusted_kl(&lo, &moved.eta).unwrap() == b,
                "transfer changes the adjusted class"
            );
            let offset = fibre_coordinates(&lo, &base2, &moved, &h2).unwrap();
            for _ in 0..3 {
                let (xi, coords) = random_closed(&mut r, &hi);
                let shifted = shift_by_cocycle(&hi, &base1, &xi);
                let out = transfer_adjustment(&d, &s1, &s2, &shifted.eta).unwrap();
                let got = fibre_coordinates(&lo, &base2, &out, &h2).unwrap();
                ensure!(
                    got == vadd(&offset, &coords),
                    "transfer is not a translation on the fibre"
                );
            }
            let inv = reconstruct(&d).unwrap().butterfly.inverse().unwrap();
            let q = neat_section_adjust(&inv, &inv.section(), &s2, &s1).unwrap();
            let back = transfer_adjustment(&extract(&inv, &q).unwrap(), &s2, &s1, &moved.eta).unwrap();
            ensure!(
                solve_morphism(&hi, &base1, &back).unwrap().particular.is_some(),
                "round trip not isomorphic"
            );
        }
        Ok(format!("{} instances", cases.len()))
    });
}
