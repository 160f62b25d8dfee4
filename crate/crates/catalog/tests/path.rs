//! Exact checks of the polynomial path module.

use crossmod_catalog::path::*;
use crossmod_lie::{abelian, so3, Bilinear, LieAlgebra};
use crossmod_linalg::{q, qf, unit, vadd, vscale, vsub, vzero, Matrix, Vector, Q};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn identity_form(n: usize) -> Bilinear {
    Bilinear::from_fn(n, 1, |i, j| vec![if i == j { q(1) } else { q(0) }])
}

fn so3_module() -> PathCrossedModule {
    PathCrossedModule::new(so3(), identity_form(3)).unwrap()
}

fn plane_module() -> PathCrossedModule {
    let b = Bilinear::from_fn(2, 1, |i, j| vec![if i == j { q(i as i64 + 1) } else { q(1) }]);
    PathCrossedModule::new(abelian(2), b).unwrap()
}

fn modules() -> Vec<PathCrossedModule> {
    vec![so3_module(), plane_module()]
}

fn sections(n: usize) -> Vec<PathSection> {
    let general = PathSection::new(vec![
        Matrix::zeros(n, n),
        Matrix::from_fn(n, n, |r, c| {
            if r == c {
                q(2)
            } else if c == 0 {
                q(1)
            } else {
                q(0)
            }
        }),
        Matrix::from_fn(n, n, |r, c| if r == c || c == 0 { q(-1) } else { q(0) }),
    ])
    .unwrap();
    vec![
        PathSection::canonical(n),
        PathSection::from_psi(n, &[q(0), q(0), q(3), q(-2)]).unwrap(),
        PathSection::from_psi(n, &[q(0), q(0), q(1)]).unwrap(),
        general,
    ]
}

fn element(m: &PathCrossedModule, rng: &mut ChaCha8Rng, degree: usize) -> PathCMElement {
    let lp = PolyPath::random_loop(rng, m.f().dim(), degree);
    let c = PolyPath::random_based(rng, m.a_dim(), 1).end();
    PathCMElement::new(lp, c).unwrap()
}

fn cw(l: &LieAlgebra, b: &Bilinear, x: &[Q], y: &[Q], z: &[Q]) -> Vector {
    b.eval(&l.bracket(x, y), z)
}

fn delta2(l: &LieAlgebra, th: impl Fn(&[Q], &[Q]) -> Vector, x: &[Q], y: &[Q], z: &[Q]) -> Vector {
    let a = th(&l.bracket(x, y), z);
    let b = th(&l.bracket(x, z), y);
    let c = th(&l.bracket(y, z), x);
    vsub(&vsub(&b, &a), &c)
}

#[test]
fn so3_bracket_of_linear_paths() {
    let l = so3();
    let f = PolyPath::monomial(1, &unit(3, 0));
    let g = PolyPath::monomial(1, &unit(3, 1));
    assert_eq!(path_bracket(&l, &f, &g), PolyPath::monomial(2, &unit(3, 2)));
    assert!(path_bracket(&l, &f, &f).is_zero());
    let ab = abelian(2);
    let p = PolyPath::new(2, vec![vzero(2), vec![q(1), q(2)], vec![q(3), q(-1)]]).unwrap();
    assert!(path_bracket(&ab, &p, &p.derivative()).is_zero());
}

#[test]
fn eta_tilde_monomial_values() {
    let b = identity_form(1);
    let t = PolyPath::monomial(1, &[q(1)]);
    assert_eq!(eta_tilde(&b, &t, &t), vec![q(-1)]);
    // −2 ∫ 2t · t dt = −4/3 and −2 ∫ 1 · t² dt = −2/3.
    let t2 = PolyPath::monomial(2, &[q(1)]);
    assert_eq!(eta_tilde(&b, &t2, &t), vec![qf(-4, 3)]);
    assert_eq!(eta_tilde(&b, &t, &t2), vec![qf(-2, 3)]);
    let e1 = PolyPath::monomial(1, &unit(3, 0));
    let e2 = PolyPath::monomial(1, &unit(3, 1));
    assert_eq!(eta_tilde(&identity_form(3), &e1, &e2), vec![q(0)]);
}

#[test]
fn path_adjustment_examples() {
    let line = PathCrossedModule::new(abelian(1), identity_form(1)).unwrap();
    let adj = path_adjustment(&line, &PathSection::canonical(1)).unwrap();
    let t = PolyPath::monomial(1, &[q(1)]);
    let v = adj.eval(&t, &t);
    assert!(v.loop_part().is_zero());
    assert_eq!(v.central(), &[q(-1)]);

    let m = so3_module();
    let s = PathSection::canonical(3);
    let adj = path_adjustment(&m, &s).unwrap();
    let e1 = PolyPath::monomial(1, &unit(3, 0));
    let e2 = PolyPath::monomial(1, &unit(3, 1));
    let v = adj.eval(&e1, &e2);
    let expected = PolyPath::monomial(2, &unit(3, 2)).sub(&s.apply(&unit(3, 2)));
    assert_eq!(v.loop_part(), &expected);
    assert_eq!(v.central(), &[q(0)]);
}

#[test]
fn loop_inputs_give_plain_brackets() {
    let m = so3_module();
    let adj = path_adjustment(&m, &PathSection::canonical(3)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = PolyPath::random_loop(&mut rng, 3, 4);
    let g = PolyPath::random_loop(&mut rng, 3, 4);
    assert_eq!(adj.eval(&f, &g).loop_part(), &m.bracket_g(&f, &g));
}

#[test]
fn invalid_sections_and_paths_are_rejected() {
    assert!(PathSection::from_psi(2, &[q(1), q(0)]).is_err());
    assert!(PathSection::from_psi(2, &[q(0), q(2)]).is_err());
    assert!(PathSection::from_psi(2, &[q(0), q(0), q(1)]).is_ok());
    let not_loop = PolyPath::monomial(1, &[q(1), q(0)]);
    assert!(PathCMElement::new(not_loop, vec![q(0)]).is_err());
    let bad = Bilinear::from_fn(3, 1, |i, j| vec![if i == 0 && j == 0 { q(1) } else { q(0) }]);
    assert!(PathCrossedModule::new(so3(), bad).is_err());
}

#[test]
fn centrality_of_the_action() {
    let m = so3_module();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = PolyPath::random_based(&mut rng, 3, 5);
    let z = m.central_element(vec![q(5)]);
    let out = m.act(&f, &z);
    assert!(out.loop_part().is_zero());
    assert_eq!(out.central(), &[q(0)]);
}

#[test]
fn canonical_omega_is_antisymmetric_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for m in modules() {
        let n = m.f().dim();
        let s = PathSection::canonical(n);
        for _ in 0..16 {
            let f = PolyPath::random_based(&mut rng, n, 5);
            let g = PolyPath::random_based(&mut rng, n, 5);
            let w = m.omega(&s, &f, &g);
            let antisym = vscale(&qf(1, 2), &vsub(&m.eta_tilde(&f, &g), &m.eta_tilde(&g, &f)));
            assert_eq!(w.loop_part(), &s.rho(&m.bracket_g(&f, &g)));
            assert_eq!(w.central(), antisym.as_slice());
        }
    }
}

#[test]
fn theta_vanishes_for_scalar_sections() {
    let m = so3_module();
    let s = PathSection::from_psi(3, &[q(0), q(0), q(3), q(-2)]).unwrap();
    for i in 0..3 {
        for j in 0..3 {
            assert_eq!(m.theta(&s, &unit(3, i), &unit(3, j)), vec![q(0)]);
        }
    }
    let general = &sections(3)[3];
    let nonzero = (0..3).any(|i| (0..3).any(|j| m.theta(general, &unit(3, i), &unit(3, j)) != vec![q(0)]));
    assert!(nonzero);
}

fn sample_check(seed: u64, degree: usize) -> Result<(), TestCaseError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for m in modules() {
        let (l, n) = (m.f().clone(), m.f().dim());
        let (f, g, k) = (
            PolyPath::random_based(&mut rng, n, degree),
            PolyPath::random_based(&mut rng, n, degree),
            PolyPath::random_based(&mut rng, n, degree),
        );
        let (x, y, z) = (
            element(&m, &mut rng, degree),
            element(&m, &mut rng, degree),
            element(&m, &mut rng, degree),
        );
        prop_assert!(m.peiffer_holds(&x, &y));
        prop_assert!(m.equivariance_holds(&f, &y));
        prop_assert!(m.derivation_holds(&f, &x, &y));
        prop_assert!(m.homomorphism_holds(&f, &g, &y));
        prop_assert!(m.jacobi_holds(&x, &y, &z));
        prop_assert!(m.t_condition_defect(&f, &g, &k).iter().all(|c| *c == q(0)));
        let sym = vadd(&m.eta_tilde(&f, &g), &m.eta_tilde(&g, &f));
        prop_assert_eq!(sym, vscale(&q(-2), &m.form().eval(&f.end(), &g.end())));
        let (lx, ly) = (x.loop_part(), y.loop_part());
        prop_assert_eq!(m.eta_tilde(lx, ly), vscale(&q(-1), &m.eta_tilde(ly, lx)));
        for s in sections(n) {
            let adj = path_adjustment(&m, &s).unwrap();
            let report = adj.check([&f, &g, &k], &x, &y);
            prop_assert!(report.passed(), "{:?}", report);
            prop_assert_eq!(m.omega(&s, &f, &g), m.omega_closed_form(&s, &f, &g));
            let (a, b, c) = (f.end(), g.end(), k.end());
            let value = m.kl_cocycle_value(&s, &a, &b, &c);
            prop_assert!(value.loop_part().is_zero());
            let d_theta = delta2(&l, |p, r| m.theta(&s, p, r), &a, &b, &c);
            prop_assert_eq!(value.central().to_vec(), vadd(&cw(&l, m.form(), &a, &b, &c), &d_theta));
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn path_identities_hold_on_samples(seed in any::<u64>(), degree in 1usize..=5) {
        sample_check(seed, degree)?;
    }
}
