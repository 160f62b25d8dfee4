use crossmod_lie::*;
use crossmod_linalg::*;
use proptest::prelude::*;

fn v(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| q(x)).collect()
}

#[test]
fn validation_examples() {
    assert!(abelian(3).validate().is_ok());
    assert!(so3().validate().is_ok());
    assert!(sl2().validate().is_ok());
    assert!(gl(2).validate().is_ok());
    assert!(heisenberg3().validate().is_ok());
    // [e1,e2]=e1, [e1,e3]=e1, [e2,e3]=e1 is a genuine Lie algebra: its
    // Jacobiator on (e1,e2,e3) is 0 + e1 − e1 = 0.
    let ok = LieAlgebra::from_brackets(3, &[(0, 1, 0, q(1)), (0, 2, 0, q(1)), (1, 2, 0, q(1))]).unwrap();
    assert!(ok.validate().is_ok());
    // [e1,e2]=e2, [e2,e3]=e1: Jacobiator on (e1,e2,e3) is [e3,[e1,e2]] = −e1.
    let bad = LieAlgebra::from_brackets(3, &[(0, 1, 1, q(1)), (1, 2, 0, q(1))]).unwrap();
    assert_eq!(bad.validate(), Err(LieError::Jacobi { i: 0, j: 1, k: 2 }));
    assert_eq!(bad.jacobiator(0, 1, 2), v(&[-1, 0, 0]));
}

#[test]
fn bracket_examples() {
    let s = so3();
    assert_eq!(s.bracket(&v(&[1, 0, 0]), &v(&[0, 1, 0])), v(&[0, 0, 1]));
    let h = heisenberg3();
    assert_eq!(h.bracket(&v(&[1, 0, 0]), &v(&[0, 1, 0])), v(&[0, 0, 1]));
    let x = v(&[2, -1, 5]);
    assert_eq!(s.bracket(&x, &x), v(&[0, 0, 0]));
    assert!(s.bracket_vectors(&v(&[1, 0]), &x).is_err());
}

#[test]
fn sl2_structure_constants() {
    let s = sl2();
    let (h, e, f) = (unit(3, 0), unit(3, 1), unit(3, 2));
    assert_eq!(s.bracket(&h, &e), vscale(&q(2), &e));
    assert_eq!(s.bracket(&h, &f), vscale(&q(-2), &f));
    assert_eq!(s.bracket(&e, &f), h);
}

#[test]
fn gl2_commutators() {
    let g = gl(2);
    assert_eq!(g.dim(), 4);
    // [E12, E21] = E11 − E22
    assert_eq!(g.bracket(&unit(4, 1), &unit(4, 2)), v(&[1, 0, 0, -1]));
    assert_eq!(standard_algebra("gl(2)").unwrap(), g);
    assert_eq!(standard_algebra("abelian(2)").unwrap(), abelian(2));
    assert!(standard_algebra("e8").is_err());
}

#[test]
fn derivation_examples() {
    for n in 1..=3 {
        let (der, emb) = derivation_algebra(&abelian(n));
        assert_eq!(der.dim(), n * n);
        assert_eq!(der, gl(n));
        assert_eq!(emb, Matrix::identity(n * n));
    }
    let (der, _) = matrix_algebra(2).derivations();
    assert_eq!(der.dim(), 3);
    assert!(der.validate().is_ok());
    // Every derivation of the 2×2 matrix algebra is inner: its image in
    // gl(4) is spanned by the commutators [E_ab, ·].
    let (_, emb) = matrix_algebra(2).derivations();
    let gl2 = gl(2);
    let inner: Vec<Vector> = (0..4)
        .map(|i| {
            let ad = gl2.ad_basis(i);
            (0..16).map(|k| ad[(k / 4, k % 4)].clone()).collect()
        })
        .collect();
    assert_eq!(image(&emb), Subspace::span(16, &inner));

    let (der, emb) = derivation_algebra(&so3());
    assert_eq!(der.dim(), 3);
    let s = so3();
    let inner: Vec<Vector> = (0..3)
        .map(|i| {
            let ad = s.ad_basis(i);
            (0..9).map(|k| ad[(k / 3, k % 3)].clone()).collect()
        })
        .collect();
    assert_eq!(image(&emb), Subspace::span(9, &inner));
}

#[test]
fn adjoint_action_is_valid() {
    for l in [so3(), sl2(), heisenberg3(), gl(2)] {
        assert!(ActionTensor::adjoint(&l).validate(&l, &l).is_ok());
    }
    let bad = ActionTensor::from_matrices(3, vec![Matrix::identity(3); 3]).unwrap();
    assert!(bad.validate(&so3(), &so3()).is_err());
}

#[test]
fn nilpotency() {
    assert_eq!(heisenberg3().nilpotency_class(), Some(2));
    assert_eq!(abelian(2).nilpotency_class(), Some(1));
    assert_eq!(so3().nilpotency_class(), None);
    assert_eq!(heisenberg3().center(), Subspace::span(3, &[v(&[0, 0, 1])]));
}

#[test]
fn bilinear_basics() {
    let s = so3();
    let b = Bilinear::from_fn(3, 3, |i, j| s.bracket_basis(i, j).to_vec());
    assert!(b.is_antisymmetric());
    assert_eq!(b.antisymmetric_part(), b);
    assert!(b.symmetric_part().is_zero());
    let x = v(&[1, 2, 3]);
    let y = v(&[-1, 0, 4]);
    assert_eq!(b.eval(&x, &y), s.bracket(&x, &y));
}

fn algebras() -> Vec<LieAlgebra> {
    vec![so3(), sl2(), heisenberg3(), gl(2), abelian(3)]
}

fn vec_strategy(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(-4i64..5, n).prop_map(|xs| xs.into_iter().map(q).collect())
}

proptest! {
    #[test]
    fn bracket_identities(idx in 0usize..5, seed in prop::collection::vec(-4i64..5, 16)) {
        let l = &algebras()[idx];
        let n = l.dim();
        let x: Vector = seed[..n].iter().map(|&a| q(a)).collect();
        let y: Vector = seed[n..2 * n].iter().map(|&a| q(a)).collect();
        let z: Vector = seed[2 * n..].iter().cycle().take(n).map(|&a| q(a)).collect();
        prop_assert_eq!(l.bracket(&x, &y), vneg(&l.bracket(&y, &x)));
        let jac = vadd(
            &vadd(&l.bracket(&x, &l.bracket(&y, &z)), &l.bracket(&y, &l.bracket(&z, &x))),
            &l.bracket(&z, &l.bracket(&x, &y)),
        );
        prop_assert!(vis_zero(&jac));
        let xz = vadd(&x, &vscale(&q(3), &z));
        prop_assert_eq!(
            l.bracket(&xz, &y),
            vadd(&l.bracket(&x, &y), &vscale(&q(3), &l.bracket(&z, &y)))
        );
    }

    #[test]
    fn change_of_basis_keeps_validity(entries in vec_strategy(9)) {
        let c = Matrix::from_fn(3, 3, |i, j| &entries[i * 3 + j] + if i == j { q(7) } else { q(0) });
        if c.inverse().is_some() {
            let l2 = so3().change_basis(&c).unwrap();
            prop_assert!(l2.validate().is_ok());
            prop_assert!(so3().is_homomorphism_to(&so3(), &Matrix::identity(3)));
            // c is an isomorphism from the new presentation to the old.
            prop_assert!(l2.is_homomorphism_to(&so3(), &c));
        }
    }
}
