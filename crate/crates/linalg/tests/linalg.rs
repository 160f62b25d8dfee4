use crossmod_linalg::*;
use proptest::prelude::*;

fn m(rows: &[&[i64]]) -> Matrix {
    let cols = rows.first().map_or(0, |r| r.len());
    let rows: Vec<Vector> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    Matrix::from_rows(cols, &rows).unwrap()
}

fn v(xs: &[i64]) -> Vector {
    xs.iter().map(|&x| q(x)).collect()
}

#[test]
fn kernel_examples() {
    assert_eq!(kernel(&Matrix::zeros(2, 2)), Subspace::full(2));
    assert_eq!(kernel(&Matrix::identity(3)), Subspace::zero(3));
    let k = kernel(&m(&[&[1, 2], &[2, 4]]));
    assert_eq!(k, Subspace::span(2, &[v(&[2, -1])]));
    assert_eq!(k.dim(), 1);
}

#[test]
fn image_examples() {
    assert_eq!(image(&Matrix::identity(3)), Subspace::full(3));
    assert_eq!(image(&Matrix::zeros(2, 3)), Subspace::zero(2));
    assert_eq!(image(&m(&[&[1, 2], &[2, 4]])), Subspace::span(2, &[v(&[1, 2])]));
}

#[test]
fn complement_examples() {
    assert_eq!(complement(&Subspace::zero(2)), Subspace::full(2));
    assert_eq!(complement(&Subspace::full(2)), Subspace::zero(2));
    let s = Subspace::span(2, &[v(&[1, 1])]);
    assert_eq!(complement(&s), Subspace::span(2, &[v(&[0, 1])]));
}

#[test]
fn solve_affine_examples() {
    let sol = solve_affine(&Matrix::zeros(2, 2), &v(&[0, 0]));
    assert_eq!(sol.particular, Some(v(&[0, 0])));
    assert_eq!(sol.homogeneous, Subspace::full(2));

    let b = vec![qf(3, 7), q(-2), q(5)];
    let sol = solve_affine(&Matrix::identity(3), &b);
    assert_eq!(sol.particular, Some(b));
    assert_eq!(sol.homogeneous, Subspace::zero(3));

    let sol = solve_affine(&m(&[&[1, 1]]), &v(&[2]));
    assert_eq!(sol.particular, Some(v(&[2, 0])));
    assert_eq!(sol.homogeneous, Subspace::span(2, &[v(&[1, -1])]));

    let sol = solve_affine(&m(&[&[1, 1], &[1, 1]]), &v(&[1, 2]));
    assert!(!sol.is_consistent());
}

#[test]
fn quotient_data_examples() {
    let (p, l) = quotient_data(3, &Subspace::zero(3));
    assert_eq!(p, Matrix::identity(3));
    assert_eq!(l, Matrix::identity(3));

    let (p, l) = quotient_data(2, &Subspace::full(2));
    assert_eq!((p.rows(), l.cols()), (0, 0));

    let s = Subspace::span(2, &[v(&[1, 1])]);
    let (p, l) = quotient_data(2, &s);
    assert_eq!(p.mul(&l), Matrix::identity(1));
    assert_eq!(kernel(&p), s);
    assert!(complement(&s).contains_subspace(&image(&l)));
}

#[test]
fn intersection_and_sum() {
    let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
    let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
    assert_eq!(a.intersection(&b), Subspace::span(3, &[v(&[0, 1, 0])]));
    assert_eq!(a.sum(&b), Subspace::full(3));
}

#[test]
fn inverse_of_small_matrix() {
    let a = m(&[&[2, 1], &[1, 1]]);
    let inv = a.inverse().unwrap();
    assert_eq!(a.mul(&inv), Matrix::identity(2));
    assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
}

fn small_matrix() -> impl Strategy<Value = Matrix> {
    (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
        prop::collection::vec(-3i64..4, r * c).prop_map(move |xs| Matrix::from_fn(r, c, |i, j| q(xs[i * c + j])))
    })
}

proptest! {
    #[test]
    fn rank_nullity(a in small_matrix()) {
        prop_assert_eq!(a.rank() + kernel(&a).dim(), a.cols());
        prop_assert_eq!(image(&a).dim(), a.rank());
        for k in kernel(&a).basis() {
            prop_assert!(vis_zero(&a.apply(k)));
        }
    }

    #[test]
    fn complement_spans(a in small_matrix()) {
        let s = image(&a);
        let c = complement(&s);
        prop_assert_eq!(s.dim() + c.dim(), a.rows());
        prop_assert_eq!(s.sum(&c), Subspace::full(a.rows()));
    }

    #[test]
    fn solve_affine_is_correct(a in small_matrix(), seed in prop::collection::vec(-3i64..4, 4)) {
        let x: Vector = (0..a.cols()).map(|i| q(seed[i])).collect();
        let b = a.apply(&x);
        let sol = solve_affine(&a, &b);
        let p = sol.particular.clone().expect("constructed as consistent");
        prop_assert_eq!(a.apply(&p), b);
        prop_assert!(sol.homogeneous.contains(&vsub(&x, &p)));
    }

    #[test]
    fn quotient_is_a_retraction(a in small_matrix()) {
        let s = image(&a);
        let (p, l) = quotient_data(a.rows(), &s);
        prop_assert_eq!(p.mul(&l), Matrix::identity(p.rows()));
        prop_assert_eq!(kernel(&p), s);
    }

    #[test]
    fn span_is_canonical(a in small_matrix()) {
        let s1 = Subspace::span(a.cols(), &a.row_vectors());
        let mut rows = a.row_vectors();
        rows.reverse();
        let doubled: Vec<Vector> = rows.iter().map(|r| vscale(&q(2), r)).collect();
        prop_assert_eq!(s1, Subspace::span(a.cols(), &doubled));
    }
}
