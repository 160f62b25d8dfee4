//! Integration of adjustments along exponentials of ad-nilpotent elements.
//!
//! Group elements are written in logarithmic coordinates `e^Z`. For `ad_Z`
//! nilpotent all series below are finite, so every value is exact.

use crossmod_crossed::CrossedModule;
use crossmod_lie::{Bilinear, LieAlgebra};
use crossmod_linalg::{vaxpy, vzero, Matrix, Vector, Q};
use num_traits::{One, Zero};

use crate::adjustment::check_adjustment;
use crate::AdjustError;

fn factorial(n: usize) -> Q {
    (1..=n).fold(Q::one(), |acc, k| acc * Q::from_integer(k.into()))
}

/// `exp(a) = Σ_{k < order} a^k / k!` for a matrix with `a^order = 0`.
pub fn exp_nilpotent(a: &Matrix, order: usize) -> Result<Matrix, AdjustError> {
    let n = a.rows();
    let mut power = Matrix::identity(n);
    let mut sum = Matrix::zeros(n, n);
    for k in 0..order {
        sum = sum.add(&power.scale(&(Q::one() / factorial(k))));
        power = power.mul(a);
    }
    if !power.is_zero() {
        return Err(AdjustError::NotNilpotent(format!(
            "matrix power {order} does not vanish"
        )));
    }
    Ok(sum)
}

/// `Ad_{e^Z} = exp(ad_Z)`, with `ad_Z^max_k = 0` verified.
pub fn ad_exp(l: &LieAlgebra, z: &[Q], max_k: usize) -> Result<Matrix, AdjustError> {
    exp_nilpotent(&l.ad(z), max_k)
}

/// `α_{e^Z} = exp(α_Z)` on `h`, with `α_Z^max_k = 0` verified.
pub fn action_exp(m: &CrossedModule, z: &[Q], max_k: usize) -> Result<Matrix, AdjustError> {
    exp_nilpotent(&m.alpha().matrix_of(z), max_k)
}

/// Nested bracket `[w_0, [w_1, … [w_{m−2}, w_{m−1}]]]` of a word in `x`
/// (`false`) and `y` (`true`).
fn nested_bracket(l: &LieAlgebra, word: &[bool], x: &[Q], y: &[Q]) -> Vector {
    let letter = |b: bool| if b { y } else { x };
    let mut v = letter(word[word.len() - 1]).to_vec();
    for &b in word[..word.len() - 1].iter().rev() {
        if v.iter().all(Zero::is_zero) {
            break;
        }
        v = l.bracket(letter(b), &v);
    }
    v
}

/// Enumerates sequences of `(r_i, s_i)` with `r_i + s_i ≥ 1` and total at
/// most `budget`, calling `visit` on each complete sequence of length
/// `blocks`.
fn for_each_block_sequence(
    blocks: usize,
    budget: usize,
    prefix: &mut Vec<(usize, usize)>,
    visit: &mut dyn FnMut(&[(usize, usize)]),
) {
    if prefix.len() == blocks {
        visit(prefix);
        return;
    }
    let used: usize = prefix.iter().map(|(r, s)| r + s).sum();
    let remaining_blocks = blocks - prefix.len() - 1;
    for total in 1..=budget.saturating_sub(used + remaining_blocks) {
        for r in 0..=total {
            prefix.push((r, total - r));
            for_each_block_sequence(blocks, budget, prefix, visit);
            prefix.pop();
        }
    }
}

/// `log(e^X e^Y)` by the Dynkin series, exact on a nilpotent algebra where
/// it is truncated at the nilpotency class.
pub fn bch(l: &LieAlgebra, x: &[Q], y: &[Q]) -> Result<Vector, AdjustError> {
    let class = l
        .nilpotency_class()
        .ok_or_else(|| AdjustError::NotNilpotent("the algebra is not nilpotent".into()))?;
    let degree = class.max(1);
    let mut out = vzero(l.dim());
    for n in 1..=degree {
        let sign = if n % 2 == 1 { Q::one() } else { -Q::one() };
        let outer = sign / Q::from_integer(n.into());
        for_each_block_sequence(n, degree, &mut Vec::new(), &mut |seq| {
            let total: usize = seq.iter().map(|(r, s)| r + s).sum();
            let mut denom = Q::from_integer(total.into());
            let mut word = Vec::with_capacity(total);
            for &(r, s) in seq {
                denom *= factorial(r) * factorial(s);
                word.extend(std::iter::repeat_n(false, r));
                word.extend(std::iter::repeat_n(true, s));
            }
            let term = nested_bracket(l, &word, x, y);
            vaxpy(&mut out, &(outer.clone() / denom), &term);
        });
    }
    Ok(out)
}

/// `κ(e^Z, X) = Σ_{n ≥ 1} (1/n!) η(Z, ad_Z^{n−1} X)`, the adjustment
/// integrated from `η`, for `Z` with `ad_Z^max_k = 0`. `max_k` defaults to
/// `dim g`.
pub fn integrate_nilpotent(
    m: &CrossedModule,
    eta: &Bilinear,
    z: &[Q],
    x: &[Q],
    max_k: Option<usize>,
) -> Result<Vector, AdjustError> {
    let g = m.g();
    let n = g.dim();
    if z.len() != n || x.len() != n {
        return Err(AdjustError::Shape("group element and vector must lie in g".into()));
    }
    let report = check_adjustment(m, eta, None)?;
    if !report.is_adjustment() {
        return Err(AdjustError::NotAdjustment("eta fails the adjustment identities".into()));
    }
    integrate_unchecked(g, eta, z, x, max_k.unwrap_or(n))
}

pub(crate) fn integrate_unchecked(
    g: &LieAlgebra,
    eta: &Bilinear,
    z: &[Q],
    x: &[Q],
    max_k: usize,
) -> Result<Vector, AdjustError> {
    let ad = g.ad(z);
    let mut check = Matrix::identity(g.dim());
    for _ in 0..max_k {
        check = check.mul(&ad);
    }
    if !check.is_zero() {
        return Err(AdjustError::NotNilpotent(format!("ad_Z^{max_k} does not vanish")));
    }
    let mut power = x.to_vec();
    let mut out = vzero(eta.values_dim());
    for k in 1..=max_k {
        vaxpy(&mut out, &(Q::one() / factorial(k)), &eta.eval(z, &power));
        power = ad.apply(&power);
    }
    Ok(out)
}
