use super::prng::Prng;
use crate::algebra::{AlgElem, Algebra};
use crate::amodule::{Orientation, OrientedVector};
use crate::biring::{GenMatrix, MatExpr};
use crate::exact::Rational;
use crate::tensorcalc::{NCPoly, Tensor, Word};

pub const MAX_POLY_TERMS: usize = 4;
pub const MAX_WORD_LEN: usize = 4;

/// Numerator in `[-3, 3]`, denominator in `{1, 2}`.
pub fn gen_rational(rng: &mut Prng) -> Rational {
    let num = rng.int_in(-3, 3);
    let den = rng.int_in(1, 2);
    Rational::new(num, den).expect("nonzero denominator")
}

pub fn gen_element(alg: &Algebra, rng: &mut Prng) -> AlgElem {
    let coords = (0..alg.dim()).map(|_| gen_rational(rng)).collect();
    AlgElem::from_coords(alg, coords).expect("coordinate count matches")
}

pub fn gen_nonzero_element(alg: &Algebra, rng: &mut Prng) -> AlgElem {
    loop {
        let e = gen_element(alg, rng);
        if !e.is_zero() || alg.dim() == 0 {
            return e;
        }
    }
}

pub fn gen_elements(alg: &Algebra, n: usize, rng: &mut Prng) -> Vec<AlgElem> {
    (0..n).map(|_| gen_element(alg, rng)).collect()
}

pub fn gen_matrix(alg: &Algebra, rows: usize, cols: usize, rng: &mut Prng) -> GenMatrix<AlgElem> {
    GenMatrix::from_fn(rows, cols, |_, _| gen_element(alg, rng))
}

pub fn gen_qmatrix(rows: usize, cols: usize, rng: &mut Prng) -> GenMatrix<Rational> {
    GenMatrix::from_fn(rows, cols, |_, _| gen_rational(rng))
}

pub fn gen_vector(alg: &Algebra, orientation: Orientation, n: usize, rng: &mut Prng) -> OrientedVector {
    OrientedVector::new(alg, orientation, gen_elements(alg, n, rng)).expect("same algebra")
}

/// At most [`MAX_POLY_TERMS`] terms with words of length at most [`MAX_WORD_LEN`].
pub fn gen_ncpoly(vars: &[String], rng: &mut Prng) -> NCPoly {
    let mut p = NCPoly::zero(vars);
    let terms = rng.int_in(1, MAX_POLY_TERMS as i64);
    for _ in 0..terms {
        let len = rng.below(MAX_WORD_LEN + 1);
        let word = Word((0..len).map(|_| rng.below(vars.len())).collect());
        p.add_term(word, gen_rational(rng));
    }
    p
}

/// Between one and `max_terms` terms.
pub fn gen_tensor(alg: &Algebra, max_terms: usize, rng: &mut Prng) -> Tensor {
    let mut t = Tensor::zero(alg);
    for _ in 0..rng.int_in(1, max_terms as i64) {
        t.push(gen_rational(rng), gen_element(alg, rng), gen_element(alg, rng))
            .expect("same algebra");
    }
    t
}

/// Random expression whose every node is `n x n`, of depth at most `max_depth`.
pub fn gen_expr(alg: &Algebra, n: usize, max_depth: usize, rng: &mut Prng) -> MatExpr<AlgElem> {
    if max_depth == 0 || rng.below(4) == 0 {
        return MatExpr::leaf(gen_matrix(alg, n, n, rng));
    }
    let d = max_depth - 1;
    match rng.below(4) {
        0 => MatExpr::transpose(gen_expr(alg, n, d, rng)),
        1 => MatExpr::rc(gen_expr(alg, n, d, rng), gen_expr(alg, n, d, rng)),
        2 => MatExpr::cr(gen_expr(alg, n, d, rng), gen_expr(alg, n, d, rng)),
        _ => MatExpr::sum(gen_expr(alg, n, d, rng), gen_expr(alg, n, d, rng)),
    }
}
