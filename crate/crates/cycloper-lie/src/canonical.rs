use cycloper_arith::{Field, Mat};

use crate::algebra::ChevalleyAlgebra;
use crate::vecops;

/// Coefficients `c_k` of the representative `p₋₁ + Σ c_k p_k`, ordered like
/// the centralizer basis.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteOperClass<F> {
    pub coeffs: Vec<F>,
}

/// Conjugates `X ∈ p₋₁ + b` into `p₋₁ + a`. Returns the class and `n ∈ N`
/// (adjoint matrix) with `Ad_n X = p₋₁ + Σ c_k p_k`.
pub fn finite_canonical<F: Field>(alg: &ChevalleyAlgebra, x: &[F]) -> (FiniteOperClass<F>, Mat<F>) {
    let pm1: Vec<F> = alg.pm1();
    assert_eq!(alg.degree_part(x, -1), pm1, "finite_canonical expects X ∈ p₋₁ + b");
    assert!((0..alg.dim()).all(|k| alg.height(k) >= -1 || x[k].is_zero()), "finite_canonical expects X ∈ p₋₁ + b");
    let mut cur = x.to_vec();
    let mut n: Mat<F> = Mat::identity(alg.dim());
    let mut coeffs = vecops::zeros(alg.exponents().len());
    for i in 0..=alg.max_height() {
        let (y, cs) = alg.ds_split(i, &alg.degree_part(&cur, i));
        for (k, c) in cs {
            coeffs[k] = c;
        }
        if !vecops::is_zero(&y) {
            cur = alg.exp_ad_apply(&y, &cur);
            n = alg.exp_ad(&y).mul(&n);
        }
    }
    (FiniteOperClass { coeffs }, n)
}

/// `p₋₁ + Σ c_k p_k`.
pub fn canonical_element<F: Field>(alg: &ChevalleyAlgebra, class: &FiniteOperClass<F>) -> Vec<F> {
    let mut x: Vec<F> = alg.pm1();
    for ((_, pk), c) in alg.centralizer_basis::<F>().iter().zip(&class.coeffs) {
        x = vecops::add(&x, &vecops::scale(pk, c));
    }
    x
}
