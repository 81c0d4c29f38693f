use cycloper_arith::{Field, Func, Mat, Q};
use cycloper_lie::vecops;
use cycloper_lie::*;

#[test]
fn fundamental_representation_is_homomorphism() {
    for label in ["A1", "A2", "A3", "A4"] {
        let alg = ChevalleyAlgebra::from_label(label).unwrap();
        let rep = Representation::<Q>::fundamental_sl(&alg);
        for a in 0..alg.dim() {
            for b in 0..alg.dim() {
                let (x, y) = (rep.basis_image(a), rep.basis_image(b));
                let lhs = rep.image(&alg.bracket(&alg.basis_vector(a), &alg.basis_vector(b)));
                assert_eq!(lhs, x.mul(y).sub(&y.mul(x)), "{label}");
            }
        }
    }
}

#[test]
fn sl3_principal_exponential() {
    let alg = ChevalleyAlgebra::from_label("A2").unwrap();
    let rep = Representation::<Func>::fundamental_sl(&alg);
    let eta = Func::from_i64(3);
    let s = eta.clone() / Func::t();
    let x = vecops::scale(&vecops::add(&alg.basis_vector(alg.e(0)), &alg.basis_vector(alg.e(1))), &s);
    let g = rep.exp(&x);
    let half = Func::from_rational(&Q::new(1.into(), 2.into()));
    let want = Mat::from_rows(vec![
        vec![Func::from_i64(1), s.clone(), half * s.clone() * &s],
        vec![Func::from_i64(0), Func::from_i64(1), s.clone()],
        vec![Func::from_i64(0), Func::from_i64(0), Func::from_i64(1)],
    ]);
    assert_eq!(g, want);
}

#[test]
fn adjoint_exponential_matches_fundamental_conjugation() {
    // Ad_{exp x} y = exp(x) y exp(-x) in the defining representation
    let alg = ChevalleyAlgebra::from_label("A3").unwrap();
    let rep = Representation::<Q>::fundamental_sl(&alg);
    let x: Vec<Q> = (0..alg.dim()).map(|k| if alg.height(k) > 0 { Q::new((k as i64 % 3 - 1).into(), 2.into()) } else { Q::from_i64(0) }).collect();
    let g = rep.exp(&x);
    let ginv = rep.exp(&vecops::neg(&x));
    let ad = alg.exp_ad(&x);
    for k in 0..alg.dim() {
        let lhs = rep.image(&ad.mul_vec(&alg.basis_vector(k)));
        assert_eq!(lhs, g.mul(rep.basis_image(k)).mul(&ginv));
    }
}
