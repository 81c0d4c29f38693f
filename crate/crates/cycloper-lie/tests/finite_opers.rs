use cycloper_arith::{Field, ParamScalar, Q};
use cycloper_lie::vecops;
use cycloper_lie::*;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

#[test]
fn principal_nilpotent_is_canonical() {
    for label in ["A1", "A3", "B2", "G2"] {
        let alg = ChevalleyAlgebra::from_label(label).unwrap();
        let (class, n) = finite_canonical::<Q>(&alg, &alg.pm1());
        assert!(class.coeffs.iter().all(|c| *c == q(0)));
        assert!(n.is_identity());
    }
}

#[test]
fn a1_shift_by_coroot() {
    let alg = ChevalleyAlgebra::from_label("A1").unwrap();
    let x = vecops::sub(&alg.pm1::<Q>(), &alg.basis_vector(alg.h(0)));
    let (class, n) = finite_canonical(&alg, &x);
    // scalar form of u₁ = ½(v₀|v₀) / (2(ρ̌|ρ̌)) with v₀ = -α̌
    let v0 = vecops::neg(&alg.basis_vector::<Q>(alg.h(0)));
    let rho: Vec<Q> = alg.rho_check();
    let u1 = alg.form(&v0, &v0) / q(2) / (q(2) * alg.form(&rho, &rho));
    assert_eq!(class.coeffs, vec![u1.clone()]);
    assert_eq!(u1, q(1));
    assert_eq!(n.mul_vec(&x), canonical_element(&alg, &class));
}

#[test]
fn scalar_u1_formula_in_rank_two() {
    // for X = p₋₁ + v₀ with v₀ ∈ h the p₁-coefficient is ½(v₀|v₀)/(2(ρ̌|ρ̌))
    for label in ["A2", "B2", "G2", "A3"] {
        let alg = ChevalleyAlgebra::from_label(label).unwrap();
        let rho: Vec<Q> = alg.rho_check();
        for seed in 0..5i64 {
            let coords: Vec<Q> = (0..alg.rank()).map(|i| Q::new((seed * 3 + i as i64 * 5 - 4).into(), 2.into())).collect();
            let v0 = alg.coweight_element(&coords);
            let (class, _) = finite_canonical(&alg, &vecops::add(&alg.pm1(), &v0));
            let u1 = alg.form(&v0, &v0) / q(2) / (q(2) * alg.form(&rho, &rho));
            assert_eq!(class.coeffs[0], u1, "{label}");
        }
    }
}

#[test]
fn constant_on_shifted_weyl_orbits_symbolic() {
    // η is a free parameter; the class of p₋₁ - w(λ̌+ρ̌) does not depend on w
    let alg = ChevalleyAlgebra::from_label("A2").unwrap();
    let eta = ParamScalar::t();
    let lambda = vec![eta.clone(), eta.clone() * ParamScalar::from_i64(2) - ParamScalar::from_i64(1)];
    let group = WeylGroup::enumerate(alg.cartan()).unwrap();
    let class_of = |mu: &[ParamScalar]| {
        let shifted: Vec<ParamScalar> = mu.iter().map(|c| c.clone() + ParamScalar::from_i64(1)).collect();
        let x = vecops::sub(&alg.pm1(), &alg.coweight_element(&shifted));
        finite_canonical(&alg, &x).0
    };
    let base = class_of(&lambda);
    for w in group.elements() {
        assert_eq!(class_of(&w.act_shifted(&lambda)), base);
    }
}

#[test]
fn canonical_form_is_idempotent_and_reassembles() {
    for label in ["A2", "A3", "B2", "G2", "D4"] {
        let alg = ChevalleyAlgebra::from_label(label).unwrap();
        let x: Vec<Q> = (0..alg.dim())
            .map(|k| match alg.height(k) {
                -1 => q(1),
                h if h >= 0 => Q::new(((k as i64 * 7 + h) % 5 - 2).into(), 3.into()),
                _ => q(0),
            })
            .collect();
        let (class, n) = finite_canonical(&alg, &x);
        let canon = canonical_element(&alg, &class);
        assert_eq!(n.mul_vec(&x), canon, "{label}");
        let (again, n2) = finite_canonical(&alg, &canon);
        assert_eq!(again, class);
        assert!(n2.is_identity());
        let z = alg.log_unipotent(&n);
        assert!((0..alg.dim()).all(|k| alg.height(k) > 0 || z[k] == q(0)));
        assert_eq!(alg.exp_ad(&z), n);
    }
}
