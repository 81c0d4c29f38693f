use cycloper_arith::{Cyclo, CycloField, Field, Q};
use cycloper_lie::vecops;
use cycloper_lie::*;

fn a2() -> ChevalleyAlgebra {
    ChevalleyAlgebra::from_label("A2").unwrap()
}

fn swap(alg: &ChevalleyAlgebra) -> DiagramAut {
    DiagramAut::from_cycles(alg.cartan(), &[vec![0, 1]]).unwrap()
}

#[test]
fn identity_automorphism() {
    let alg = ChevalleyAlgebra::from_label("B3").unwrap();
    let id = AlgebraAut::<Cyclo>::new(&alg, &DiagramAut::identity(3), &AutKind::Diagram, 1).unwrap();
    assert!(id.matrix().is_identity());
}

#[test]
fn varsigma_on_generators() {
    let alg = a2();
    let nu = swap(&alg);
    for t in [2u32, 4, 6] {
        let s = AlgebraAut::<Cyclo>::new(&alg, &nu, &AutKind::Varsigma, t).unwrap();
        let w = Cyclo::zeta(t);
        for i in 0..2 {
            let img = s.apply(&alg.basis_vector(alg.e(i)));
            assert_eq!(img, vecops::scale(&alg.basis_vector(alg.e(1 - i)), &w.inv()));
            let img = s.apply(&alg.basis_vector(alg.f(i)));
            assert_eq!(img, vecops::scale(&alg.basis_vector(alg.f(1 - i)), &w));
        }
        assert!(s.preserves_bracket(&alg));
        let (pm1, rho, p1) = alg.principal_triple::<Cyclo>();
        assert_eq!(s.apply(&p1), vecops::scale(&p1, &w.inv()));
        assert_eq!(s.apply(&pm1), vecops::scale(&pm1, &w));
        assert_eq!(s.apply(&rho), rho);
    }
}

#[test]
fn varsigma_preserves_grading_and_centralizer() {
    for (label, cycles, t) in [("A3", vec![vec![0, 2]], 4u32), ("D4", vec![vec![0, 2, 3]], 3), ("A4", vec![vec![0, 3], vec![1, 2]], 2)] {
        let alg = ChevalleyAlgebra::from_label(label).unwrap();
        let nu = DiagramAut::from_cycles(alg.cartan(), &cycles).unwrap();
        let s = AlgebraAut::<Cyclo>::new(&alg, &nu, &AutKind::Varsigma, t).unwrap();
        assert!(s.preserves_bracket(&alg), "{label}");
        for k in 0..alg.dim() {
            let img = s.apply(&alg.basis_vector(k));
            for (j, v) in img.iter().enumerate() {
                if !num_traits::Zero::is_zero(v) {
                    assert_eq!(alg.height(j), alg.height(k));
                }
            }
        }
        // each a ∩ g_i is stable
        let cent = alg.centralizer_basis::<Cyclo>();
        for (e, v) in &cent {
            let img = s.apply(v);
            let same: Vec<Vec<Cyclo>> = cent.iter().filter(|(f, _)| f == e).map(|(_, w)| w.clone()).collect();
            let mut rows = same.clone();
            rows.push(img);
            assert_eq!(cycloper_arith::Mat::from_rows(rows).rank(), same.len(), "{label}");
        }
    }
}

#[test]
fn diagram_automorphism_fixes_principal_triple() {
    for (label, cycles) in [("A3", vec![vec![0, 2]]), ("D4", vec![vec![0, 2, 3]]), ("A2", vec![vec![0, 1]])] {
        let alg = ChevalleyAlgebra::from_label(label).unwrap();
        let nu = DiagramAut::from_cycles(alg.cartan(), &cycles).unwrap();
        let d = AlgebraAut::<Cyclo>::new(&alg, &nu, &AutKind::Diagram, nu.order() as u32).unwrap();
        let (pm1, rho, p1) = alg.principal_triple::<Cyclo>();
        assert_eq!(d.apply(&pm1), pm1);
        assert_eq!(d.apply(&rho), rho);
        assert_eq!(d.apply(&p1), p1);
        assert_eq!(d.order(), nu.order() as u32);
    }
}

#[test]
fn vartheta_on_principal_direction() {
    let alg = a2();
    let nu = swap(&alg);
    for t in [2u32, 4, 6] {
        for eta in 0..4i64 {
            let th = AlgebraAut::<Cyclo>::new(&alg, &nu, &AutKind::Vartheta(vec![eta, eta]), t).unwrap();
            let x = vecops::add(&alg.basis_vector::<Cyclo>(alg.e(0)), &alg.basis_vector(alg.e(1)));
            assert_eq!(th.apply(&x), vecops::scale(&x, &Cyclo::zeta_pow(t, -(eta + 1))));
            assert!(th.preserves_bracket(&alg));
        }
    }
}

#[test]
fn order_mismatch() {
    let alg = a2();
    let nu = swap(&alg);
    assert_eq!(
        AlgebraAut::<Cyclo>::new(&alg, &nu, &AutKind::Diagram, 3).unwrap_err(),
        LieError::OrderMismatch { expected: 3 }
    );
    assert!(AlgebraAut::<Cyclo>::new(&alg, &nu, &AutKind::Varsigma, 3).is_err());
    assert!(DiagramAut::new(alg.cartan(), vec![0, 0]).is_err());
    let b2 = CartanDatum::from_label("B2").unwrap();
    assert!(DiagramAut::new(&b2, vec![1, 0]).is_err());
}

#[test]
fn sigma_with_arbitrary_roots_of_unity() {
    let alg = ChevalleyAlgebra::from_label("A3").unwrap();
    let nu = DiagramAut::identity(3);
    let s = AlgebraAut::<Cyclo>::new(&alg, &nu, &AutKind::Sigma(vec![1, 2, 5]), 6).unwrap();
    assert!(s.preserves_bracket(&alg));
    assert_eq!(s.order(), 6);
    let top = alg.root_index(&[1, 1, 1]).unwrap();
    assert_eq!(s.apply(&alg.basis_vector(top)), vecops::scale(&alg.basis_vector(top), &Cyclo::zeta_pow(6, 8)));
}

#[test]
fn fixed_nilpotent_identity() {
    let alg = ChevalleyAlgebra::from_label("A3").unwrap();
    let id = AlgebraAut::<Cyclo>::new(&alg, &DiagramAut::identity(3), &AutKind::Diagram, 1).unwrap();
    assert_eq!(theta_fixed_nilpotent(&alg, &id).basis.len(), alg.num_positive());
}

/// Fixed dimension of `n` under ϑ for A₂ folded, by the eigenvalues of
/// `E₁+E₂`, `E₁-E₂`, `E₁₂`: `ω^{-μ}`, `-ω^{-μ}`, `-ω^{-2μ}`.
fn expected_fixed_dim(t: u32, mu: i64) -> usize {
    let w = Cyclo::zeta_pow(t, mu);
    let one = Cyclo::from_i64(1);
    [w.clone() == one, w.clone() == -one.clone(), w.clone() * &w == -one].iter().filter(|b| **b).count()
}

#[test]
fn fixed_nilpotent_a2_cases() {
    let alg = a2();
    let nu = swap(&alg);
    let mut seen = [false; 4];
    for t in [2u32, 4, 6, 8, 10, 12] {
        for eta in 0..8i64 {
            let th = AlgebraAut::<Cyclo>::new(&alg, &nu, &AutKind::Vartheta(vec![eta, eta]), t).unwrap();
            let fixed = theta_fixed_nilpotent(&alg, &th);
            let mu = eta + 1;
            let want = expected_fixed_dim(t, mu);
            assert_eq!(fixed.basis.len(), want, "T={t} η={eta}");
            assert_eq!(fixed.orbits, vec![(vec![0, 1], want)]);
            let nontrivial = Cyclo::zeta_pow(t, 4 * mu) == Cyclo::from_i64(1);
            assert_eq!(want > 0, nontrivial);
            let w = Cyclo::zeta_pow(t, mu);
            if w == Cyclo::from_i64(1) {
                seen[0] = true;
                let x = vecops::add(&alg.basis_vector::<Cyclo>(alg.e(0)), &alg.basis_vector(alg.e(1)));
                let mut rows = fixed.basis.clone();
                rows.push(x);
                assert_eq!(cycloper_arith::Mat::from_rows(rows).rank(), fixed.basis.len());
            } else if w == Cyclo::from_i64(-1) {
                seen[1] = true;
            } else if w.clone() * &w == Cyclo::from_i64(-1) {
                seen[2] = true;
            } else {
                seen[3] = true;
            }
        }
    }
    assert_eq!(seen, [true; 4]);
}

#[test]
fn group_action_is_conjugation() {
    let alg = a2();
    let nu = swap(&alg);
    let s = AlgebraAut::<Cyclo>::new(&alg, &nu, &AutKind::Varsigma, 4).unwrap();
    let x: Vec<Cyclo> = vecops::add(&alg.basis_vector(alg.e(0)), &vecops::scale(&alg.basis_vector(alg.root_index(&[1, 1]).unwrap()), &Cyclo::from(Q::new(1.into(), 3.into()))));
    let g = alg.exp_ad(&x);
    assert_eq!(s.act_on_group(&g), alg.exp_ad(&s.apply(&x)));
}
