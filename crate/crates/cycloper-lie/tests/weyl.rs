use cycloper_arith::{Field, ParamScalar, Q};
use cycloper_lie::*;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

#[test]
fn group_orders() {
    for (label, order) in [("A1", 2), ("A2", 6), ("A3", 24), ("A4", 120), ("B2", 8), ("B3", 48), ("G2", 12), ("D4", 192), ("F4", 1152)] {
        let w = WeylGroup::enumerate(&CartanDatum::from_label(label).unwrap()).unwrap();
        assert_eq!(w.order(), order, "{label}");
    }
}

#[test]
fn group_limit_is_enforced() {
    let c = CartanDatum::from_label("A4").unwrap();
    assert_eq!(WeylGroup::enumerate_with_limit(&c, 50).unwrap_err(), LieError::GroupTooLarge { limit: 50 });
}

#[test]
fn longest_element_negates_positive_roots() {
    for label in ["A2", "A3", "B3", "G2", "D4"] {
        let c = CartanDatum::from_label(label).unwrap();
        let w = WeylGroup::enumerate(&c).unwrap();
        let w0 = w.longest();
        let rs = RootSystem::new(&c);
        assert_eq!(w0.len(), rs.num_positive(), "{label}");
        for r in rs.positive() {
            assert!(w0.act_on_root(&c, r).iter().all(|&x| x <= 0));
        }
    }
}

#[test]
fn coxeter_relations() {
    for label in ["A3", "B3", "G2", "D4", "A1xA2"] {
        let c = CartanDatum::from_label(label).unwrap();
        let n = c.rank();
        for i in 0..n {
            let si = WeylElement::simple(&c, i);
            assert!(si.compose(&si).is_identity());
            for j in 0..n {
                if i == j {
                    continue;
                }
                let m = match c.a(i, j) * c.a(j, i) {
                    0 => 2,
                    1 => 3,
                    2 => 4,
                    3 => 6,
                    _ => unreachable!(),
                };
                let word: Vec<usize> = (0..m).flat_map(|_| [i, j]).collect();
                assert!(WeylElement::from_word(&c, &word).is_identity(), "{label} ({i},{j})");
                let short: Vec<usize> = (0..m - 1).flat_map(|_| [i, j]).collect();
                assert!(!WeylElement::from_word(&c, &short).is_identity());
            }
        }
    }
}

#[test]
fn shifted_simple_reflection_of_zero() {
    for label in ["A2", "B3", "G2"] {
        let c = CartanDatum::from_label(label).unwrap();
        for k in 0..c.rank() {
            let got = WeylElement::simple(&c, k).act_shifted(&vec![q(0); c.rank()]);
            let want: Vec<Q> = (0..c.rank()).map(|j| q(-c.a(k, j))).collect();
            assert_eq!(got, want);
        }
    }
}

#[test]
fn longest_element_on_symbolic_coweight() {
    let c = CartanDatum::from_label("A2").unwrap();
    let eta = ParamScalar::t();
    let lambda = vec![eta.clone(), eta.clone()];
    let w = WeylElement::from_word(&c, &[0, 1, 0]);
    let minus = -eta - ParamScalar::from_i64(2);
    assert_eq!(w.act_shifted(&lambda), vec![minus.clone(), minus]);
    assert_eq!(WeylElement::identity(2).act_shifted(&lambda), lambda);
}

#[test]
fn linkage() {
    let a1 = CartanDatum::from_label("A1").unwrap();
    assert!(linkage_equal(&a1, &[q(0)], &[q(-2)], None).unwrap());
    assert!(linkage_equal(&a1, &[q(3)], &[q(3)], None).unwrap());
    assert!(!linkage_equal(&a1, &[q(0)], &[q(1)], None).unwrap());

    let a2 = CartanDatum::from_label("A2").unwrap();
    let nu = [1usize, 0];
    for eta in 0..4 {
        let l0 = vec![q(eta), q(eta)];
        let s1 = WeylElement::simple(&a2, 0).act_shifted(&l0);
        assert!(linkage_equal(&a2, &l0, &s1, None).unwrap());
        assert!(!linkage_equal(&a2, &l0, &s1, Some(&nu)).unwrap());
        let s121 = WeylElement::from_word(&a2, &[0, 1, 0]).act_shifted(&l0);
        assert!(linkage_equal(&a2, &l0, &s121, Some(&nu)).unwrap());
    }
}

#[test]
fn nu_invariant_subgroup_of_a2() {
    let c = CartanDatum::from_label("A2").unwrap();
    let w = WeylGroup::enumerate(&c).unwrap();
    let inv = w.nu_invariant(&[1, 0]);
    assert_eq!(inv.len(), 2);
    assert!(inv[0].is_identity());
    assert!(inv[1].same_element(&WeylElement::from_word(&c, &[0, 1, 0])));
}

#[test]
fn shifted_orbit_sizes() {
    let c = CartanDatum::from_label("A2").unwrap();
    assert_eq!(weyl_orbit_shifted(&c, &[q(0), q(0)], None).unwrap().len(), 6);
    // -ρ̌ is the fixed point of the shifted action
    assert_eq!(weyl_orbit_shifted(&c, &[q(-1), q(-1)], None).unwrap().len(), 1);
    assert_eq!(weyl_orbit_shifted(&c, &[q(1), q(1)], Some(&[1, 0])).unwrap().len(), 2);
}

#[test]
fn dominant_orbits_are_free() {
    // w ↦ w(λ̌ + ρ̌) is injective for dominant λ̌
    for (label, lambda) in [("A2", vec![0, 1]), ("B3", vec![1, 0, 2]), ("G2", vec![0, 0]), ("A3", vec![2, 0, 1])] {
        let c = CartanDatum::from_label(label).unwrap();
        let w = WeylGroup::enumerate(&c).unwrap();
        let shifted: Vec<Q> = lambda.iter().map(|&x| q(x + 1)).collect();
        let mut images: Vec<Vec<Q>> = w.elements().iter().map(|g| g.act(&shifted)).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), w.order(), "{label}");
    }
}

#[test]
fn reflection_lift_acts_as_reflection() {
    for label in ["A2", "B2", "G2"] {
        let alg = ChevalleyAlgebra::from_label(label).unwrap();
        let c = alg.cartan().clone();
        for i in 0..alg.rank() {
            let s = simple_reflection_lift::<Q>(&alg, i);
            for k in 0..alg.dim() {
                let r = alg.basis_root(k).to_vec();
                if r.iter().all(|&x| x == 0) {
                    continue;
                }
                let img = s.mul_vec(&alg.basis_vector(k));
                let target = alg.root_index(&WeylElement::simple(&c, i).act_on_root(&c, &r)).unwrap();
                for (j, v) in img.iter().enumerate() {
                    assert_eq!(*v == q(0), j != target, "{label}: ṡ_{i} E_{r:?}");
                }
                assert!(img[target] == q(1) || img[target] == q(-1));
            }
        }
    }
}
