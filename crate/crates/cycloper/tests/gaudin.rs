mod common;

use common::oracles::*;
use common::*;
use cycloper::arith::Cyclo;
use cycloper::lie::WeylElement;
use cycloper::*;
use num_traits::Zero;

#[test]
fn lambda0_for_sl2_involution() {
    let g = alg("A1");
    let s = sym(&g, &[], 2);
    assert_eq!(lambda0_weight(&g, s.varsigma()), vec![int(-1)]);
    assert_eq!(lambda0_weight(&g, Symmetry::<Cyclo>::trivial(&g).varsigma()), vec![int(0)]);
}

#[test]
fn lambda0_is_nu_invariant() {
    let g = alg("A2");
    for t_order in [2u32, 4, 6] {
        let s = sym(&g, &[vec![0, 1]], t_order);
        let l0 = lambda0_weight(&g, s.varsigma());
        assert_eq!(l0[0], l0[1], "T={t_order}");
    }
}

#[test]
fn energy_equals_lambda_and_oper_residues() {
    let mut rng = Lcg::new(5);
    let families = families();
    let mut checked = 0;
    for trial in 0..15 {
        let (label, ref cycles, t_order) = families[trial % families.len()];
        let rank = alg(label).rank();
        let n_sites = 1 + (trial / families.len()) % 2;
        let n_roots = (trial / 3) % 2;
        let pts = distinct_points(&mut rng, n_sites + n_roots);
        let sites = (0..n_sites)
            .map(|i| site(pts[i], &(0..rank).map(|_| rng.range(-2, 3)).collect::<Vec<_>>()))
            .collect();
        let colours = (0..n_roots).map(|_| rng.range(0, rank as i64 - 1) as usize).collect();
        let roots = pts[n_sites..].iter().map(|&x| int(x)).collect();
        let m = model(label, cycles, t_order, sites, colours, roots);
        for check in m.energy_oper_identity().unwrap() {
            assert!(check.consistent(), "{label} T={t_order} trial {trial}: {check:?}");
            checked += 1;
        }
    }
    assert!(checked >= 15);
}

#[test]
fn bethe_equations_iff_regular_oper() {
    let mut rng = Lcg::new(11);
    for (label, cycles, t_order) in families() {
        let rank = alg(label).rank();
        for n_roots in 1..=(3 - rank) {
            let pts = distinct_points(&mut rng, 2 * n_roots);
            let sites = (0..n_roots).map(|i| site(pts[i], &vec![0; rank])).collect();
            let colours = (0..n_roots).map(|k| k % rank).collect();
            let roots = pts[n_roots..].iter().map(|&x| int(x)).collect();
            let mut m = model(label, &cycles, t_order, sites, colours, roots);
            solve_for_weights(&mut m);
            assert!(m.bethe_residuals().iter().all(|r| r.is_zero()));
            assert!(regular_at_roots(&m).iter().all(|&b| b), "{label} T={t_order}: Bethe solution not regular");

            let c = m.colours[0];
            m.sites[0].weight[c] = m.sites[0].weight[c].clone() + &int(1);
            let residuals = m.bethe_residuals();
            assert!(!residuals[0].is_zero());
            for (r, reg) in residuals.iter().zip(regular_at_roots(&m)) {
                assert_eq!(r.is_zero(), reg, "{label} T={t_order}");
            }
        }
    }
}

#[test]
fn bethe_residual_matches_regularity_condition() {
    let mut m = model("A2", &[], 3, vec![site(2, &[0, 0]), site(5, &[1, 2])], vec![0], vec![int(3)]);
    for w in [0i64, 1, -2] {
        m.sites[0].weight[0] = int(w);
        let lg = m.dual().algebra();
        let miura = m.miura_from_bethe().unwrap();
        let s1 = WeylElement::simple(lg.cartan(), 0);
        let cond = regularity_condition(lg, &miura, &m.roots[0], &s1).unwrap();
        assert_eq!(cond.is_zero(), m.bethe_residuals()[0].is_zero());
    }
}

#[test]
fn weight_at_infinity_sl2() {
    let m = model("A1", &[], 1, vec![site(1, &[2]), site(4, &[3])], vec![0], vec![int(2)]);
    assert_eq!(m.total_weight(), vec![int(3)]);
    let (w, lam) = m.weight_at_infinity().unwrap();
    assert!(w.is_identity());
    assert_eq!(lam, vec![int(3)]);

    let m = model("A1", &[], 1, vec![site(1, &[1])], vec![0, 0], vec![int(2), int(3)]);
    assert_eq!(m.total_weight(), vec![int(-3)]);
    let (w, lam) = m.weight_at_infinity().unwrap();
    assert_eq!(w.len(), 1);
    assert_eq!(lam, vec![int(1)]);
}

#[test]
fn model_input_checks() {
    let g = alg("A2");
    let s = Symmetry::<Cyclo>::trivial(&g);
    assert!(matches!(
        GaudinModel::new(&g, s.varsigma(), vec![], vec![0], vec![]),
        Err(CoreError::InvalidInput(_))
    ));
    assert!(matches!(
        GaudinModel::new(&g, s.varsigma(), vec![site(1, &[1])], vec![], vec![]),
        Err(CoreError::InvalidInput(_))
    ));
    assert!(matches!(
        GaudinModel::new(&g, s.varsigma(), vec![], vec![2], vec![int(1)]),
        Err(CoreError::InvalidInput(_))
    ));
}
