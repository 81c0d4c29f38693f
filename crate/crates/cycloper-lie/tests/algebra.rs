use cycloper_arith::{Mat, Q};
use cycloper_lie::vecops;
use cycloper_lie::{CartanDatum, ChevalleyAlgebra};
use num_traits::Zero;

const LABELS: &[&str] = &["A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "A1xA1", "A1xA2"];

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn basis(alg: &ChevalleyAlgebra, k: usize) -> Vec<Q> {
    alg.basis_vector(k)
}

#[test]
fn dimensions_and_exponents() {
    let cases: &[(&str, usize, &[usize])] = &[
        ("A1", 3, &[1]),
        ("A2", 8, &[1, 2]),
        ("A3", 15, &[1, 2, 3]),
        ("A4", 24, &[1, 2, 3, 4]),
        ("B2", 10, &[1, 3]),
        ("B3", 21, &[1, 3, 5]),
        ("C3", 21, &[1, 3, 5]),
        ("D4", 28, &[1, 3, 3, 5]),
        ("G2", 14, &[1, 5]),
        ("A1xA1", 6, &[1, 1]),
    ];
    for (label, dim, exps) in cases {
        let alg = ChevalleyAlgebra::from_label(label).unwrap();
        assert_eq!(alg.dim(), *dim, "{label}");
        assert_eq!(alg.exponents(), exps.to_vec(), "{label}");
    }
}

#[test]
fn exceptional_dimensions() {
    for (label, dim) in [("F4", 52), ("E6", 78)] {
        assert_eq!(ChevalleyAlgebra::from_label(label).unwrap().dim(), dim);
    }
}

#[test]
fn jacobi_identity() {
    for label in LABELS {
        let alg = ChevalleyAlgebra::from_label(label).unwrap();
        let d = alg.dim();
        for a in 0..d {
            let ada = alg.ad::<Q>(&basis(&alg, a));
            for b in 0..d {
                let adb = alg.ad::<Q>(&basis(&alg, b));
                let lhs = alg.ad::<Q>(&alg.bracket(&basis(&alg, a), &basis(&alg, b)));
                let rhs = ada.mul(&adb).sub(&adb.mul(&ada));
                assert_eq!(lhs, rhs, "{label}: ad[x_{a}, x_{b}] != [ad x_{a}, ad x_{b}]");
            }
        }
    }
}

#[test]
fn antisymmetry() {
    for label in LABELS {
        let alg = ChevalleyAlgebra::from_label(label).unwrap();
        for a in 0..alg.dim() {
            for b in 0..alg.dim() {
                let x = alg.bracket(&basis(&alg, a), &basis(&alg, b));
                let y = alg.bracket(&basis(&alg, b), &basis(&alg, a));
                assert_eq!(x, vecops::neg(&y));
            }
        }
    }
}

#[test]
fn serre_relations() {
    for label in LABELS {
        let alg = ChevalleyAlgebra::from_label(label).unwrap();
        let n = alg.rank();
        for i in 0..n {
            let (ei, fi, hi) = (basis(&alg, alg.e(i)), basis(&alg, alg.f(i)), basis(&alg, alg.h(i)));
            assert_eq!(alg.bracket(&ei, &fi), hi);
            for j in 0..n {
                let (ej, fj) = (basis(&alg, alg.e(j)), basis(&alg, alg.f(j)));
                let hj = basis(&alg, alg.h(j));
                let a = alg.cartan().a(i, j);
                assert_eq!(alg.bracket(&hi, &ej), vecops::scale(&ej, &q(a)));
                assert_eq!(alg.bracket(&hi, &fj), vecops::scale(&fj, &q(-a)));
                assert!(alg.bracket(&hi, &hj).iter().all(Zero::is_zero));
                if i != j {
                    assert!(alg.bracket(&ei, &fj).iter().all(Zero::is_zero));
                    let ade = alg.ad::<Q>(&ei).pow((1 - a) as u32);
                    let adf = alg.ad::<Q>(&fi).pow((1 - a) as u32);
                    assert!(ade.mul_vec(&ej).iter().all(Zero::is_zero), "{label} Serre E {i} {j}");
                    assert!(adf.mul_vec(&fj).iter().all(Zero::is_zero), "{label} Serre F {i} {j}");
                }
            }
        }
    }
}

#[test]
fn structure_constants_are_chevalley() {
    for label in LABELS {
        let alg = ChevalleyAlgebra::from_label(label).unwrap();
        let rs = alg.roots();
        let mut all: Vec<Vec<i64>> = rs.positive().to_vec();
        all.extend(rs.positive().iter().map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()));
        for x in &all {
            for y in &all {
                let s: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
                if s.iter().all(|&c| c == 0) || !rs.is_root(&s) {
                    continue;
                }
                let p = rs.string_below(x, y);
                let n = alg.structure_constant(x, y);
                assert_eq!(n.abs(), p + 1, "{label}: |N| for {x:?} {y:?}");
                let nx: Vec<i64> = x.iter().map(|a| -a).collect();
                let ny: Vec<i64> = y.iter().map(|a| -a).collect();
                assert_eq!(alg.structure_constant(&nx, &ny), -n);
            }
        }
    }
}

#[test]
fn invariant_form() {
    for label in LABELS {
        let alg = ChevalleyAlgebra::from_label(label).unwrap();
        let d = alg.dim();
        let g = alg.gram();
        assert_eq!(g, &g.transpose());
        for a in 0..d {
            let ad = alg.ad::<Q>(&basis(&alg, a));
            // (ad x)^T G + G (ad x) = 0
            assert!(ad.transpose().mul(g).add(&g.mul(&ad)).is_zero(), "{label}: form not invariant under x_{a}");
        }
        assert!(!g.det().is_zero());
    }
}

#[test]
fn long_roots_have_length_two() {
    for label in ["B3", "C3", "G2", "A2"] {
        let alg = ChevalleyAlgebra::from_label(label).unwrap();
        let top = alg.roots().positive().last().unwrap().clone();
        assert_eq!(alg.roots().inner(&top, &top), q(2), "{label}");
        // the coroot of the highest root has (θ̌|θ̌) = 2 as well
        let h: Vec<Q> = alg.roots().coroot(&top);
        let mut x = vec![Q::zero(); alg.dim()];
        for (i, c) in h.into_iter().enumerate() {
            x[alg.h(i)] = c;
        }
        assert_eq!(alg.form(&x, &x), q(2), "{label}");
    }
}

#[test]
fn principal_triple() {
    let a2 = ChevalleyAlgebra::from_label("A2").unwrap();
    let p1: Vec<Q> = a2.p1();
    assert_eq!(p1[a2.e(0)], q(2));
    assert_eq!(p1[a2.e(1)], q(2));
    let a3 = ChevalleyAlgebra::from_label("A3").unwrap();
    let p1: Vec<Q> = a3.p1();
    assert_eq!([p1[a3.e(0)].clone(), p1[a3.e(1)].clone(), p1[a3.e(2)].clone()], [q(3), q(4), q(3)]);
    let a1 = ChevalleyAlgebra::from_label("A1").unwrap();
    assert_eq!(a1.p1::<Q>(), basis(&a1, a1.e(0)));
    for label in LABELS {
        let alg = ChevalleyAlgebra::from_label(label).unwrap();
        let (pm1, rho, p1) = alg.principal_triple::<Q>();
        assert_eq!(alg.bracket(&p1, &pm1), vecops::scale(&rho, &q(2)));
        assert_eq!(alg.bracket(&rho, &p1), p1);
        assert_eq!(alg.bracket(&rho, &pm1), vecops::neg(&pm1));
        for (_, pk) in alg.centralizer_basis::<Q>() {
            assert!(vecops::is_zero(&alg.bracket(&p1, &pk)));
        }
        assert_eq!(alg.exponents().len(), alg.rank());
    }
}

#[test]
fn grading() {
    for label in LABELS {
        let alg = ChevalleyAlgebra::from_label(label).unwrap();
        for a in 0..alg.dim() {
            for b in 0..alg.dim() {
                for (k, _) in alg.bracket_basis(a, b) {
                    assert_eq!(alg.height(*k), alg.height(a) + alg.height(b));
                }
            }
        }
    }
}

#[test]
fn graded_decomposition_against_centralizer() {
    // g_i = [p₋₁, g_{i+1}] ⊕ (a ∩ g_i) for i ≥ 1, checked by rank
    for label in LABELS {
        let alg = ChevalleyAlgebra::from_label(label).unwrap();
        let pm1: Vec<Q> = alg.pm1();
        let cent = alg.centralizer_basis::<Q>();
        for i in 1..alg.max_height() {
            let gi = alg.degree_indices(i);
            let mut vecs: Vec<Vec<Q>> = alg
                .degree_indices(i + 1)
                .into_iter()
                .map(|k| alg.bracket(&pm1, &basis(&alg, k)))
                .collect();
            let image_rank = Mat::from_rows(vecs.clone()).rank();
            let a_i: Vec<Vec<Q>> = cent.iter().filter(|(e, _)| *e as i64 == i).map(|(_, v)| v.clone()).collect();
            assert_eq!(image_rank + a_i.len(), gi.len(), "{label} degree {i}");
            vecs.extend(a_i);
            assert_eq!(Mat::from_rows(vecs).rank(), gi.len(), "{label} degree {i}");
        }
    }
}

#[test]
fn from_ad_and_log() {
    let alg = ChevalleyAlgebra::from_label("B3").unwrap();
    let x: Vec<Q> = (0..alg.dim()).map(|k| Q::new((((k * 7) % 5) as i64 - 2).into(), 3.into())).collect();
    assert_eq!(alg.from_ad(&alg.ad(&x)), x);
    let z: Vec<Q> = (0..alg.dim()).map(|k| if alg.height(k) > 0 { x[k].clone() } else { Q::zero() }).collect();
    let m = alg.exp_ad(&z);
    assert_eq!(alg.log_unipotent(&m), z);
}

#[test]
fn rejects_bad_cartan_matrices() {
    assert!(CartanDatum::new(vec![vec![2, -2], vec![-2, 2]]).is_err());
    assert!(CartanDatum::new(vec![vec![2, -1], vec![0, 2]]).is_err());
    assert!(CartanDatum::from_label("Q3").is_err());
}
