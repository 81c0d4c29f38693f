//! Closed-form solutions and shared constructions used as test oracles.

use cycloper::arith::{Cyclo, Field, Func, Mat};
use cycloper::lie::{theta_fixed_nilpotent, vecops, ChevalleyAlgebra, WeylElement};
use cycloper::*;
use num_traits::Zero;

use super::*;

pub struct Sl4 {
    pub alg: ChevalleyAlgebra,
    pub sym: Symmetry<Cyclo>,
    pub miura: MiuraOper<Cyclo>,
    pub hints: Vec<Cyclo>,
}

pub fn sl4(s: u32, eta: i64, kappa: i64, z: i64) -> Sl4 {
    let alg = alg("A3");
    let sym = sym(&alg, &[vec![0, 2]], 2 * s);
    let l0 = vec![int(eta), int(kappa), int(eta)];
    let site = Site { z: int(z), coweight: vec![int(1), int(0), int(0)], w: WeylElement::identity(3) };
    let miura = build_miura(&alg, &sym, &l0, &WeylElement::identity(3), &[site], &[]).unwrap();
    let mut hints = sym.orbit(&int(z));
    hints.push(int(0));
    Sl4 { alg, sym, miura, hints }
}

/// `S t^{S−1}/(t^S ∓ z^S)`.
pub fn orbit_sum(s: i64, z: i64, sign: i64) -> Func {
    let zs = int(z).pow_i(s);
    mono(int(s), s - 1) / &(mono(int(1), s) + &konst(&(zs * &int(-sign))))
}

/// `(η+1)(S+η+1) t^η (t^S − z^S) / ((η+1) t^{S+η+1} − (S+η+1) z^S t^{η+1} + A)`.
pub fn sl4_f1(s: i64, eta: i64, z: i64, a: i64) -> Func {
    let zs = int(z).pow_i(s);
    let num = mono(int((eta + 1) * (s + eta + 1)), eta) * &(mono(int(1), s) - &konst(&zs));
    let den = mono(int(eta + 1), s + eta + 1) - &mono(zs * &int(s + eta + 1), eta + 1) + &kint(a);
    num / &den
}

pub fn sl3(eta: i64, t_order: u32) -> (ChevalleyAlgebra, Symmetry<Cyclo>, MiuraOper<Cyclo>) {
    let alg = alg("A2");
    let s = sym(&alg, &[vec![0, 1]], t_order);
    let l0 = vec![int(eta), int(eta)];
    let m = build_miura(&alg, &s, &l0, &WeylElement::identity(2), &[], &[]).unwrap();
    (alg, s, m)
}

/// `f̃₁, f̃₂, f̃₃` for initial data `(a, b, c)` of the regularized functions.
pub fn tilde_f(mu: i64, a: &Cyclo, b: &Cyclo, c: &Cyclo) -> (Func, Func, Func) {
    let big = |a: &Cyclo, b: &Cyclo, c: &Cyclo| {
        let p = a.clone() * b + &(c.clone() * &int(2));
        let den = mono(p.clone(), 2 * mu) + &mono(a.clone() * &int(4 * mu), mu) + &kint(4 * mu * mu);
        let num = mono(int(2 * mu), mu - 1) * &(mono(p, mu) + &konst(&(a.clone() * &int(2 * mu))));
        (num / &den.clone(), den)
    };
    let (f1, d1) = big(a, b, c);
    let (f2, d2) = big(b, a, &-c.clone());
    let ab = a.clone() * b;
    let k = (ab.clone() + &(c.clone() * &int(2))) * b - &((ab - &(c.clone() * &int(2))) * a);
    let num = mono(int(4 * mu * mu * mu), 2 * mu - 2) * &(mono(k, mu) + &konst(&(c.clone() * &int(4 * mu))));
    (f1, f2, num / &(d1 * &d2))
}

pub fn eigen_seed(mu: i64, a: &Cyclo, b: &Cyclo, c: &Cyclo) -> (Func, Func, Func) {
    let (t1, t2, t3) = tilde_f(mu, a, b, c);
    let half = konst(&frac(1, 2));
    ((t1.clone() + &t2) * &half, (t1 - &t2) * &half, t3)
}

pub fn case1(mu: i64, a: &Cyclo) -> (Func, Func, Func) {
    let f1 = mono(a.clone() * &int(2 * mu), mu - 1) / &(mono(a.clone(), mu) + &kint(2 * mu));
    (f1, Func::zero(), Func::zero())
}

pub fn case2(mu: i64, a: &Cyclo) -> (Func, Func, Func) {
    let a2 = a.clone() * a;
    let m2 = mu * mu;
    let r = mono(a2.clone() * &a2, 4 * mu) - &mono(a2.clone() * &int(24 * m2), 2 * mu) + &kint(16 * m2 * m2);
    let f1 = mono(a2.clone() * &int(2 * mu), 2 * mu - 1) * &(mono(a2.clone(), 2 * mu) - &kint(12 * m2)) / &r;
    let f2 = mono(a.clone() * &int(4 * m2), mu - 1) * &(mono(a2.clone(), 2 * mu) + &kint(4 * m2)) / &r;
    let f3 = mono(a2 * a * &int(8 * m2 * mu), 3 * mu - 2) / &r;
    (f1, f2, f3)
}

pub fn case3(mu: i64, c: &Cyclo) -> (Func, Func, Func) {
    let c2 = c.clone() * c;
    let m4 = mu * mu * mu * mu;
    let den = mono(c2.clone(), 4 * mu) - &kint(4 * m4);
    let f1 = mono(c2 * &int(2 * mu), 4 * mu - 1) / &den;
    let f2 = mono(c.clone() * &int(-4 * mu * mu * mu), 2 * mu - 1) / &den;
    let f3 = mono(c.clone() * &int(-4 * m4), 2 * mu - 2) / &den;
    (f1, f2, f3)
}

pub fn residuals_vanish(alg: &ChevalleyAlgebra, m: &MiuraOper<Cyclo>, f: &(Func, Func, Func)) -> bool {
    let q = m.pairing(alg, 0);
    let qb = m.pairing(alg, 1);
    a2_system_residuals(&q, &qb, &f.0, &f.1, &f.2).iter().all(|r| r.is_zero())
}

/// `exp(aE₁ + bE₂ + c[E₁, E₂])` at the level of constants.
pub fn sl3_g0(alg: &ChevalleyAlgebra, a: &Cyclo, b: &Cyclo, c: &Cyclo) -> Mat<Cyclo> {
    let e1: Vec<Cyclo> = alg.basis_vector(alg.e(0));
    let e2: Vec<Cyclo> = alg.basis_vector(alg.e(1));
    let e12 = alg.bracket(&e1, &e2);
    let x = vecops::add(&vecops::add(&vecops::scale(&e1, a), &vecops::scale(&e2, b)), &vecops::scale(&e12, c));
    alg.exp_ad(&x)
}

pub fn check_generic(alg: &ChevalleyAlgebra, s: &Symmetry<Cyclo>, m: &MiuraOper<Cyclo>, l0: &[i64], g0: &Mat<Cyclo>) {
    let rep = reproduce_generic(alg, s, m, l0, g0, &[]).unwrap();
    assert!(rep.miura.cyclotomic);
    assert_eq!(rep.ledger.res0_after, rep.ledger.res0_before);
    let neg: Vec<i64> = l0.iter().map(|x| -x).collect();
    let gr = GroupElement::torus(alg, &neg).compose(&rep.gauge).compose(&GroupElement::torus(alg, l0));
    assert_eq!(gr.eval(&int(0)).as_ref(), Some(g0));
    let flag = flag_position(alg, l0, &rep.gauge).unwrap();
    assert!(flag.w.is_identity());
    assert_eq!(flag.n, g0.inverse().unwrap());
}

/// `Σ_{β>0} c_β t^{k_β − ht β} E_β`, which is `ς`-equivariant for `ν = id`
/// whenever every `k_β` is a multiple of `T`.
/// `d + p₋₁ − λ̌₀/t`.
pub fn miura_at_origin(alg: &ChevalleyAlgebra, s: &Symmetry<Cyclo>, l0: &[i64]) -> MiuraOper<Cyclo> {
    let l0c: Vec<Cyclo> = l0.iter().map(|&x| int(x)).collect();
    build_miura(alg, s, &l0c, &WeylElement::identity(alg.rank()), &[], &[]).unwrap()
}

/// `exp X` for a random integral `X` in the `ϑ`-fixed part of `n`, or `None`
/// when that part is zero.
pub fn random_fixed_unipotent(alg: &ChevalleyAlgebra, s: &Symmetry<Cyclo>, l0: &[i64], rng: &mut Lcg) -> Option<Mat<Cyclo>> {
    let theta = s.vartheta(alg, l0).unwrap();
    let fixed = theta_fixed_nilpotent(alg, &theta);
    if fixed.basis.is_empty() {
        return None;
    }
    let mut x: Vec<Cyclo> = vecops::zeros(alg.dim());
    for v in &fixed.basis {
        x = vecops::add(&x, &vecops::scale(v, &int(rng.nonzero(-3, 3))));
    }
    Some(alg.exp_ad(&x))
}

pub fn graded_nilpotent(alg: &ChevalleyAlgebra, rng: &mut Lcg, t_order: i64) -> Vec<Func> {
    let mut x: Vec<Func> = vecops::zeros(alg.dim());
    for k in alg.positive_indices() {
        let c = rng.range(-2, 2);
        let m = rng.range(0, 1) * t_order;
        x[k] = mono(int(c), m - alg.height(k));
    }
    x
}

pub fn model(label: &str, cycles: &[Vec<usize>], t_order: u32, sites: Vec<GaudinSite<Cyclo>>, colours: Vec<usize>, roots: Vec<Cyclo>) -> GaudinModel<Cyclo> {
    let g = alg(label);
    let s = sym(&g, cycles, t_order);
    GaudinModel::new(&g, s.varsigma(), sites, colours, roots).unwrap()
}

pub fn site(z: i64, weight: &[i64]) -> GaudinSite<Cyclo> {
    GaudinSite { z: int(z), weight: weight.iter().map(|&c| int(c)).collect() }
}

/// Distinct positive integers, so that the rotation orbits of all points are disjoint.
pub fn distinct_points(rng: &mut Lcg, n: usize) -> Vec<i64> {
    let mut out = Vec::new();
    while out.len() < n {
        let x = rng.range(1, 12);
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

pub fn families() -> Vec<(&'static str, Vec<Vec<usize>>, u32)> {
    vec![("A1", vec![], 1), ("A1", vec![], 2), ("A2", vec![vec![0, 1]], 2), ("A2", vec![], 2), ("A2", vec![], 3)]
}

/// Chooses site-weight coordinates so that the Bethe equations hold: they are
/// affine in the weights, so one probe per unknown fixes the linear system.
pub fn solve_for_weights(m: &mut GaudinModel<Cyclo>) {
    let n = m.roots.len();
    let unknown = |m: &mut GaudinModel<Cyclo>, k: usize, v: Cyclo| {
        let c = m.colours[k];
        m.sites[k].weight[c] = v;
    };
    for k in 0..n {
        unknown(m, k, int(0));
    }
    let base = m.bethe_residuals();
    let mut cols = Vec::new();
    for k in 0..n {
        unknown(m, k, int(1));
        let r = m.bethe_residuals();
        cols.push(r.iter().zip(&base).map(|(a, b)| a.clone() - b).collect::<Vec<_>>());
        unknown(m, k, int(0));
    }
    let a = Mat::from_fn(n, n, |i, j| cols[j][i].clone());
    let rhs: Vec<Cyclo> = base.iter().map(|b| -b.clone()).collect();
    let sol = a.solve_unique(&rhs).expect("Bethe system is regular for these points");
    for (k, v) in sol.into_iter().enumerate() {
        unknown(m, k, v);
    }
}

pub fn regular_at_roots(m: &GaudinModel<Cyclo>) -> Vec<bool> {
    let lg = m.dual().algebra();
    let conn = m.miura_from_bethe().unwrap().connection(lg);
    let s = m.dual_symmetry().unwrap();
    if m.roots.len() == 1 {
        return vec![is_regular_at(lg, &conn, &m.roots[0], Some(&s)).unwrap()];
    }
    let can = canonical_representative(lg, &conn, None).unwrap();
    m.roots.iter().map(|x| can.is_regular_at(&s.orbit(x))).collect()
}
