//! Cyclotomic Miura opers: construction from pole data, Riccati equations
//! and the reproduction procedures.

use cycloper_arith::{exp_integral, rational_antiderivative, CycloField, Field, Mat, Point, RatFunc};
use cycloper_lie::{vecops, ChevalleyAlgebra, WeylElement};
use num_traits::Zero;

use crate::connection::{
    gauge_transform, gauss_factorize_group, konst, regularize, solve_fundamental, Equivariant,
    Fundamental, GroupElement, Shape, Symmetry,
};
use crate::error::{CoreError, Result};
use crate::oper::MiuraOper;

/// A marked point `z` carrying the coweight `λ̌` and the residue `−w·λ̌`.
#[derive(Clone, Debug, PartialEq)]
pub struct Site<K> {
    pub z: K,
    pub coweight: Vec<K>,
    pub w: WeylElement,
}

/// An extra pole `x` with residue `−y·0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtraPole<K> {
    pub x: K,
    pub y: WeylElement,
}

fn check_orbits<K: CycloField>(sym: &Symmetry<K>, points: &[K]) -> Result<()> {
    let show = |p: &K| p.render(&["z"], Some(sym.order()));
    for (a, p) in points.iter().enumerate() {
        if p.is_zero() {
            return Err(CoreError::OrbitCollision(show(p), "0".into()));
        }
        for q in &points[a + 1..] {
            if sym.orbit(q).contains(p) {
                return Err(CoreError::OrbitCollision(show(p), show(q)));
            }
        }
    }
    Ok(())
}

/// `u = −w₀·λ̌₀/t − Σ_r Σ_i ν^r(w_i·λ̌_i)/(t−ω^r z_i) − Σ_r Σ_j ν^r(y_j·0)/(t−ω^r x_j)`.
pub fn build_miura<K: CycloField>(
    alg: &ChevalleyAlgebra,
    sym: &Symmetry<K>,
    lambda0: &[K],
    w0: &WeylElement,
    sites: &[Site<K>],
    extra: &[ExtraPole<K>],
) -> Result<MiuraOper<K>> {
    let n = alg.rank();
    if lambda0.len() != n || sites.iter().any(|s| s.coweight.len() != n) {
        return Err(CoreError::InvalidInput(format!("coweights must have {n} coordinates")));
    }
    if sym.nu().act_on_coweight(lambda0) != lambda0 {
        return Err(CoreError::InvalidInput("λ̌₀ is not ν-invariant".into()));
    }
    if !w0.commutes_with(sym.nu().perm()) {
        return Err(CoreError::InvalidInput("w₀ is not in W^ν".into()));
    }
    let points: Vec<K> = sites.iter().map(|s| s.z.clone()).chain(extra.iter().map(|e| e.x.clone())).collect();
    check_orbits(sym, &points)?;

    let mut coords: Vec<RatFunc<K>> = vecops::zeros(n);
    let add_pole = |coords: &mut Vec<RatFunc<K>>, res: &[K], p: &K| {
        let pole = RatFunc::simple_pole(p);
        for (c, r) in coords.iter_mut().zip(res) {
            if !r.is_zero() {
                *c = c.clone() - &(pole.clone() * &konst(r));
            }
        }
    };
    add_pole(&mut coords, &w0.act_shifted(lambda0), &K::zero());
    let zero: Vec<K> = vecops::zeros(n);
    let mut residues: Vec<(K, Vec<K>)> = Vec::new();
    for s in sites {
        residues.push((s.z.clone(), s.w.act_shifted(&s.coweight)));
    }
    for e in extra {
        residues.push((e.x.clone(), e.y.act_shifted(&zero)));
    }
    for (p, res) in &residues {
        for r in 0..sym.order() as usize {
            add_pole(&mut coords, &sym.nu_pow_coweight(res, r), &(sym.omega_pow(r as i64) * p));
        }
    }
    Ok(MiuraOper::from_coweight_coords(alg, &coords).with_flag(alg, sym))
}

/// Choice of integration constant for `f′ + f² + q f = 0`.
#[derive(Clone, Debug, PartialEq)]
pub enum RiccatiMode<K> {
    /// `f = Q/(∫Q + C)` with `Q = exp(−∫q)` and `∫Q` vanishing at zero
    /// to the order produced by the antiderivative.
    General(K),
    Zero,
    /// The constant making `f` singular at the origin.
    SingularAtOrigin,
}

/// Rational solution of `f′ + f² + q f = 0`.
pub fn riccati_solve<K: CycloField>(q: &RatFunc<K>, mode: &RiccatiMode<K>, hints: &[K]) -> Result<RatFunc<K>> {
    if *mode == RiccatiMode::Zero {
        return Ok(RatFunc::zero());
    }
    let big_q = exp_integral(&-q.clone(), hints)
        .map_err(|e| CoreError::NoRationalSolution(format!("exp(−∫q) is not rational: {e:?}")))?;
    let int_q = rational_antiderivative(&big_q, hints).map_err(|o| {
        let res: Vec<String> = o.residues.iter().map(|(p, r)| format!("{p}: {r}")).collect();
        CoreError::NoRationalSolution(format!("∫exp(−∫q) has residues {}", res.join(", ")))
    })?;
    let c = match mode {
        RiccatiMode::General(c) => c.clone(),
        RiccatiMode::SingularAtOrigin => {
            let v = int_q.eval(&K::zero()).ok_or_else(|| {
                CoreError::NoRationalSolution("∫exp(−∫q) is singular at the origin".into())
            })?;
            -v
        }
        RiccatiMode::Zero => unreachable!(),
    };
    let den = int_q + &konst(&c);
    if den.is_zero() {
        return Err(CoreError::NoRationalSolution("integration constant cancels the antiderivative".into()));
    }
    Ok(big_q / &den)
}

/// `f′ + f² + q f`.
pub fn riccati_residual<K: Field>(q: &RatFunc<K>, f: &RatFunc<K>) -> RatFunc<K> {
    f.derivative() + &(f.clone() * f) + &(q.clone() * f)
}

/// Residues of `u dt` at the origin and at infinity before and after a
/// reproduction, in coweight coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct ResidueLedger<K> {
    pub res0_before: Vec<K>,
    pub res0_after: Vec<K>,
    pub res_inf_before: Vec<K>,
    pub res_inf_after: Vec<K>,
}

impl<K: CycloField> ResidueLedger<K> {
    fn new(alg: &ChevalleyAlgebra, before: &MiuraOper<K>, after: &MiuraOper<K>) -> Self {
        ResidueLedger {
            res0_before: before.residue(alg, &Point::origin()),
            res0_after: after.residue(alg, &Point::origin()),
            res_inf_before: before.residue(alg, &Point::Infinity),
            res_inf_after: after.residue(alg, &Point::Infinity),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    RegularAtOrigin,
    SingularAtOrigin,
}

#[derive(Clone, Debug)]
pub struct Reproduction<K: Field> {
    pub miura: MiuraOper<K>,
    pub gauge: GroupElement<K>,
    pub ledger: ResidueLedger<K>,
    pub branch: Branch,
}

fn branch_of<K: Field>(fs: &[&RatFunc<K>]) -> Branch {
    if fs.iter().all(|f| f.is_regular_at(&Point::origin())) {
        Branch::RegularAtOrigin
    } else {
        Branch::SingularAtOrigin
    }
}

fn finish<K: CycloField>(
    alg: &ChevalleyAlgebra,
    old: &MiuraOper<K>,
    new: MiuraOper<K>,
    gauge: GroupElement<K>,
    branch: Branch,
) -> Result<Reproduction<K>> {
    if gauge_transform(alg, &old.connection(alg), &gauge) != new.connection(alg) {
        return Err(CoreError::Internal("gauge transform does not produce the reproduced Miura oper".into()));
    }
    let ledger = ResidueLedger::new(alg, old, &new);
    Ok(Reproduction { miura: new, gauge, ledger, branch })
}

/// Reproduction in the direction of a single simple root: `g = exp(f E_k)`,
/// `u ↦ u + f α̌_k`, for `f` solving the Riccati equation of `q = ⟨α_k, u⟩`.
pub fn reproduce_simple<K: CycloField>(
    alg: &ChevalleyAlgebra,
    miura: &MiuraOper<K>,
    k: usize,
    f: &RatFunc<K>,
) -> Result<Reproduction<K>> {
    let q = miura.pairing(alg, k);
    let res = riccati_residual(&q, f);
    if !res.is_zero() {
        return Err(CoreError::RiccatiViolated(res.render_with(&["t", "z"], None)));
    }
    let mut x: Vec<RatFunc<K>> = vecops::zeros(alg.dim());
    x[alg.e(k)] = f.clone();
    let mut u = miura.u.clone();
    u[k] = u[k].clone() + f;
    finish(alg, miura, MiuraOper::new(u), GroupElement::exp(alg, &x), branch_of(&[f]))
}

fn orbit_of(perm: &[usize], k: usize) -> Vec<usize> {
    let mut out = vec![k];
    let mut i = perm[k];
    while i != k {
        out.push(i);
        i = perm[i];
    }
    out
}

/// `ω^{-p} f(ω⁻¹ t)`.
fn rotate<K: CycloField>(sym: &Symmetry<K>, f: &RatFunc<K>, p: i64) -> RatFunc<K> {
    f.scale_var(&sym.omega_pow(-1)) * &konst(&sym.omega_pow(-p))
}

fn require_cyclotomic<K: CycloField>(alg: &ChevalleyAlgebra, sym: &Symmetry<K>, miura: &MiuraOper<K>) -> Result<()> {
    if !miura.check_cyclotomic(alg, sym) {
        return Err(CoreError::InvalidInput("input Miura oper is not ς-equivariant".into()));
    }
    Ok(())
}

/// Cyclotomic reproduction along a `ν`-orbit of mutually orthogonal simple
/// roots, seeded by `f_k` and propagated by `f_{ν(i)}(t) = ω⁻¹ f_i(ω⁻¹ t)`.
pub fn reproduce_orbit_a1<K: CycloField>(
    alg: &ChevalleyAlgebra,
    sym: &Symmetry<K>,
    miura: &MiuraOper<K>,
    k: usize,
    f_k: &RatFunc<K>,
) -> Result<Reproduction<K>> {
    require_cyclotomic(alg, sym, miura)?;
    let orbit = orbit_of(sym.nu().perm(), k);
    if orbit.iter().any(|&i| orbit.iter().any(|&j| i != j && alg.cartan().a(i, j) != 0)) {
        return Err(CoreError::InvalidInput(format!("orbit of {k} is not of type A1")));
    }
    let res = riccati_residual(&miura.pairing(alg, k), f_k);
    if !res.is_zero() {
        return Err(CoreError::RiccatiViolated(res.render_with(&["t", "z"], None)));
    }
    let mut fs = vec![f_k.clone()];
    for _ in 1..orbit.len() {
        let next = rotate(sym, fs.last().unwrap(), 1);
        fs.push(next);
    }
    let mut x: Vec<RatFunc<K>> = vecops::zeros(alg.dim());
    let mut u = miura.u.clone();
    for (&i, f) in orbit.iter().zip(&fs) {
        x[alg.e(i)] = f.clone();
        u[i] = u[i].clone() + f;
    }
    let g = GroupElement::exp(alg, &x);
    if !g.is_equivariant(sym.varsigma()) {
        return Err(CoreError::CyclotomyObstruction(format!(
            "ω⁻¹f(ω⁻¹t) around the orbit of {k} does not return to f_{k}"
        )));
    }
    let rep = finish(alg, miura, MiuraOper::new(u), g, branch_of(&[f_k]))?;
    Ok(Reproduction { miura: rep.miura.with_flag(alg, sym), ..rep })
}

/// Seed for a reproduction along an orbit of type `A₂`.
#[derive(Clone, Debug)]
pub enum A2Seed<K: Field> {
    /// `(f₁, f₂, f₃)` at the reference root, multiplying `E_k + E_k̄`,
    /// `E_k − E_k̄` and `[E_k, E_k̄]`.
    Functions(RatFunc<K>, RatFunc<K>, RatFunc<K>),
    /// Initial value `g₀ ∈ N^ϑ` of the regularized gauge parameter.
    Generic { lambda0: Vec<i64>, g0: Mat<K>, hints: Vec<K> },
}

/// Residuals of the coupled system for `(f₁, f₂, f₃)` with `q = ⟨α_i, u⟩`,
/// `q̄ = ⟨α_ī, u⟩`.
pub fn a2_system_residuals<K: Field>(
    q: &RatFunc<K>,
    qb: &RatFunc<K>,
    f1: &RatFunc<K>,
    f2: &RatFunc<K>,
    f3: &RatFunc<K>,
) -> [RatFunc<K>; 3] {
    let c = |n: i64| RatFunc::from_i64(n);
    let s = q.clone() + qb;
    let d = q.clone() - qb;
    let r1 = c(2) * &f1.derivative() + &(f1.clone() * f1) + &(c(3) * f2 * f2) + &(s.clone() * f1) + &(d.clone() * f2);
    let r2 = c(2) * &f2.derivative() + &(c(4) * f1 * f2) - &(c(2) * f3) + &(s.clone() * f2) + &(d * f1);
    let r3 = c(2) * &f3.derivative()
        + &(c(2) * f1 * f3)
        + &(f2.clone() * &(f1.clone() * f1 - &(f2.clone() * f2)))
        + &(c(2) * &s * f3);
    [r1, r2, r3]
}

/// Cyclotomic reproduction along a `ν`-orbit of type `A₂^{|I|/2}`.
pub fn reproduce_orbit_a2<K: CycloField>(
    alg: &ChevalleyAlgebra,
    sym: &Symmetry<K>,
    miura: &MiuraOper<K>,
    k: usize,
    seed: &A2Seed<K>,
) -> Result<Reproduction<K>> {
    let (f1, f2, f3) = match seed {
        A2Seed::Generic { lambda0, g0, hints } => return reproduce_generic(alg, sym, miura, lambda0, g0, hints),
        A2Seed::Functions(a, b, c) => (a, b, c),
    };
    require_cyclotomic(alg, sym, miura)?;
    let orbit = orbit_of(sym.nu().perm(), k);
    if orbit.len() % 2 != 0 {
        return Err(CoreError::InvalidInput(format!("orbit of {k} has odd length")));
    }
    let half = orbit.len() / 2;
    let bar = |pos: usize| orbit[pos + half];
    for pos in 0..half {
        let (i, ib) = (orbit[pos], bar(pos));
        let ok = alg.cartan().a(i, ib) == -1
            && orbit.iter().all(|&j| j == i || j == ib || alg.cartan().a(i, j) == 0);
        if !ok {
            return Err(CoreError::InvalidInput(format!("orbit of {k} is not of type A2")));
        }
    }
    let res = a2_system_residuals(&miura.pairing(alg, k), &miura.pairing(alg, bar(0)), f1, f2, f3);
    if let Some(r) = res.iter().find(|r| !r.is_zero()) {
        return Err(CoreError::SeedNotSolution(r.render_with(&["t", "z"], None)));
    }
    let mut seeds = vec![(f1.clone(), f2.clone(), f3.clone())];
    for _ in 1..half {
        let (a, b, c) = seeds.last().unwrap();
        seeds.push((rotate(sym, a, 1), rotate(sym, b, 1), rotate(sym, c, 2)));
    }
    let mut x: Vec<RatFunc<K>> = vecops::zeros(alg.dim());
    let mut u = miura.u.clone();
    for (pos, (a, b, c)) in seeds.iter().enumerate() {
        let (i, ib) = (orbit[pos], bar(pos));
        x[alg.e(i)] = x[alg.e(i)].clone() + a + b;
        x[alg.e(ib)] = x[alg.e(ib)].clone() + a - b;
        let e_i: Vec<RatFunc<K>> = alg.basis_vector(alg.e(i));
        let e_ib: Vec<RatFunc<K>> = alg.basis_vector(alg.e(ib));
        x = vecops::add(&x, &vecops::scale(&alg.bracket(&e_i, &e_ib), c));
        u[i] = u[i].clone() + a + b;
        u[ib] = u[ib].clone() + a - b;
    }
    let g = GroupElement::exp(alg, &x);
    if !g.is_equivariant(sym.varsigma()) {
        return Err(CoreError::CyclotomyObstruction(format!("the gauge parameter along the orbit of {k} is not ς-invariant")));
    }
    let rep = finish(alg, miura, MiuraOper::new(u), g, branch_of(&[f1, f2, f3]))?;
    Ok(Reproduction { miura: rep.miura.with_flag(alg, sym), ..rep })
}

/// Reproduction from an initial value `g₀ ∈ N^ϑ`: factorize `Y g₀⁻¹ = n⁻¹ Ỹ`
/// where `Y` solves the regularized connection with `Y(0) = 1`, and gauge by
/// `g = t^{λ̌₀} n t^{−λ̌₀}`.
pub fn reproduce_generic<K: CycloField>(
    alg: &ChevalleyAlgebra,
    sym: &Symmetry<K>,
    miura: &MiuraOper<K>,
    lambda0: &[i64],
    g0: &Mat<K>,
    hints: &[K],
) -> Result<Reproduction<K>> {
    require_cyclotomic(alg, sym, miura)?;
    let g0_el = GroupElement::constant(g0)?;
    if !g0_el.in_unipotent(alg) {
        return Err(CoreError::InvalidInput("g₀ is not in N".into()));
    }
    let theta = sym.vartheta(alg, lambda0)?;
    if theta.act_on_group(g0) != *g0 {
        return Err(CoreError::FixedPointViolation);
    }
    let reg = regularize(alg, &miura.connection(alg), lambda0);
    if !reg.in_borel_minus(alg) {
        return Err(CoreError::InvalidInput("regularized connection is not b₋-valued; λ̌₀ does not match res₀".into()));
    }
    let y = match solve_fundamental(alg, &reg, &K::zero(), &Mat::identity(alg.dim()), hints)? {
        Fundamental::Solution(y) => y,
        Fundamental::Obstruction(o) => {
            return Err(CoreError::Monodromy {
                residues: o.residues.iter().map(|(p, r)| (p.to_string(), r.to_string())).collect(),
                level: o.level,
            })
        }
    };
    let (n, _ytilde) = gauss_factorize_group(alg, &y.compose(&g0_el.inverse()))?;
    let neg: Vec<i64> = lambda0.iter().map(|c| -c).collect();
    let g = GroupElement::torus(alg, lambda0).compose(&n).compose(&GroupElement::torus(alg, &neg));
    let new_conn = gauge_transform(alg, &miura.connection(alg), &g);
    if new_conn.shape(alg) != Shape::Oper || (0..alg.dim()).any(|k| alg.height(k) > 0 && !new_conn.coeffs()[k].is_zero()) {
        return Err(CoreError::Internal("generic reproduction left the Miura locus".into()));
    }
    if n.eval(&K::zero()).as_ref() != Some(g0) {
        return Err(CoreError::Internal("regularized gauge parameter does not start at g₀".into()));
    }
    let new = MiuraOper::new(new_conn.cartan_part(alg)).with_flag(alg, sym);
    let ledger = ResidueLedger::new(alg, miura, &new);
    Ok(Reproduction { miura: new, gauge: g, ledger, branch: Branch::RegularAtOrigin })
}
