//! Opers: the canonical representative `d + p₋₁ + Σ u_k p_k`, residues at
//! regular singularities and the classification of Miura opers by their
//! pole data.

use cycloper_arith::{partial_fractions, CycloField, Field, Point, RatFunc, Q};
use cycloper_lie::{
    finite_canonical, linking_element, vecops, CartanDatum, ChevalleyAlgebra, FiniteOperClass, WeylElement, WeylGroup,
};
use num_traits::{One, Zero};

use crate::connection::{konst, render_vec, Connection, Equivariant, GroupElement, Shape, Symmetry};
use crate::error::{CoreError, Result};

/// `d + p₋₁ + Σ u_k p_k` together with the gauge transformation reaching it.
#[derive(Clone, Debug)]
pub struct CanonicalOper<K: Field> {
    /// `u_k`, ordered like the centralizer basis.
    pub coeffs: Vec<RatFunc<K>>,
    /// Exponent of each `p_k`.
    pub exponents: Vec<usize>,
    /// `G` with `G·∇ = canonical`.
    pub gauge: GroupElement<K>,
    /// `m ∈ n` with `exp(m)·canonical = ∇`.
    pub m: Vec<RatFunc<K>>,
    /// Equivariance of the input under `ς`, when a symmetry was supplied.
    pub cyclotomic: Option<bool>,
}

impl<K: Field> CanonicalOper<K> {
    pub fn connection(&self, alg: &ChevalleyAlgebra) -> Connection<K> {
        let mut v: Vec<RatFunc<K>> = vecops::zeros(alg.dim());
        for ((_, pk), u) in alg.centralizer_basis::<RatFunc<K>>().iter().zip(&self.coeffs) {
            v = vecops::add(&v, &vecops::scale(pk, u));
        }
        Connection::oper(alg, &v)
    }

    /// Regularity at each of the given points.
    pub fn is_regular_at(&self, points: &[K]) -> bool {
        points.iter().all(|p| self.coeffs.iter().all(|u| u.is_regular_at(&Point::Finite(p.clone()))))
    }

    /// Coefficient of `p₁`.
    pub fn u1(&self) -> &RatFunc<K> {
        let k = self.exponents.iter().position(|&e| e == 1).expect("exponent 1 present");
        &self.coeffs[k]
    }
}

fn require_oper<K: Field>(alg: &ChevalleyAlgebra, conn: &Connection<K>) -> Result<()> {
    if conn.shape(alg) != Shape::Oper && conn.shape(alg) != Shape::Cartan {
        return Err(CoreError::MalformedOper("expected d + p₋₁ + b(t)".into()));
    }
    if conn.shape(alg) == Shape::Cartan {
        return Err(CoreError::MalformedOper("p₋₁ component missing".into()));
    }
    Ok(())
}

/// Drinfeld–Sokolov reduction to the canonical representative, one height
/// at a time.
pub fn canonical_representative<K: CycloField>(
    alg: &ChevalleyAlgebra,
    conn: &Connection<K>,
    sym: Option<&Symmetry<K>>,
) -> Result<CanonicalOper<K>> {
    require_oper(alg, conn)?;
    let exponents = alg.exponents();
    let mut u: Vec<RatFunc<K>> = vecops::zeros(exponents.len());
    let mut cur = conn.coeffs().to_vec();
    let mut gauge = GroupElement::identity(alg);
    for i in 0..=alg.max_height() {
        let (y, cs) = alg.ds_split(i, &alg.degree_part(&cur, i));
        for (k, c) in cs {
            u[k] = c;
        }
        if vecops::is_zero(&y) {
            continue;
        }
        cur = alg.exp_ad_apply(&y, &cur);
        let mut term: Vec<RatFunc<K>> = y.iter().map(|f| f.derivative()).collect();
        let mut k = 1i64;
        while !vecops::is_zero(&term) {
            cur = vecops::sub(&cur, &term);
            k += 1;
            term = vecops::scale(&alg.bracket(&y, &term), &RatFunc::from_i64(k).inv());
        }
        gauge = GroupElement::exp(alg, &y).compose(&gauge);
    }
    let m = alg.log_unipotent(gauge.inverse_matrix());
    let out = CanonicalOper { coeffs: u, exponents, gauge, m, cyclotomic: sym.map(|s| conn.is_equivariant(s.varsigma())) };
    if out.connection(alg).coeffs() != cur.as_slice() {
        return Err(CoreError::Internal("reduction did not reach p₋₁ + a".into()));
    }
    Ok(out)
}

/// `u₁` from the degree 0 and 1 parts of `∇ = d + p₋₁ + v₀ + v₁ + …`:
/// `(½(v₀|v₀) + (ρ̌|v₀′) + (p₋₁|v₁)) / 2(ρ̌|ρ̌)`.
pub fn u1_coefficient<K: Field>(alg: &ChevalleyAlgebra, conn: &Connection<K>) -> Result<RatFunc<K>> {
    require_oper(alg, conn)?;
    let v0 = alg.degree_part(conn.coeffs(), 0);
    let v1 = alg.degree_part(conn.coeffs(), 1);
    let dv0: Vec<RatFunc<K>> = v0.iter().map(|f| f.derivative()).collect();
    let rho: Vec<RatFunc<K>> = alg.rho_check();
    let pm1: Vec<RatFunc<K>> = alg.pm1();
    let half = RatFunc::from_rational(&Q::new(1.into(), 2.into()));
    let num = alg.form(&v0, &v0) * &half + &alg.form(&rho, &dv0) + &alg.form(&pm1, &v1);
    Ok(num / &(alg.form(&rho, &rho) * &RatFunc::from_i64(2)))
}

/// Regularity of the oper at `x` and, when a symmetry is given, along its
/// rotation orbit.
pub fn is_regular_at<K: CycloField>(
    alg: &ChevalleyAlgebra,
    conn: &Connection<K>,
    x: &K,
    sym: Option<&Symmetry<K>>,
) -> Result<bool> {
    let can = canonical_representative(alg, conn, None)?;
    Ok(can.is_regular_at(&sym.map_or_else(|| vec![x.clone()], |s| s.orbit(x))))
}

/// Class of the residue at a regular singularity, as the coefficients of the
/// canonical element `p₋₁ + Σ c_k p_k` of the conjugacy class in `p₋₁ + b`.
pub fn oper_residue<K: CycloField>(
    alg: &ChevalleyAlgebra,
    conn: &Connection<K>,
    at: &Point<K>,
) -> Result<FiniteOperClass<K>> {
    canonical_residue(alg, &canonical_representative(alg, conn, None)?, at)
}

/// [`oper_residue`] for an oper already in canonical form.
pub fn canonical_residue<K: CycloField>(
    alg: &ChevalleyAlgebra,
    can: &CanonicalOper<K>,
    at: &Point<K>,
) -> Result<FiniteOperClass<K>> {
    let rho: Vec<K> = alg.rho_check();
    let pm1: Vec<K> = alg.pm1();
    let basis = alg.centralizer_basis::<K>();
    let mut x = match at {
        Point::Finite(_) => vecops::sub(&pm1, &rho),
        Point::Infinity => vecops::add(&pm1, &rho),
    };
    for (idx, ((d, pk), u)) in basis.iter().zip(&can.coeffs).enumerate() {
        let e = *d as i64 + 1;
        let leading = match at {
            Point::Finite(_) => {
                if u.order_at(at).is_some_and(|v| v < -e) {
                    return Err(CoreError::NotRegularSingular { point: at.render(&["t", "z"], None), component: idx });
                }
                u.laurent(at, (e + 1) as usize).coeff(-e)
            }
            Point::Infinity => {
                if u.order_at(at).is_some_and(|v| v < e) {
                    return Err(CoreError::NotRegularSingular { point: "∞".into(), component: idx });
                }
                let c = u.laurent(at, (e + 1) as usize).coeff(e);
                if *d % 2 == 0 {
                    -c
                } else {
                    c
                }
            }
        };
        x = vecops::add(&x, &vecops::scale(pk, &leading));
    }
    Ok(finite_canonical(alg, &x).0)
}

/// Miura oper `d + p₋₁ + u(t)`, `u` stored in the basis `α̌_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct MiuraOper<K: Field> {
    pub u: Vec<RatFunc<K>>,
    pub cyclotomic: bool,
}

impl<K: CycloField> MiuraOper<K> {
    pub fn new(u: Vec<RatFunc<K>>) -> Self {
        MiuraOper { u, cyclotomic: false }
    }

    /// From coweight coordinates `⟨α_j, u⟩`.
    pub fn from_coweight_coords(alg: &ChevalleyAlgebra, c: &[RatFunc<K>]) -> Self {
        let e = alg.coweight_element(c);
        MiuraOper::new((0..alg.rank()).map(|i| e[alg.h(i)].clone()).collect())
    }

    pub fn connection(&self, alg: &ChevalleyAlgebra) -> Connection<K> {
        Connection::miura(alg, &self.u)
    }

    /// `u` as an element of the algebra.
    pub fn element(&self, alg: &ChevalleyAlgebra) -> Vec<RatFunc<K>> {
        let mut x: Vec<RatFunc<K>> = vecops::zeros(alg.dim());
        for (i, ui) in self.u.iter().enumerate() {
            x[alg.h(i)] = ui.clone();
        }
        x
    }

    /// `⟨α_j, u⟩` for every `j`.
    pub fn coweight_coords(&self, alg: &ChevalleyAlgebra) -> Vec<RatFunc<K>> {
        alg.coweight_coords(&self.element(alg))
    }

    /// `⟨α_k, u⟩`.
    pub fn pairing(&self, alg: &ChevalleyAlgebra, k: usize) -> RatFunc<K> {
        (0..alg.rank()).fold(RatFunc::zero(), |acc, i| {
            let a = alg.cartan().a(i, k);
            if a == 0 {
                acc
            } else {
                acc + self.u[i].clone() * &RatFunc::from_i64(a)
            }
        })
    }

    /// Residue of `u dt` at a point, in coweight coordinates.
    pub fn residue(&self, alg: &ChevalleyAlgebra, at: &Point<K>) -> Vec<K> {
        self.coweight_coords(alg).iter().map(|f| f.residue(at)).collect()
    }

    pub fn check_cyclotomic(&self, alg: &ChevalleyAlgebra, sym: &Symmetry<K>) -> bool {
        self.connection(alg).is_equivariant(sym.varsigma())
    }

    pub fn with_flag(mut self, alg: &ChevalleyAlgebra, sym: &Symmetry<K>) -> Self {
        self.cyclotomic = self.check_cyclotomic(alg, sym);
        self
    }

    pub fn render(&self, alg: &ChevalleyAlgebra, zeta: Option<u32>) -> String {
        self.connection(alg).render(alg, zeta)
    }
}

/// `(w·0 | r(x))` with `r = u + (w·0)/(t−x)`: the regularity condition at an
/// extra pole of a Miura oper whose residue there is `−w·0`.
pub fn regularity_condition<K: CycloField>(
    alg: &ChevalleyAlgebra,
    miura: &MiuraOper<K>,
    x: &K,
    w: &WeylElement,
) -> Result<K> {
    let wdot0: Vec<K> = w.act_shifted(&vecops::zeros::<K>(alg.rank()));
    let pole = RatFunc::simple_pole(x);
    let coords = miura.coweight_coords(alg);
    let r_at_x: Option<Vec<K>> =
        coords.iter().zip(&wdot0).map(|(u, c)| (u.clone() + &(pole.clone() * &konst(c))).eval(x)).collect();
    let r_at_x = r_at_x.ok_or_else(|| {
        CoreError::NotOfForm(format!("residue at {} is not −w·0", x.render(&["t", "z"], None)))
    })?;
    Ok(alg.form(&alg.coweight_element(&wdot0), &alg.coweight_element(&r_at_x)))
}

/// Some `w ∈ W` (or `W^ν`) with `w⁻¹·μ̌` shifted-dominant, i.e.
/// `⟨α_i, w⁻¹·μ̌ + ρ̌⟩ ≥ 0`. Returns `(w, w⁻¹·μ̌)`.
pub fn dominant_shifted<K: Field>(
    cartan: &CartanDatum,
    mu: &[K],
    nu: Option<&[usize]>,
) -> Result<Option<(WeylElement, Vec<K>)>> {
    let rational: Option<Vec<Q>> = mu.iter().map(|c| c.to_rational()).collect();
    let Some(mu_q) = rational else { return Ok(None) };
    let group = WeylGroup::enumerate(cartan)?;
    for w in group.elements() {
        if nu.is_some_and(|p| !w.commutes_with(p)) {
            continue;
        }
        let img = w.act_shifted(&mu_q);
        if img.iter().all(|c| c + &Q::one() >= Q::zero()) {
            let lam = img.iter().map(K::from_rational).collect();
            return Ok(Some((w.inverse(cartan), lam)));
        }
    }
    Ok(None)
}

/// Pole data of a Miura oper of the general cyclotomic form.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralForm<K> {
    /// `w₀ ∈ W^ν` with `res₀ = −w₀·λ̌₀`.
    pub w0: WeylElement,
    /// `w_i` with residue `−w_i·λ̌_i` at each `z_i`.
    pub sites: Vec<WeylElement>,
    /// Extra orbit representatives `x_j` with `y_j`, residue `−y_j·0`.
    pub extra: Vec<(K, WeylElement)>,
    /// `res_∞ u dt` in coweight coordinates.
    pub res_inf: Vec<K>,
    /// `w_∞ ∈ W^ν` and `λ̌_∞` with `res_∞ = w_∞·λ̌_∞`, `λ̌_∞ + ρ̌` dominant.
    pub w_inf: WeylElement,
    pub lambda_inf: Vec<K>,
}

/// Locates every pole of `u` among the origin, the rotation orbits of the
/// sites and the orbits of `extra_hints`, and matches each residue into the
/// required shifted Weyl orbit.
pub fn classify_general_form<K: CycloField>(
    alg: &ChevalleyAlgebra,
    sym: &Symmetry<K>,
    miura: &MiuraOper<K>,
    lambda0: &[K],
    sites: &[(K, Vec<K>)],
    extra_hints: &[K],
) -> Result<GeneralForm<K>> {
    let cartan = alg.cartan();
    let perm = sym.nu().perm().to_vec();
    if !miura.check_cyclotomic(alg, sym) {
        return Err(CoreError::NotOfForm("Miura oper is not ς-equivariant".into()));
    }
    let mut hints: Vec<K> = Vec::new();
    for (z, _) in sites {
        hints.extend(sym.orbit(z));
    }
    for x in extra_hints {
        hints.extend(sym.orbit(x));
    }
    let coords = miura.coweight_coords(alg);
    let mut poles: Vec<K> = Vec::new();
    for f in &coords {
        let pf = partial_fractions(f, &hints)
            .map_err(|e| CoreError::NotOfForm(format!("pole outside the candidate set: {e}")))?;
        if !pf.polynomial_part.is_zero() {
            return Err(CoreError::NotOfForm("u has a polynomial part".into()));
        }
        for (p, cs) in &pf.pole_parts {
            if cs.iter().skip(1).any(|c| !c.is_zero()) {
                return Err(CoreError::NotOfForm(format!("pole of order > 1 at {}", p.render(&["z"], None))));
            }
            if !poles.contains(p) {
                poles.push(p.clone());
            }
        }
    }
    let residue_at = |p: &K| miura.residue(alg, &Point::Finite(p.clone()));
    let neg = |v: Vec<K>| vecops::neg(&v);

    let res0 = neg(residue_at(&K::zero()));
    let w0 = linking_element(cartan, lambda0, &res0, Some(&perm))?.ok_or_else(|| {
        CoreError::NotOfForm(format!("−res₀ = {} is not in W^ν·λ̌₀", render_vec(&res0, Some(sym.order()))))
    })?;

    let mut covered: Vec<K> = vec![K::zero()];
    let mut site_ws = Vec::new();
    for (z, lam) in sites {
        let r = neg(residue_at(z));
        let w = linking_element(cartan, lam, &r, None)?.ok_or_else(|| {
            CoreError::NotOfForm(format!("residue at {} is not in W·λ̌", z.render(&["z"], None)))
        })?;
        site_ws.push(w);
        covered.extend(sym.orbit(z));
    }

    let zero: Vec<K> = vecops::zeros(alg.rank());
    let mut extra = Vec::new();
    for p in &poles {
        if covered.contains(p) {
            continue;
        }
        let r = neg(residue_at(p));
        let y = linking_element(cartan, &zero, &r, None)?.ok_or_else(|| {
            CoreError::NotOfForm(format!("residue at {} is not in W·0", p.render(&["z"], None)))
        })?;
        extra.push((p.clone(), y));
        covered.extend(sym.orbit(p));
    }

    let res_inf = miura.residue(alg, &Point::Infinity);
    let (w_inf, lambda_inf) = dominant_shifted(cartan, &res_inf, Some(&perm))?
        .ok_or_else(|| CoreError::NoDominantRepresentative(render_vec(&res_inf, Some(sym.order()))))?;
    Ok(GeneralForm { w0, sites: site_ws, extra, res_inf, w_inf, lambda_inf })
}
