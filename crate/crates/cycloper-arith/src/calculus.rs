//! Root finding from candidate sets, partial fractions and rational integration.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::ArithError;
use crate::field::Field;
use crate::poly::Poly;
use crate::ratfunc::{Point, RatFunc};
use crate::Q;

/// Polynomial part plus principal parts `(p, [c_1, …, c_k])` meaning
/// `Σ_j c_j/(t-p)^j`, in order of discovery.
#[derive(Clone, Debug, PartialEq)]
pub struct PrincipalPartDecomp<K> {
    pub polynomial_part: Poly<K>,
    pub pole_parts: Vec<(K, Vec<K>)>,
}

impl<K: Field> PrincipalPartDecomp<K> {
    pub fn reassemble(&self) -> RatFunc<K> {
        let mut acc = RatFunc::from_poly(self.polynomial_part.clone());
        for (p, cs) in &self.pole_parts {
            let base = RatFunc::simple_pole(p);
            let mut pw = base.clone();
            for c in cs {
                acc = acc + &(pw.clone() * &RatFunc::constant(c.clone()));
                pw = pw * &base;
            }
        }
        acc
    }

    pub fn residue_at(&self, p: &K) -> K {
        self.pole_parts
            .iter()
            .find(|(q, _)| q == p)
            .and_then(|(_, cs)| cs.first().cloned())
            .unwrap_or_else(K::zero)
    }
}

/// Nonzero residues of a logarithmic part that could not be integrated.
#[derive(Clone, Debug, PartialEq)]
pub struct MonodromyObstruction<K> {
    /// `(pole, residue)` for every located pole with nonzero residue.
    pub residues: Vec<(K, K)>,
    /// Remaining log part whose poles lie outside the candidate set.
    pub unresolved: Option<RatFunc<K>>,
    /// Height level at which integration failed, when known.
    pub level: Option<usize>,
}

/// Splits off every root of `f` found among `hints`, zero, and (for rational
/// polynomials) rational-root-theorem candidates. Returns roots with
/// multiplicities and the unfactored cofactor.
pub fn find_roots<K: Field>(f: &Poly<K>, hints: &[K]) -> (Vec<(K, usize)>, Poly<K>) {
    let mut rest = f.monic();
    let mut roots: Vec<(K, usize)> = Vec::new();
    let try_root = |rest: &mut Poly<K>, p: &K, roots: &mut Vec<(K, usize)>| {
        if roots.iter().any(|(q, _)| q == p) {
            return;
        }
        let lin = Poly::linear_root(p);
        let mut mult = 0;
        while rest.deg_or_zero() > 0 && rest.eval(p).is_zero() {
            *rest = rest.div_exact(&lin);
            mult += 1;
        }
        if mult > 0 {
            roots.push((p.clone(), mult));
        }
    };
    try_root(&mut rest, &K::zero(), &mut roots);
    for h in hints {
        if rest.deg_or_zero() == 0 {
            break;
        }
        try_root(&mut rest, h, &mut roots);
    }
    if rest.deg_or_zero() > 0 {
        if let Some(rq) = rest.to_rational() {
            for c in rational_root_candidates(&rq) {
                if rest.deg_or_zero() == 0 {
                    break;
                }
                try_root(&mut rest, &K::from_rational(&c), &mut roots);
            }
        }
    }
    (roots, rest)
}

fn rational_root_candidates(f: &Poly<Q>) -> Vec<Q> {
    let Some(v) = f.valuation() else { return Vec::new() };
    let f = f.shift_down(v);
    if f.deg_or_zero() == 0 {
        return Vec::new();
    }
    let lcm = f.coeffs().iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| (c * Q::from_integer(lcm.clone())).to_integer()).collect();
    let (Some(a0), Some(an)) = (small_divisors(&ints[0]), small_divisors(ints.last().unwrap())) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for p in &a0 {
        for q in &an {
            let r = Q::new(BigInt::from(*p), BigInt::from(*q));
            for c in [r.clone(), -r] {
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
    }
    out
}

fn small_divisors(n: &BigInt) -> Option<Vec<i64>> {
    let n = n.abs().to_i64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1i64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
        if d > 2_000_000 {
            return None;
        }
    }
    out.sort();
    Some(out)
}

/// Exact partial-fraction decomposition over the field, locating poles among
/// `hints` (plus zero and rational candidates).
pub fn partial_fractions<K: Field>(f: &RatFunc<K>, hints: &[K]) -> Result<PrincipalPartDecomp<K>, ArithError> {
    let (poly, _) = f.numer().div_rem(f.denom());
    let (roots, rest) = find_roots(f.denom(), hints);
    if rest.deg_or_zero() > 0 {
        return Err(ArithError::IrreducibleDenominator { factor: rest.render(&["t", "z"], None) });
    }
    let mut pole_parts = Vec::new();
    for (p, m) in roots {
        let l = f.laurent(&Point::Finite(p.clone()), m);
        let mut cs = Vec::with_capacity(m);
        for j in 1..=m as i64 {
            cs.push(l.coeff(-j));
        }
        pole_parts.push((p, cs));
    }
    Ok(PrincipalPartDecomp { polynomial_part: poly, pole_parts })
}

/// Antiderivative by Hermite reduction. Fails with the residues of the
/// logarithmic part when some finite pole has nonzero residue.
pub fn rational_antiderivative<K: Field>(f: &RatFunc<K>, hints: &[K]) -> Result<RatFunc<K>, MonodromyObstruction<K>> {
    let (poly, mut a) = f.numer().div_rem(f.denom());
    let mut d = f.denom().clone();
    let mut g = RatFunc::from_poly(poly.integrate());
    if !a.is_zero() {
        let factors = d.squarefree_factors();
        for (idx, v) in factors.iter().enumerate() {
            let i = idx + 1;
            if i < 2 || v.deg_or_zero() == 0 {
                continue;
            }
            let u = d.div_exact(&v.pow(i));
            let dv = v.derivative();
            for j in (1..i).rev() {
                let rhs = a.scale(&K::from_i64(-(j as i64)).inv());
                let (b, c) = Poly::diophantine(&(&u * &dv), v, &rhs);
                g = g + &RatFunc::new(b.clone(), v.pow(j));
                a = &c.scale(&K::from_i64(-(j as i64))) - &(&u * &b.derivative());
            }
            d = &u * v;
        }
    }
    let log_part = RatFunc::new(a, d);
    if log_part.is_zero() {
        return Ok(g);
    }
    Err(log_obstruction(&log_part, hints))
}

fn log_obstruction<K: Field>(h: &RatFunc<K>, hints: &[K]) -> MonodromyObstruction<K> {
    let (roots, rest) = find_roots(h.denom(), hints);
    let pairs: Vec<(K, K)> = roots
        .into_iter()
        .map(|(p, _)| {
            let r = h.residue(&Point::Finite(p.clone()));
            (p, r)
        })
        .collect();
    let unresolved = (rest.deg_or_zero() > 0).then(|| {
        pairs.iter().fold(h.clone(), |acc, (p, r)| acc - &(RatFunc::simple_pole(p) * &RatFunc::constant(r.clone())))
    });
    let residues = pairs.into_iter().filter(|(_, r)| !r.is_zero()).collect();
    MonodromyObstruction { residues, unresolved, level: None }
}

/// Why `exp(∫q)` is not a rational function.
#[derive(Clone, Debug, PartialEq)]
pub enum ExpIntegralError<K> {
    /// A pole of `q` of order at least two, or a nonzero polynomial part.
    Irregular,
    /// A simple pole with non-integer residue.
    NonIntegralResidue(K, K),
    /// Poles outside the candidate set.
    Unfactored(RatFunc<K>),
}

/// `exp(∫q dt)` as the monic product `Π (t-p)^{res_p q}`, valid when `q` has
/// only simple poles with integer residues and no polynomial part.
pub fn exp_integral<K: Field>(q: &RatFunc<K>, hints: &[K]) -> Result<RatFunc<K>, ExpIntegralError<K>> {
    if q.is_zero() {
        return Ok(RatFunc::one());
    }
    let pf = partial_fractions(q, hints).map_err(|_| ExpIntegralError::Unfactored(q.clone()))?;
    if !pf.polynomial_part.is_zero() {
        return Err(ExpIntegralError::Irregular);
    }
    let mut num = Poly::one();
    let mut den = Poly::one();
    for (p, cs) in &pf.pole_parts {
        if cs.iter().skip(1).any(|c| !c.is_zero()) {
            return Err(ExpIntegralError::Irregular);
        }
        let r = &cs[0];
        let Some(m) = r.to_i64() else {
            return Err(ExpIntegralError::NonIntegralResidue(p.clone(), r.clone()));
        };
        let lin = Poly::linear_root(p);
        if m > 0 {
            num = &num * &lin.pow(m as usize);
        } else if m < 0 {
            den = &den * &lin.pow((-m) as usize);
        }
    }
    Ok(RatFunc::new(num, den))
}

/// Definite integral `∫_base^t f` when the antiderivative is rational.
pub fn definite_integral<K: Field>(
    f: &RatFunc<K>,
    base: &K,
    hints: &[K],
) -> Result<RatFunc<K>, MonodromyObstruction<K>> {
    let g = rational_antiderivative(f, hints)?;
    let g0 = g.eval(base).expect("antiderivative regular at the base point");
    Ok(g - &RatFunc::constant(g0))
}

