//! Dense univariate polynomials over an exact field.

use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::field::{join_terms, Field};
use crate::Q;

/// Coefficients stored lowest degree first; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<K> {
    c: Vec<K>,
}

impl<K: Field> Poly<K> {
    pub fn zero() -> Self {
        Poly { c: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(K::one())
    }

    pub fn constant(k: K) -> Self {
        Poly::from_coeffs(vec![k])
    }

    /// The variable `t`.
    pub fn x() -> Self {
        Poly::monomial(K::one(), 1)
    }

    pub fn monomial(k: K, deg: usize) -> Self {
        let mut c = vec![K::zero(); deg + 1];
        c[deg] = k;
        Poly::from_coeffs(c)
    }

    /// `t - p`.
    pub fn linear_root(p: &K) -> Self {
        Poly::from_coeffs(vec![-p.clone(), K::one()])
    }

    pub fn from_coeffs(mut c: Vec<K>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        Poly { c }
    }

    pub fn coeffs(&self) -> &[K] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<K> {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> K {
        self.c.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn lc(&self) -> K {
        self.c.last().cloned().unwrap_or_else(K::zero)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|a| !a.is_zero())
    }

    pub fn scale(&self, k: &K) -> Self {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.c.iter().map(|a| a.clone() * k).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.lc().inv();
        self.scale(&inv)
    }

    /// Multiplies by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![K::zero(); k];
        c.extend(self.c.iter().cloned());
        Poly { c }
    }

    /// Drops the first `k` coefficients (division by `t^k` when exact).
    pub fn shift_down(&self, k: usize) -> Self {
        Poly::from_coeffs(self.c.iter().skip(k).cloned().collect())
    }

    pub fn derivative(&self) -> Self {
        Poly::from_coeffs(
            self.c.iter().enumerate().skip(1).map(|(i, a)| a.clone() * &K::from_i64(i as i64)).collect(),
        )
    }

    pub fn eval(&self, x: &K) -> K {
        let mut acc = K::zero();
        for a in self.c.iter().rev() {
            acc = acc * x + a;
        }
        acc
    }

    /// `f(t + p)`.
    pub fn taylor_shift(&self, p: &K) -> Self {
        if p.is_zero() || self.c.len() < 2 {
            return self.clone();
        }
        let mut c = self.c.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                let add = c[j + 1].clone() * p;
                c[j] = c[j].clone() + &add;
            }
        }
        Poly::from_coeffs(c)
    }

    /// `f(k t)`.
    pub fn scale_var(&self, k: &K) -> Self {
        let mut pw = K::one();
        let mut c = Vec::with_capacity(self.c.len());
        for a in &self.c {
            c.push(a.clone() * &pw);
            pw = pw * k;
        }
        Poly::from_coeffs(c)
    }

    /// `f(t^q)`.
    pub fn substitute_power(&self, q: usize) -> Self {
        assert!(q >= 1);
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![K::zero(); (self.c.len() - 1) * q + 1];
        for (i, a) in self.c.iter().enumerate() {
            c[i * q] = a.clone();
        }
        Poly::from_coeffs(c)
    }

    /// `t^n f(1/t)` for `n >= deg f`.
    pub fn reversed(&self, n: usize) -> Self {
        let mut c = vec![K::zero(); n + 1];
        for (i, a) in self.c.iter().enumerate() {
            c[n - i] = a.clone();
        }
        Poly::from_coeffs(c)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.c.len() - 1;
        if self.c.len() < d.c.len() {
            return (Poly::zero(), self.clone());
        }
        let inv = d.lc().inv();
        let mut r = self.c.clone();
        let mut q = vec![K::zero(); self.c.len() - dd];
        for i in (0..q.len()).rev() {
            let coef = r[i + dd].clone() * &inv;
            if coef.is_zero() {
                continue;
            }
            for (j, dj) in d.c.iter().enumerate() {
                let sub = coef.clone() * dj;
                r[i + j] = r[i + j].clone() - &sub;
            }
            q[i] = coef;
        }
        r.truncate(dd);
        (Poly::from_coeffs(q), Poly::from_coeffs(r))
    }

    pub fn rem(&self, d: &Self) -> Self {
        self.div_rem(d).1
    }

    /// Exact quotient; panics in debug builds when the remainder is nonzero.
    pub fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Pseudo-remainder `lc(d)^{δ+1} f mod d`.
    fn prem(&self, d: &Self) -> Self {
        let delta = self.c.len() - d.c.len();
        let f = self.scale(&d.lc().pow_i(delta as i64 + 1));
        f.rem(d)
    }

    /// Monic gcd via the subresultant pseudo-remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = if self.c.len() >= other.c.len() {
            (self.clone(), other.clone())
        } else {
            (other.clone(), self.clone())
        };
        if b.is_zero() {
            return a.monic();
        }
        if a.c.len() == 1 || b.c.len() == 1 {
            return Poly::one();
        }
        let mut g = K::one();
        let mut h = K::one();
        loop {
            let delta = (a.c.len() - b.c.len()) as i64;
            let r = a.prem(&b);
            if r.is_zero() {
                return b.monic();
            }
            if r.c.len() == 1 {
                return Poly::one();
            }
            a = b;
            let denom = g.clone() * &h.pow_i(delta);
            b = r.scale(&denom.inv());
            g = a.lc();
            h = if delta == 0 {
                h
            } else {
                g.pow_i(delta) * &h.pow_i(1 - delta)
            };
        }
    }

    /// Returns `(g, s, t)` with `s·self + t·other = g`, `g` monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s2 = &s0 - &(&q * &s1);
            let t2 = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }

    /// Solves `s·a + t·b = c` with `deg s < deg b`, assuming `gcd(a, b) = 1`.
    pub fn diophantine(a: &Self, b: &Self, c: &Self) -> (Self, Self) {
        let (g, s0, _) = a.ext_gcd(b);
        debug_assert!(g.is_one());
        let s = (&s0 * c).rem(b);
        let t = (c - &(&s * a)).div_exact(b);
        (s, t)
    }

    /// Yun's algorithm: `self = lc · Π_i f_i^i` with each `f_i` monic squarefree.
    pub fn squarefree_factors(&self) -> Vec<Self> {
        let f = self.monic();
        if f.c.len() <= 1 {
            return Vec::new();
        }
        let df = f.derivative();
        let a = f.gcd(&df);
        let mut b = f.div_exact(&a);
        let mut c = df.div_exact(&a);
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        loop {
            let g = b.gcd(&d);
            out.push(g.clone());
            b = b.div_exact(&g);
            if b.c.len() <= 1 {
                break;
            }
            c = d.div_exact(&g);
            d = &c - &b.derivative();
        }
        while out.last().is_some_and(|p| p.c.len() <= 1) {
            out.pop();
        }
        out
    }

    /// Antiderivative with zero constant term.
    pub fn integrate(&self) -> Self {
        let mut c = vec![K::zero()];
        for (i, a) in self.c.iter().enumerate() {
            c.push(a.clone() / K::from_i64(i as i64 + 1));
        }
        Poly::from_coeffs(c)
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> Poly<L> {
        Poly::from_coeffs(self.c.iter().map(f).collect())
    }

    /// Coefficients as rationals, when they all are.
    pub fn to_rational(&self) -> Option<Poly<Q>> {
        self.c.iter().map(|a| a.to_rational()).collect::<Option<Vec<_>>>().map(Poly::from_coeffs)
    }

    pub fn render(&self, vars: &[&str], zeta: Option<u32>) -> String {
        let var = vars.first().copied().unwrap_or("t");
        let inner = if vars.len() > 1 { &vars[1..] } else { &[][..] };
        let mut terms = Vec::new();
        for (i, a) in self.c.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{}^{}", var, i),
            };
            terms.push((a.render(inner, zeta), mono));
        }
        join_terms(terms)
    }
}

impl<'a, K: Field> Add<&'a Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &'a Poly<K>) -> Poly<K> {
        let n = self.c.len().max(rhs.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), rhs.c.get(i)) {
                (Some(a), Some(b)) => a.clone() + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::from_coeffs(c)
    }
}

impl<'a, K: Field> Sub<&'a Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &'a Poly<K>) -> Poly<K> {
        let n = self.c.len().max(rhs.c.len());
        let mut c = Vec::with_capacity(n);
        for i in 0..n {
            c.push(match (self.c.get(i), rhs.c.get(i)) {
                (Some(a), Some(b)) => a.clone() - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::from_coeffs(c)
    }
}

impl<'a, K: Field> Mul<&'a Poly<K>> for &'a Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: &'a Poly<K>) -> Poly<K> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![K::zero(); self.c.len() + rhs.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = c[i + j].clone() + &(a.clone() * b);
                }
            }
        }
        Poly::from_coeffs(c)
    }
}

impl<K: Field> Neg for Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly { c: self.c.into_iter().map(|a| -a).collect() }
    }
}
