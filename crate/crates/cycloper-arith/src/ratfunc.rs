//! Univariate rational functions over an exact field, kept in lowest terms.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::field::{CycloField, Field};
use crate::poly::Poly;
use crate::Q;

/// A point of ℙ¹ over the coefficient field.
#[derive(Clone, Debug, PartialEq)]
pub enum Point<K> {
    Finite(K),
    Infinity,
}

impl<K: Field> Point<K> {
    pub fn origin() -> Self {
        Point::Finite(K::zero())
    }

    pub fn render(&self, vars: &[&str], zeta: Option<u32>) -> String {
        match self {
            Point::Finite(k) => k.render(vars, zeta),
            Point::Infinity => "infinity".to_string(),
        }
    }
}

/// Laurent expansion `Σ_k coeffs[k] · s^{valuation + k}` in a local parameter.
#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<K> {
    pub valuation: i64,
    pub coeffs: Vec<K>,
}

impl<K: Field> Laurent<K> {
    /// Coefficient of `s^e`, zero outside the computed window.
    pub fn coeff(&self, e: i64) -> K {
        let idx = e - self.valuation;
        if idx < 0 {
            return K::zero();
        }
        self.coeffs.get(idx as usize).cloned().unwrap_or_else(K::zero)
    }
}

/// `num/den` with `gcd(num, den) = 1` and `den` monic.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc<K> {
    num: Poly<K>,
    den: Poly<K>,
}

impl<K: Field> RatFunc<K> {
    pub fn new(num: Poly<K>, den: Poly<K>) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.div_exact(&g), den.div_exact(&g)) };
        Self::with_monic(num, den)
    }

    fn with_monic(num: Poly<K>, den: Poly<K>) -> Self {
        let lc = den.lc();
        if lc.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lc.inv();
            RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn from_poly(p: Poly<K>) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(k: K) -> Self {
        Self::from_poly(Poly::constant(k))
    }

    /// The coordinate function `t`.
    pub fn t() -> Self {
        Self::from_poly(Poly::x())
    }

    /// `c · t^k` for any integer `k`.
    pub fn monomial(c: K, k: i64) -> Self {
        if c.is_zero() {
            Self::zero()
        } else if k >= 0 {
            Self::from_poly(Poly::monomial(c, k as usize))
        } else {
            Self::with_monic(Poly::constant(c), Poly::monomial(K::one(), (-k) as usize))
        }
    }

    /// `1/(t - p)`.
    pub fn simple_pole(p: &K) -> Self {
        RatFunc { num: Poly::one(), den: Poly::linear_root(p) }
    }

    pub fn numer(&self) -> &Poly<K> {
        &self.num
    }

    pub fn denom(&self) -> &Poly<K> {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.degree().unwrap_or(0) == 0
    }

    /// The constant value, if the function is constant.
    pub fn as_constant(&self) -> Option<K> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn derivative(&self) -> Self {
        if self.num.is_zero() {
            return self.clone();
        }
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let d = &self.den * &self.den;
        RatFunc::new(n, d)
    }

    /// Value at a finite point; `None` at a pole.
    pub fn eval(&self, x: &K) -> Option<K> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Value at a point of ℙ¹; `None` at a pole.
    pub fn value_at(&self, p: &Point<K>) -> Option<K> {
        match p {
            Point::Finite(x) => self.eval(x),
            Point::Infinity => {
                let dn = self.num.degree();
                let dd = self.den.deg_or_zero();
                match dn {
                    None => Some(K::zero()),
                    Some(n) if n < dd => Some(K::zero()),
                    Some(n) if n == dd => Some(self.num.lc()),
                    _ => None,
                }
            }
        }
    }

    /// `f(c·t)`.
    pub fn scale_var(&self, c: &K) -> Self {
        Self::with_monic(self.num.scale_var(c), self.den.scale_var(c))
    }

    /// `f(u^q)` as a function of the new coordinate `u`.
    pub fn substitute_power(&self, q: usize) -> Self {
        RatFunc { num: self.num.substitute_power(q), den: self.den.substitute_power(q) }
    }

    /// Order of vanishing at the point (negative for poles); `None` for zero.
    pub fn order_at(&self, p: &Point<K>) -> Option<i64> {
        if self.num.is_zero() {
            return None;
        }
        match p {
            Point::Finite(x) => {
                let vn = self.num.taylor_shift(x).valuation().unwrap() as i64;
                let vd = self.den.taylor_shift(x).valuation().unwrap() as i64;
                Some(vn - vd)
            }
            Point::Infinity => Some(self.den.deg_or_zero() as i64 - self.num.deg_or_zero() as i64),
        }
    }

    pub fn is_regular_at(&self, p: &Point<K>) -> bool {
        self.order_at(p).is_none_or(|v| v >= 0)
    }

    /// Laurent expansion with `n` coefficients in the local parameter
    /// `s = t - x`, or `s = 1/t` at infinity.
    pub fn laurent(&self, p: &Point<K>, n: usize) -> Laurent<K> {
        if self.num.is_zero() {
            return Laurent { valuation: 0, coeffs: vec![K::zero(); n] };
        }
        let (a, b, val) = match p {
            Point::Finite(x) => {
                let a = self.num.taylor_shift(x);
                let b = self.den.taylor_shift(x);
                let va = a.valuation().unwrap();
                let vb = b.valuation().unwrap();
                (a.shift_down(va), b.shift_down(vb), va as i64 - vb as i64)
            }
            Point::Infinity => {
                let dn = self.num.deg_or_zero();
                let dd = self.den.deg_or_zero();
                (self.num.reversed(dn), self.den.reversed(dd), dd as i64 - dn as i64)
            }
        };
        Laurent { valuation: val, coeffs: series_div(a.coeffs(), b.coeffs(), n) }
    }

    /// Residue of `f dt` at the point; at infinity this is `-res_{s=0} f(1/s) ds/s²`.
    pub fn residue(&self, p: &Point<K>) -> K {
        let Some(v) = self.order_at(p) else {
            return K::zero();
        };
        match p {
            Point::Finite(_) => {
                if v > -1 {
                    return K::zero();
                }
                self.laurent(p, (-v) as usize).coeff(-1)
            }
            Point::Infinity => {
                if v > 1 {
                    return K::zero();
                }
                -self.laurent(p, (2 - v) as usize).coeff(1)
            }
        }
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> RatFunc<L> {
        RatFunc::new(self.num.map(&f), self.den.map(&f))
    }

    fn add_impl(&self, rhs: &Self) -> Self {
        if self.num.is_zero() {
            return rhs.clone();
        }
        if rhs.num.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() {
            return RatFunc { num: &(&self.num * &rhs.den) + &rhs.num, den: rhs.den.clone() }.fixup();
        }
        if rhs.den.is_one() {
            return RatFunc { num: &self.num + &(&rhs.num * &self.den), den: self.den.clone() }.fixup();
        }
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            return RatFunc { num, den: &self.den * &rhs.den }.fixup();
        }
        let d1 = self.den.div_exact(&g);
        let d2 = rhs.den.div_exact(&g);
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        let den = &(&d1 * &d2) * &g;
        RatFunc::new(num, den)
    }

    /// Normalizes after an operation that cannot have introduced a common factor.
    fn fixup(self) -> Self {
        if self.num.is_zero() {
            RatFunc::zero()
        } else {
            Self::with_monic(self.num, self.den)
        }
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.num.is_zero() || rhs.num.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { num: &self.num * &rhs.num, den: Poly::one() };
        }
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (n1, d2) = if g1.is_one() { (self.num.clone(), rhs.den.clone()) } else { (self.num.div_exact(&g1), rhs.den.div_exact(&g1)) };
        let (n2, d1) = if g2.is_one() { (rhs.num.clone(), self.den.clone()) } else { (rhs.num.div_exact(&g2), self.den.div_exact(&g2)) };
        Self::with_monic(&n1 * &n2, &d1 * &d2)
    }

    fn inv_impl(&self) -> Self {
        assert!(!self.num.is_zero(), "inverse of zero rational function");
        Self::with_monic(self.den.clone(), self.num.clone())
    }

    pub fn render_with(&self, vars: &[&str], zeta: Option<u32>) -> String {
        let n = self.num.render(vars, zeta);
        if self.den.is_one() {
            return n;
        }
        let d = self.den.render(vars, zeta);
        let n = if n.contains(' ') { format!("({})", n) } else { n };
        let d = if d.contains(' ') || d.contains('*') || d.contains('^') { format!("({})", d) } else { d };
        format!("{}/{}", n, d)
    }
}

fn series_div<K: Field>(a: &[K], b: &[K], n: usize) -> Vec<K> {
    let b0inv = b[0].inv();
    let mut c: Vec<K> = Vec::with_capacity(n);
    for k in 0..n {
        let mut s = a.get(k).cloned().unwrap_or_else(K::zero);
        for j in 1..=k.min(b.len().saturating_sub(1)) {
            s = s - &(b[j].clone() * &c[k - j]);
        }
        c.push(s * &b0inv);
    }
    c
}

impl<K: Field> Zero for RatFunc<K> {
    fn zero() -> Self {
        RatFunc { num: Poly::zero(), den: Poly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<K: Field> One for RatFunc<K> {
    fn one() -> Self {
        RatFunc { num: Poly::one(), den: Poly::one() }
    }
}

impl<K: Field> Neg for RatFunc<K> {
    type Output = Self;
    fn neg(self) -> Self {
        RatFunc { num: -self.num, den: self.den }
    }
}

impl<'a, K: Field> Add<&'a RatFunc<K>> for RatFunc<K> {
    type Output = Self;
    fn add(self, rhs: &'a RatFunc<K>) -> Self {
        self.add_impl(rhs)
    }
}

impl<'a, K: Field> Sub<&'a RatFunc<K>> for RatFunc<K> {
    type Output = Self;
    fn sub(self, rhs: &'a RatFunc<K>) -> Self {
        self.add_impl(&-rhs.clone())
    }
}

impl<'a, K: Field> Mul<&'a RatFunc<K>> for RatFunc<K> {
    type Output = Self;
    fn mul(self, rhs: &'a RatFunc<K>) -> Self {
        self.mul_impl(rhs)
    }
}

impl<'a, K: Field> Div<&'a RatFunc<K>> for RatFunc<K> {
    type Output = Self;
    fn div(self, rhs: &'a RatFunc<K>) -> Self {
        self.mul_impl(&rhs.inv_impl())
    }
}

impl<K: Field> Add for RatFunc<K> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_impl(&rhs)
    }
}

impl<K: Field> Sub for RatFunc<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.add_impl(&-rhs)
    }
}

impl<K: Field> Mul for RatFunc<K> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_impl(&rhs)
    }
}

impl<K: Field> Div for RatFunc<K> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self.mul_impl(&rhs.inv_impl())
    }
}

impl<K: Field> Field for RatFunc<K> {
    fn from_rational(q: &Q) -> Self {
        RatFunc::constant(K::from_rational(q))
    }

    fn to_rational(&self) -> Option<Q> {
        self.as_constant().and_then(|k| k.to_rational())
    }

    fn render(&self, vars: &[&str], zeta: Option<u32>) -> String {
        self.render_with(vars, zeta)
    }

    fn inv(&self) -> Self {
        self.inv_impl()
    }
}


impl<K: CycloField> CycloField for RatFunc<K> {
    fn zeta(n: u32) -> Self {
        RatFunc::constant(K::zeta(n))
    }
}

impl<K: Field> fmt::Display for RatFunc<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(&["t", "z", "y", "x"], None))
    }
}

impl<K: Field> From<Poly<K>> for RatFunc<K> {
    fn from(p: Poly<K>) -> Self {
        RatFunc::from_poly(p)
    }
}
