//! Elements of cyclotomic fields ℚ(ζ_n), with automatic lifting between orders.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::field::{join_terms, render_rational, CycloField, Field};
use crate::poly::Poly;
use crate::Q;

struct Ctx {
    phi: usize,
    /// `x^j mod Φ_n` for `0 <= j < max(2φ, n)`.
    powers: Vec<Vec<Q>>,
}

fn ctx(n: u32) -> Arc<Ctx> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Ctx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().unwrap().get(&n) {
        return c.clone();
    }
    let modulus = cyclotomic_polynomial(n);
    let phi = modulus.len() - 1;
    let len = (2 * phi).max(n as usize).max(1);
    let mut powers = Vec::with_capacity(len);
    let mut cur = vec![Q::zero(); phi];
    cur[0] = Q::one();
    for _ in 0..len {
        powers.push(cur.clone());
        // multiply by x and reduce with the monic modulus
        let top = cur[phi - 1].clone();
        let mut next = vec![Q::zero(); phi];
        for k in (1..phi).rev() {
            next[k] = cur[k - 1].clone();
        }
        if !top.is_zero() {
            for (k, nk) in next.iter_mut().enumerate() {
                *nk -= &top * Q::from_integer(modulus[k].clone());
            }
        }
        cur = next;
    }
    let c = Arc::new(Ctx { phi, powers });
    cache.lock().unwrap().insert(n, c.clone());
    c
}

/// Integer coefficients of Φ_n, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic order must be positive");
    // x^n - 1 divided by Φ_d for every proper divisor d
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            num = div_exact_int(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn div_exact_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = rem[i + db].clone();
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    q
}

pub fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// An element of ℚ(ζ_n) in the power basis `1, ζ, …, ζ^{φ(n)-1}`.
///
/// Values that happen to be rational are always stored with `n = 1`.
#[derive(Clone, Debug)]
pub struct Cyclo {
    order: u32,
    coeffs: Vec<Q>,
}

impl Cyclo {
    pub fn rational(q: Q) -> Self {
        Cyclo { order: 1, coeffs: vec![q] }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(Q::from_integer(BigInt::from(n)))
    }

    /// Reduces a polynomial in ζ_n with rational coefficients modulo Φ_n.
    pub fn reduce(order: u32, raw: &[Q]) -> Self {
        let c = ctx(order);
        let mut out = vec![Q::zero(); c.phi];
        for (j, a) in raw.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let row = power_row(&c, order, j);
            for (o, r) in out.iter_mut().zip(row.iter()) {
                if !r.is_zero() {
                    *o += a * r;
                }
            }
        }
        Cyclo { order, coeffs: out }.normalized()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    fn normalized(mut self) -> Self {
        if self.order != 1 && self.coeffs[1..].iter().all(Zero::is_zero) {
            self.coeffs.truncate(1);
            self.order = 1;
        }
        self
    }

    /// Same element written over ℚ(ζ_m), `order | m`.
    pub fn lift(&self, m: u32) -> Cyclo {
        assert!(m % self.order == 0, "cannot lift order {} to {}", self.order, m);
        if m == self.order {
            return self.clone();
        }
        let c = ctx(m);
        let step = (m / self.order) as usize;
        let mut out = vec![Q::zero(); c.phi];
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let row = power_row(&c, m, k * step);
            for (o, r) in out.iter_mut().zip(row.iter()) {
                if !r.is_zero() {
                    *o += a * r;
                }
            }
        }
        Cyclo { order: m, coeffs: out }
    }

    fn common(a: &Cyclo, b: &Cyclo) -> (Cyclo, Cyclo, u32) {
        let m = a.order.lcm(&b.order);
        (a.lift(m), b.lift(m), m)
    }

    /// Coefficients over ℚ(ζ_m) for `order | m`, padded to φ(m).
    pub fn coords_in(&self, m: u32) -> Vec<Q> {
        self.lift(m).coeffs
    }

    fn to_poly(&self) -> Poly<Q> {
        Poly::from_coeffs(self.coeffs.clone())
    }

    /// Writes the element in terms of `zeta` when its order divides `zeta_order`.
    fn render_cyclo(&self, zeta_order: Option<u32>) -> String {
        if self.order == 1 {
            return render_rational(&self.coeffs[0]);
        }
        let (coeffs, name) = match zeta_order {
            Some(t) if t % self.order == 0 => (self.lift(t).coeffs, "zeta".to_string()),
            _ => (self.coeffs.clone(), format!("zeta_{}", self.order)),
        };
        let mut terms = Vec::new();
        for (k, a) in coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => name.clone(),
                _ => format!("{}^{}", name, k),
            };
            terms.push((render_rational(a), mono));
        }
        join_terms(terms)
    }
}

fn power_row<'a>(c: &'a Ctx, order: u32, j: usize) -> &'a [Q] {
    let n = order as usize;
    let idx = if j < c.powers.len() { j } else { j % n };
    &c.powers[idx]
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b, _) = Cyclo::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Zero for Cyclo {
    fn zero() -> Self {
        Cyclo::rational(Q::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

impl One for Cyclo {
    fn one() -> Self {
        Cyclo::rational(Q::one())
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { order: self.order, coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<'a> Add<&'a Cyclo> for Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &'a Cyclo) -> Cyclo {
        if self.order == rhs.order {
            let coeffs = self.coeffs.into_iter().zip(rhs.coeffs.iter()).map(|(a, b)| a + b).collect();
            return Cyclo { order: rhs.order, coeffs }.normalized();
        }
        let (a, b, m) = Cyclo::common(&self, rhs);
        let coeffs = a.coeffs.into_iter().zip(b.coeffs).map(|(x, y)| x + y).collect();
        Cyclo { order: m, coeffs }.normalized()
    }
}

impl<'a> Sub<&'a Cyclo> for Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &'a Cyclo) -> Cyclo {
        self + &(-rhs.clone())
    }
}

impl<'a> Mul<&'a Cyclo> for Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &'a Cyclo) -> Cyclo {
        if self.order == 1 {
            let s = &self.coeffs[0];
            return Cyclo { order: rhs.order, coeffs: rhs.coeffs.iter().map(|c| c * s).collect() }
                .normalized();
        }
        if rhs.order == 1 {
            let s = &rhs.coeffs[0];
            return Cyclo { order: self.order, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
                .normalized();
        }
        let (a, b, m) = Cyclo::common(&self, rhs);
        let mut raw = vec![Q::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        Cyclo::reduce(m, &raw)
    }
}

impl<'a> Div<&'a Cyclo> for Cyclo {
    type Output = Cyclo;
    fn div(self, rhs: &'a Cyclo) -> Cyclo {
        self * &rhs.inv()
    }
}

macro_rules! by_value {
    ($t:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                $tr::$m(self, &rhs)
            }
        }
    )*};
}
by_value!(Cyclo, Add add, Sub sub, Mul mul, Div div);

impl Field for Cyclo {
    fn from_rational(q: &Q) -> Self {
        Cyclo::rational(q.clone())
    }

    fn to_rational(&self) -> Option<Q> {
        if self.order == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn render(&self, _vars: &[&str], zeta: Option<u32>) -> String {
        self.render_cyclo(zeta)
    }

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero in cyclotomic field");
        if self.order == 1 {
            return Cyclo::rational(self.coeffs[0].recip());
        }
        let modulus = Poly::from_coeffs(
            cyclotomic_polynomial(self.order).into_iter().map(Q::from_integer).collect(),
        );
        let (g, s, _) = self.to_poly().ext_gcd(&modulus);
        // g is a nonzero constant since Φ_n is irreducible
        let g0 = g.coeff(0);
        let raw: Vec<Q> = s.coeffs().iter().map(|c| c / &g0).collect();
        Cyclo::reduce(self.order, &raw)
    }
}

impl CycloField for Cyclo {
    fn zeta(n: u32) -> Self {
        match n {
            1 => Cyclo::one(),
            2 => Cyclo::int(-1),
            _ => {
                let c = ctx(n);
                let mut coeffs = vec![Q::zero(); c.phi];
                coeffs[1] = Q::one();
                Cyclo { order: n, coeffs }
            }
        }
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_cyclo(None))
    }
}

impl From<i64> for Cyclo {
    fn from(n: i64) -> Self {
        Cyclo::int(n)
    }
}

impl From<Q> for Cyclo {
    fn from(q: Q) -> Self {
        Cyclo::rational(q)
    }
}
