use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Q;

/// Exact commutative field used as the scalar type throughout the workspace.
///
/// Implemented by [`Q`], [`crate::Cyclo`] and [`crate::RatFunc`] over any
/// field, which gives the parameter tower `RatFunc<RatFunc<Cyclo>>`.
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
{
    fn from_rational(q: &Q) -> Self;

    /// `Some(q)` when the element is a rational constant.
    fn to_rational(&self) -> Option<Q>;

    /// Text rendering. `vars` names the function-field variables from the
    /// outermost inwards; `zeta` is the cyclotomic order written as plain `zeta`.
    fn render(&self, vars: &[&str], zeta: Option<u32>) -> String;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Q::from_integer(BigInt::from(n)))
    }

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    fn pow_i(&self, e: i64) -> Self {
        let base = if e < 0 { self.inv() } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = sq.clone() * &sq;
            }
        }
        acc
    }

    /// Integer value, if the element is a rational integer.
    fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    fn to_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        self.to_integer().and_then(|n| n.to_i64())
    }

    /// True when rendering needs parentheses as a factor.
    fn is_compound(&self) -> bool {
        let s = self.render(&["t", "z", "y", "x"], None);
        s.contains(' ') || s.contains('/') && self.to_rational().is_none()
    }
}

/// Fields containing all roots of unity on demand.
pub trait CycloField: Field {
    /// Primitive `n`-th root of unity `exp(2πi/n)`.
    fn zeta(n: u32) -> Self;

    fn zeta_pow(n: u32, k: i64) -> Self {
        Self::zeta(n).pow_i(k.rem_euclid(n as i64))
    }
}

impl Field for Q {
    fn from_rational(q: &Q) -> Self {
        q.clone()
    }

    fn to_rational(&self) -> Option<Q> {
        Some(self.clone())
    }

    fn render(&self, _vars: &[&str], _zeta: Option<u32>) -> String {
        render_rational(self)
    }
}

pub(crate) fn render_rational(q: &Q) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Writes `coeff*monomial` terms joined with signs, dropping unit coefficients.
pub(crate) fn join_terms(terms: Vec<(String, String)>) -> String {
    // terms: (coefficient rendering, monomial rendering or "")
    let mut out = String::new();
    for (c, m) in terms {
        let (neg, body) = match c.strip_prefix('-') {
            Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
            _ => (false, c.clone()),
        };
        let piece = if m.is_empty() {
            body
        } else if body == "1" {
            m
        } else if body.contains(' ') {
            format!("({})*{}", body, m)
        } else {
            format!("{}*{}", body, m)
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
            out.push_str(&piece);
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&piece);
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}
