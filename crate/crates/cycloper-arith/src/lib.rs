//! Exact arithmetic for cyclotomic opers: rationals, cyclotomic fields,
//! polynomials, rational functions and the calculus on them.

pub mod calculus;
pub mod cyclo;
pub mod error;
pub mod expr;
pub mod field;
pub mod linalg;
pub mod poly;
pub mod ratfunc;

pub use calculus::{
    definite_integral, exp_integral, find_roots, partial_fractions, rational_antiderivative, ExpIntegralError,
    MonodromyObstruction, PrincipalPartDecomp,
};
pub use cyclo::{cyclotomic_polynomial, euler_phi, Cyclo};
pub use error::ArithError;
pub use expr::{parse_expr, parse_rational};
pub use field::{CycloField, Field};
pub use linalg::Mat;
pub use poly::Poly;
pub use ratfunc::{Laurent, Point, RatFunc};

pub type Q = num_rational::BigRational;
/// Constants: elements of ℚ(ζ_n) for varying `n`.
pub type Scalar = Cyclo;
/// Rational functions of the coordinate `t` over numeric constants.
pub type Func = RatFunc<Cyclo>;
/// Constants that depend rationally on one free parameter.
pub type ParamScalar = RatFunc<Cyclo>;
/// Rational functions of `t` with parameter-dependent coefficients.
pub type ParamFunc = RatFunc<ParamScalar>;

/// `ζ_T^k` reduced in ℚ(ζ_T).
pub fn zeta_power(order: u32, k: i64) -> Scalar {
    Cyclo::zeta_pow(order, k)
}

/// Canonical residue of `Σ raw[j] ζ_T^j` modulo Φ_T.
pub fn scalar_reduce(order: u32, raw: &[Q]) -> Scalar {
    Cyclo::reduce(order, raw)
}
