#![allow(dead_code)]

pub mod oracles;

use cycloper::arith::{Cyclo, CycloField, Field, Func, RatFunc, Q};
use cycloper::lie::{ChevalleyAlgebra, DiagramAut};
use cycloper::Symmetry;

pub fn alg(label: &str) -> ChevalleyAlgebra {
    ChevalleyAlgebra::from_label(label).unwrap()
}

pub fn int(n: i64) -> Cyclo {
    Cyclo::int(n)
}

pub fn frac(n: i64, d: i64) -> Cyclo {
    Cyclo::rational(Q::new(n.into(), d.into()))
}

pub fn konst(c: &Cyclo) -> Func {
    RatFunc::constant(c.clone())
}

pub fn kint(n: i64) -> Func {
    RatFunc::from_i64(n)
}

pub fn t() -> Func {
    RatFunc::t()
}

/// `c t^k`.
pub fn mono(c: Cyclo, k: i64) -> Func {
    RatFunc::monomial(c, k)
}

pub fn zeta(t: u32, k: i64) -> Cyclo {
    Cyclo::zeta_pow(t, k)
}

pub fn swap(alg: &ChevalleyAlgebra, cycles: &[Vec<usize>]) -> DiagramAut {
    DiagramAut::from_cycles(alg.cartan(), cycles).unwrap()
}

pub fn sym(alg: &ChevalleyAlgebra, cycles: &[Vec<usize>], t: u32) -> Symmetry<Cyclo> {
    Symmetry::new(alg, swap(alg, cycles), t).unwrap()
}

/// Small deterministic generator for test data.
pub struct Lcg(u64);

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg(seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407))
    }

    pub fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        self.0 >> 33
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }

    pub fn nonzero(&mut self, lo: i64, hi: i64) -> i64 {
        loop {
            let x = self.range(lo, hi);
            if x != 0 {
                return x;
            }
        }
    }
}
