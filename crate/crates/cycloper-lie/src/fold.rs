use cycloper_arith::Q;

use crate::algebra::ChevalleyAlgebra;
use crate::aut::DiagramAut;
use crate::cartan::CartanDatum;
use crate::error::LieError;
use crate::vecops;
use crate::weyl::WeylElement;

/// The `ν`-invariant subalgebra in terms of orbit data.
#[derive(Clone, Debug)]
pub struct FoldedDatum {
    pub orbits: Vec<Vec<usize>>,
    pub ell: Vec<i64>,
    pub cartan: CartanDatum,
    pub coroots: Vec<Vec<Q>>,
    pub e: Vec<Vec<Q>>,
    pub f: Vec<Vec<Q>>,
    pub reflections: Vec<WeylElement>,
}

pub fn fold(alg: &ChevalleyAlgebra, nu: &DiagramAut) -> Result<FoldedDatum, LieError> {
    let a = alg.cartan();
    let orbits = nu.orbits();
    let ell: Vec<i64> = orbits.iter().map(|o| 3 - o.iter().map(|&i| a.a(i, o[0])).sum::<i64>()).collect();
    let m = orbits.len();
    let mut fa = vec![vec![0; m]; m];
    for (p, oi) in orbits.iter().enumerate() {
        for (q, oj) in orbits.iter().enumerate() {
            fa[p][q] = ell[p] * oi.iter().map(|&i| a.a(i, oj[0])).sum::<i64>();
        }
    }
    let cartan = CartanDatum::new(fa)?;
    let mut coroots = Vec::new();
    let mut e = Vec::new();
    let mut f = Vec::new();
    let mut reflections = Vec::new();
    for (p, o) in orbits.iter().enumerate() {
        let l = Q::from_integer(ell[p].into());
        let mut h: Vec<Q> = vecops::zeros(alg.dim());
        let mut ee = h.clone();
        let mut ff = h.clone();
        for &i in o {
            h[alg.h(i)] = l.clone();
            ee[alg.e(i)] = l.clone();
            ff[alg.f(i)] = Q::from_integer(1.into());
        }
        coroots.push(h);
        e.push(ee);
        f.push(ff);
        let word: Vec<usize> = if ell[p] == 1 {
            o.clone()
        } else {
            let half = o.len() / 2;
            // orbits are listed as k, ν(k), …, so ī = ν^{|I|/2}(i) sits `half` places later
            (0..half).flat_map(|k| [o[k], o[k + half], o[k]]).collect()
        };
        reflections.push(WeylElement::from_word(a, &word));
    }
    Ok(FoldedDatum { orbits, ell, cartan, coroots, e, f, reflections })
}
