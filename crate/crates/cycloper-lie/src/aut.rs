use cycloper_arith::{CycloField, Mat};

use crate::algebra::ChevalleyAlgebra;
use crate::cartan::CartanDatum;
use crate::error::LieError;
use crate::roots::{neg_root, unit};
use crate::vecops;

/// Permutation `ν` of the simple roots preserving the Cartan matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramAut {
    perm: Vec<usize>,
}

impl DiagramAut {
    pub fn new(cartan: &CartanDatum, perm: Vec<usize>) -> Result<Self, LieError> {
        let mut sorted = perm.clone();
        sorted.sort();
        if sorted != (0..cartan.rank()).collect::<Vec<_>>() || !cartan.preserved_by(&perm) {
            return Err(LieError::NotDiagramAutomorphism);
        }
        Ok(DiagramAut { perm })
    }

    pub fn identity(rank: usize) -> Self {
        DiagramAut { perm: (0..rank).collect() }
    }

    /// From disjoint cycles of zero-based indices.
    pub fn from_cycles(cartan: &CartanDatum, cycles: &[Vec<usize>]) -> Result<Self, LieError> {
        let mut perm: Vec<usize> = (0..cartan.rank()).collect();
        for c in cycles {
            for (k, &i) in c.iter().enumerate() {
                if i >= perm.len() {
                    return Err(LieError::NotDiagramAutomorphism);
                }
                perm[i] = c[(k + 1) % c.len()];
            }
        }
        Self::new(cartan, perm)
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn apply(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn order(&self) -> usize {
        let mut k = 1;
        let mut cur = self.perm.clone();
        while cur.iter().enumerate().any(|(i, &j)| i != j) {
            cur = cur.iter().map(|&j| self.perm[j]).collect();
            k += 1;
        }
        k
    }

    /// Orbits, each listed as `k, ν(k), ν²(k), …` from its smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.perm.len()];
        let mut out = Vec::new();
        for s in 0..self.perm.len() {
            if seen[s] {
                continue;
            }
            let mut orbit = vec![s];
            seen[s] = true;
            let mut j = self.perm[s];
            while j != s {
                seen[j] = true;
                orbit.push(j);
                j = self.perm[j];
            }
            out.push(orbit);
        }
        out
    }

    /// `ν` acting on root coordinates.
    pub fn act_on_root(&self, beta: &[i64]) -> Vec<i64> {
        let mut out = vec![0; beta.len()];
        for (i, b) in beta.iter().enumerate() {
            out[self.perm[i]] = *b;
        }
        out
    }

    /// `ν` acting on coweight coordinates: `⟨α_{ν(j)}, νλ̌⟩ = ⟨α_j, λ̌⟩`.
    pub fn act_on_coweight<F: Clone>(&self, c: &[F]) -> Vec<F> {
        let mut out = c.to_vec();
        for (j, x) in c.iter().enumerate() {
            out[self.perm[j]] = x.clone();
        }
        out
    }
}

/// The family of automorphisms `E_i ↦ a_i E_{ν(i)}`, `F_i ↦ a_i⁻¹ F_{ν(i)}`,
/// `α̌_i ↦ α̌_{ν(i)}`, with `ω = ζ_T`.
#[derive(Clone, Debug, PartialEq)]
pub enum AutKind {
    /// `a_i = 1`.
    Diagram,
    /// `a_i = ω^{k_i}` for the given exponents.
    Sigma(Vec<i64>),
    /// `a_i = ω⁻¹`.
    Varsigma,
    /// `Ad_{ω^{-λ̌₀}} ∘ ς` for integral `λ̌₀` in coweight coordinates.
    Vartheta(Vec<i64>),
}

/// An automorphism of finite order dividing `T`, as a matrix in the adjoint
/// representation.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraAut<F> {
    matrix: Mat<F>,
    diagram: DiagramAut,
    t: u32,
    /// Exponents `k_i` with `a_i = ω^{k_i}`.
    exponents: Vec<i64>,
}

impl<F: CycloField> AlgebraAut<F> {
    pub fn new(alg: &ChevalleyAlgebra, nu: &DiagramAut, kind: &AutKind, t: u32) -> Result<Self, LieError> {
        let n = alg.rank();
        let exponents: Vec<i64> = match kind {
            AutKind::Diagram => vec![0; n],
            AutKind::Sigma(k) => {
                if k.len() != n {
                    return Err(LieError::Dimension { expected: n, got: k.len() });
                }
                k.clone()
            }
            AutKind::Varsigma => vec![-1; n],
            AutKind::Vartheta(l0) => {
                if l0.len() != n {
                    return Err(LieError::Dimension { expected: n, got: l0.len() });
                }
                (0..n).map(|i| -l0[nu.apply(i)] - 1).collect()
            }
        };
        let images = generator_images::<F>(alg, nu, &exponents, t);
        let matrix = Mat::from_rows(images).transpose();
        let aut = AlgebraAut { matrix, diagram: nu.clone(), t, exponents };
        if !aut.matrix.pow(t).is_identity() {
            return Err(LieError::OrderMismatch { expected: t });
        }
        Ok(aut)
    }

    pub fn matrix(&self) -> &Mat<F> {
        &self.matrix
    }

    pub fn diagram(&self) -> &DiagramAut {
        &self.diagram
    }

    pub fn order_bound(&self) -> u32 {
        self.t
    }

    /// `ω = ζ_T`.
    pub fn omega(&self) -> F {
        F::zeta(self.t)
    }

    pub fn generator_exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn apply(&self, x: &[F]) -> Vec<F> {
        self.matrix.mul_vec(x)
    }

    /// Smallest `k ≥ 1` with `υ^k = id`.
    pub fn order(&self) -> u32 {
        let mut p = self.matrix.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.mul(&self.matrix);
            k += 1;
        }
        k
    }

    /// Checks `υ[x_a, x_b] = [υ x_a, υ x_b]` on all basis pairs.
    pub fn preserves_bracket(&self, alg: &ChevalleyAlgebra) -> bool {
        let d = alg.dim();
        let cols: Vec<Vec<F>> = (0..d).map(|k| self.matrix.col(k)).collect();
        (0..d).all(|a| {
            (0..d).all(|b| {
                let lhs = self.apply(&alg.bracket(&alg.basis_vector::<F>(a), &alg.basis_vector::<F>(b)));
                lhs == alg.bracket(&cols[a], &cols[b])
            })
        })
    }

    /// Conjugation `U g U⁻¹` of an adjoint group element.
    pub fn act_on_group(&self, g: &Mat<F>) -> Mat<F> {
        let inv = self.matrix.pow(self.t - 1);
        self.matrix.mul(g).mul(&inv)
    }
}

fn generator_images<F: CycloField>(alg: &ChevalleyAlgebra, nu: &DiagramAut, exps: &[i64], t: u32) -> Vec<Vec<F>> {
    let d = alg.dim();
    let n = alg.rank();
    let mut img: Vec<Option<Vec<F>>> = vec![None; d];
    for i in 0..n {
        let a = F::zeta_pow(t, exps[i]);
        img[alg.e(i)] = Some(vecops::scale(&alg.basis_vector(alg.e(nu.apply(i))), &a));
        img[alg.f(i)] = Some(vecops::scale(&alg.basis_vector(alg.f(nu.apply(i))), &a.inv()));
        img[alg.h(i)] = Some(alg.basis_vector(alg.h(nu.apply(i))));
    }
    for xi in alg.roots().positive().to_vec() {
        let Some((i, zeta)) = alg.roots().extraspecial(&xi) else { continue };
        let eps = unit(n, i);
        for sign in [1i64, -1] {
            let (e, z, x) = if sign > 0 {
                (eps.clone(), zeta.clone(), xi.clone())
            } else {
                (neg_root(&eps), neg_root(&zeta), neg_root(&xi))
            };
            let nez = F::from_i64(alg.structure_constant(&e, &z));
            let ie = alg.root_index(&e).unwrap();
            let iz = alg.root_index(&z).unwrap();
            let br = alg.bracket(img[ie].as_ref().unwrap(), img[iz].as_ref().unwrap());
            img[alg.root_index(&x).unwrap()] = Some(vecops::scale(&br, &nez.inv()));
        }
    }
    img.into_iter().map(|v| v.expect("every basis element reached")).collect()
}

/// Fixed subspace of `n` under an automorphism stabilizing `n`, together with
/// the fixed dimension contributed by each `ν`-orbit of simple roots (the part
/// of `n` generated by that orbit).
#[derive(Clone, Debug)]
pub struct FixedNilpotent<F> {
    pub basis: Vec<Vec<F>>,
    pub orbits: Vec<(Vec<usize>, usize)>,
}

pub fn theta_fixed_nilpotent<F: CycloField>(alg: &ChevalleyAlgebra, aut: &AlgebraAut<F>) -> FixedNilpotent<F> {
    let pos = alg.positive_indices();
    let basis = fixed_on(alg, aut, &pos);
    let orbits = aut
        .diagram()
        .orbits()
        .into_iter()
        .map(|orbit| {
            let idx: Vec<usize> = pos
                .iter()
                .copied()
                .filter(|&k| alg.basis_root(k).iter().enumerate().all(|(i, &c)| c == 0 || orbit.contains(&i)))
                .collect();
            let dim = fixed_on(alg, aut, &idx).len();
            (orbit, dim)
        })
        .collect();
    FixedNilpotent { basis, orbits }
}

fn fixed_on<F: CycloField>(alg: &ChevalleyAlgebra, aut: &AlgebraAut<F>, idx: &[usize]) -> Vec<Vec<F>> {
    let sub = aut.matrix().submatrix(idx, idx).sub(&Mat::identity(idx.len()));
    sub.kernel()
        .into_iter()
        .map(|v| {
            let mut full = vecops::zeros(alg.dim());
            for (c, &k) in v.into_iter().zip(idx) {
                full[k] = c;
            }
            full
        })
        .collect()
}
