use std::collections::HashMap;

use cycloper_arith::{Field, Mat};

use crate::algebra::ChevalleyAlgebra;
use crate::cartan::CartanDatum;
use crate::error::LieError;
use crate::roots::Root;

pub const DEFAULT_GROUP_LIMIT: usize = 1_000_000;

/// `s_{i_1} ⋯ s_{i_k}` together with its matrix on coweight coordinates
/// `⟨α_j, λ̌⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    word: Vec<usize>,
    mat: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mat = (0..rank).map(|i| (0..rank).map(|j| i64::from(i == j)).collect()).collect();
        WeylElement { word: Vec::new(), mat }
    }

    pub fn simple(cartan: &CartanDatum, i: usize) -> Self {
        let n = cartan.rank();
        let mut mat = WeylElement::identity(n).mat;
        // (s_i c)_j = c_j - c_i a_ij
        for (j, row) in mat.iter_mut().enumerate() {
            row[i] -= cartan.a(i, j);
        }
        WeylElement { word: vec![i], mat }
    }

    pub fn from_word(cartan: &CartanDatum, word: &[usize]) -> Self {
        word.iter().fold(WeylElement::identity(cartan.rank()), |acc, &i| acc.compose(&WeylElement::simple(cartan, i)))
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.mat
    }

    pub fn rank(&self) -> usize {
        self.mat.len()
    }

    /// Length of the stored word (reduced for elements produced by enumeration).
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.mat == WeylElement::identity(self.rank()).mat
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mat = (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| self.mat[i][k] * other.mat[k][j]).sum()).collect()).collect();
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement { word, mat }
    }

    pub fn inverse(&self, cartan: &CartanDatum) -> WeylElement {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        WeylElement::from_word(cartan, &rev)
    }

    /// Same group element, comparing matrices only.
    pub fn same_element(&self, other: &WeylElement) -> bool {
        self.mat == other.mat
    }

    /// `w λ̌` on coweight coordinates.
    pub fn act<F: Field>(&self, c: &[F]) -> Vec<F> {
        self.mat
            .iter()
            .map(|row| row.iter().zip(c).fold(F::zero(), |acc, (m, x)| if *m == 0 { acc } else { acc + F::from_i64(*m) * x }))
            .collect()
    }

    /// Shifted action `w·λ̌ = w(λ̌ + ρ̌) - ρ̌`.
    pub fn act_shifted<F: Field>(&self, c: &[F]) -> Vec<F> {
        let shifted: Vec<F> = c.iter().map(|x| x.clone() + F::one()).collect();
        self.act(&shifted).into_iter().map(|x| x - F::one()).collect()
    }

    /// `w β` for a root in simple-root coordinates.
    pub fn act_on_root(&self, cartan: &CartanDatum, beta: &[i64]) -> Root {
        let mut out = beta.to_vec();
        for &i in self.word.iter().rev() {
            let p: i64 = out.iter().enumerate().map(|(j, b)| b * cartan.a(i, j)).sum();
            out[i] -= p;
        }
        out
    }

    /// Commutes with the coordinate permutation induced by `ν`.
    pub fn commutes_with(&self, perm: &[usize]) -> bool {
        let n = self.rank();
        // (P c)_{ν(j)} = c_j
        (0..n).all(|i| (0..n).all(|j| self.mat[perm[i]][perm[j]] == self.mat[i][j]))
    }
}

/// Explicit list of Weyl group elements, each with a reduced word.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    cartan: CartanDatum,
    elements: Vec<WeylElement>,
}

impl WeylGroup {
    pub fn enumerate(cartan: &CartanDatum) -> Result<Self, LieError> {
        Self::enumerate_with_limit(cartan, DEFAULT_GROUP_LIMIT)
    }

    /// Breadth-first closure under right multiplication by simple reflections.
    pub fn enumerate_with_limit(cartan: &CartanDatum, limit: usize) -> Result<Self, LieError> {
        let n = cartan.rank();
        let gens: Vec<WeylElement> = (0..n).map(|i| WeylElement::simple(cartan, i)).collect();
        let mut seen: HashMap<Vec<Vec<i64>>, usize> = HashMap::new();
        let id = WeylElement::identity(n);
        seen.insert(id.mat.clone(), 0);
        let mut elements = vec![id];
        let mut k = 0;
        while k < elements.len() {
            for g in &gens {
                let w = elements[k].compose(g);
                if !seen.contains_key(&w.mat) {
                    if elements.len() >= limit {
                        return Err(LieError::GroupTooLarge { limit });
                    }
                    seen.insert(w.mat.clone(), elements.len());
                    elements.push(w);
                }
            }
            k += 1;
        }
        Ok(WeylGroup { cartan: cartan.clone(), elements })
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn longest(&self) -> &WeylElement {
        self.elements.last().expect("nonempty group")
    }

    /// Elements commuting with the diagram automorphism `ν`.
    pub fn nu_invariant(&self, perm: &[usize]) -> Vec<WeylElement> {
        self.elements.iter().filter(|w| w.commutes_with(perm)).cloned().collect()
    }

    pub fn find(&self, w: &WeylElement) -> Option<&WeylElement> {
        self.elements.iter().find(|x| x.same_element(w))
    }
}

/// Shifted orbit `{(w, w·λ̌)}` over `W`, or over `W^ν` when `nu` is given.
pub fn weyl_orbit_shifted<F: Field>(
    cartan: &CartanDatum,
    coweight: &[F],
    nu: Option<&[usize]>,
) -> Result<Vec<(WeylElement, Vec<F>)>, LieError> {
    let group = WeylGroup::enumerate(cartan)?;
    let elems = match nu {
        Some(p) => group.nu_invariant(p),
        None => group.elements().to_vec(),
    };
    let mut out: Vec<(WeylElement, Vec<F>)> = Vec::new();
    for w in elems {
        let img = w.act_shifted(coweight);
        if !out.iter().any(|(_, v)| *v == img) {
            out.push((w, img));
        }
    }
    Ok(out)
}

/// Whether `μ̌ + ρ̌ ∈ W(λ̌ + ρ̌)` (or `W^ν`).
pub fn linkage_equal<F: Field>(
    cartan: &CartanDatum,
    lambda: &[F],
    mu: &[F],
    nu: Option<&[usize]>,
) -> Result<bool, LieError> {
    Ok(linking_element(cartan, lambda, mu, nu)?.is_some())
}

/// Some `w` with `w·λ̌ = μ̌`.
pub fn linking_element<F: Field>(
    cartan: &CartanDatum,
    lambda: &[F],
    mu: &[F],
    nu: Option<&[usize]>,
) -> Result<Option<WeylElement>, LieError> {
    let group = WeylGroup::enumerate(cartan)?;
    Ok(group
        .elements()
        .iter()
        .filter(|w| nu.is_none_or(|p| w.commutes_with(p)))
        .find(|w| w.act_shifted(lambda) == mu)
        .cloned())
}

/// `ṡ_i = exp(ad E_i) exp(-ad F_i) exp(ad E_i)` in the adjoint representation.
pub fn simple_reflection_lift<F: Field>(alg: &ChevalleyAlgebra, i: usize) -> Mat<F> {
    let e = alg.exp_ad(&alg.basis_vector::<F>(alg.e(i)));
    let mut f = alg.basis_vector::<F>(alg.f(i));
    f[alg.f(i)] = -F::one();
    let fm = alg.exp_ad(&f);
    e.mul(&fm).mul(&e)
}

/// Lift `ẇ = ṡ_{i_1} ⋯ ṡ_{i_k}` of a Weyl element.
pub fn weyl_lift<F: Field>(alg: &ChevalleyAlgebra, w: &WeylElement) -> Mat<F> {
    w.word().iter().fold(Mat::identity(alg.dim()), |acc, &i| acc.mul(&simple_reflection_lift(alg, i)))
}
