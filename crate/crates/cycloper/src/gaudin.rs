//! Cyclotomic Gaudin models: Bethe equations, quadratic Hamiltonian
//! eigenvalues and the Miura oper over the Langlands dual algebra.
//!
//! Weights of `g` are handled as elements of the Cartan subalgebra of `ᴸg`:
//! the simple roots `α_i` of `g` are the simple coroots of `ᴸg`, and the
//! fundamental-weight coordinates `⟨λ, α̌_i⟩` of a weight are its coweight
//! coordinates in `ᴸg`.

use cycloper_arith::{CycloField, Field, Point, RatFunc, Q};
use cycloper_lie::{vecops, AlgebraAut, ChevalleyAlgebra, DiagramAut, WeylElement};
use num_traits::One;

use crate::connection::{konst, render_vec, Symmetry};
use crate::error::{CoreError, Result};
use crate::oper::{canonical_representative, dominant_shifted, u1_coefficient, MiuraOper};

/// `ᴸg` with its invariant form scaled to agree with the form on `h*`
/// induced from `g`.
#[derive(Clone, Debug)]
pub struct DualAlgebra {
    alg: ChevalleyAlgebra,
}

impl DualAlgebra {
    pub fn new(g: &ChevalleyAlgebra) -> Result<Self> {
        let cartan = g.cartan().transpose();
        let plain = ChevalleyAlgebra::build(&cartan);
        let scales: Vec<Q> = cartan
            .components()
            .iter()
            .map(|comp| {
                let i = comp[0];
                let alpha = cycloper_lie::roots::unit(g.rank(), i);
                g.roots().inner(&alpha, &alpha) / &plain.gram()[(plain.h(i), plain.h(i))]
            })
            .collect();
        if scales.iter().all(|s| s.is_one()) {
            return Ok(DualAlgebra { alg: plain });
        }
        Ok(DualAlgebra { alg: ChevalleyAlgebra::build_with_form(&cartan, &scales)? })
    }

    pub fn algebra(&self) -> &ChevalleyAlgebra {
        &self.alg
    }

    /// A weight, given by fundamental-weight coordinates, as an element of `ᴸh`.
    pub fn weight<K: Field>(&self, coords: &[K]) -> Vec<K> {
        self.alg.coweight_element(coords)
    }

    /// The simple root `α_i` of `g` as an element of `ᴸh`.
    pub fn simple_root<K: Field>(&self, i: usize) -> Vec<K> {
        self.alg.basis_vector(self.alg.h(i))
    }

    /// `(λ|μ)` for weights given as elements of `ᴸh`.
    pub fn pair<K: Field>(&self, a: &[K], b: &[K]) -> K {
        self.alg.form(a, b)
    }
}

/// `λ₀(h) = Σ_{r=1}^{T−1} tr_n(σ^{−r} ∘ ad h)/(1 − ω^r)` in fundamental-weight
/// coordinates `λ₀(α̌_i)`.
pub fn lambda0_weight<K: CycloField>(g: &ChevalleyAlgebra, sigma: &AlgebraAut<K>) -> Vec<K> {
    let t = sigma.order_bound();
    let w = sigma.omega();
    let pos = g.positive_indices();
    let mut out: Vec<K> = vecops::zeros(g.rank());
    for r in 1..t {
        let m = sigma.matrix().pow(t - r);
        let denom = K::one() - w.pow_i(r as i64);
        for (i, o) in out.iter_mut().enumerate() {
            let tr = pos.iter().fold(K::zero(), |acc, &k| {
                let pairing = g.roots().pair_simple_coroot(g.basis_root(k), i);
                if pairing == 0 || m[(k, k)].is_zero() {
                    acc
                } else {
                    acc + m[(k, k)].clone() * &K::from_i64(pairing)
                }
            });
            *o = o.clone() + tr / denom.clone();
        }
    }
    out
}

/// One site of the model: a point `z_i` and a weight `λ_i` in
/// fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct GaudinSite<K> {
    pub z: K,
    pub weight: Vec<K>,
}

/// A cyclotomic Gaudin model with Bethe roots `x_j` of colours `c(j)`.
#[derive(Clone, Debug)]
pub struct GaudinModel<K: CycloField> {
    dual: DualAlgebra,
    t: u32,
    nu: DiagramAut,
    lambda0: Vec<K>,
    pub sites: Vec<GaudinSite<K>>,
    pub colours: Vec<usize>,
    pub roots: Vec<K>,
}

/// The three values that should agree at each site.
#[derive(Clone, Debug, PartialEq)]
pub struct EnergyCheck<K> {
    /// `E_i` from the Bethe-vector eigenvalue formula.
    pub energy: K,
    /// `res_{z_i}(½(λ|λ) − (λ′|ρ)) dt`.
    pub lambda_residue: K,
    /// `res_{z_i} 2(ρ|ρ) u₁ dt` with `u₁` from the canonical form of the dual oper.
    pub oper_residue: K,
}

impl<K: CycloField> EnergyCheck<K> {
    pub fn consistent(&self) -> bool {
        self.energy == self.lambda_residue && self.energy == self.oper_residue
    }
}

impl<K: CycloField> GaudinModel<K> {
    pub fn new(
        g: &ChevalleyAlgebra,
        sigma: &AlgebraAut<K>,
        sites: Vec<GaudinSite<K>>,
        colours: Vec<usize>,
        roots: Vec<K>,
    ) -> Result<Self> {
        if colours.len() != roots.len() {
            return Err(CoreError::InvalidInput("one colour per Bethe root".into()));
        }
        if colours.iter().any(|&c| c >= g.rank()) || sites.iter().any(|s| s.weight.len() != g.rank()) {
            return Err(CoreError::InvalidInput("colour or weight out of range".into()));
        }
        Ok(GaudinModel {
            dual: DualAlgebra::new(g)?,
            t: sigma.order_bound(),
            nu: sigma.diagram().clone(),
            lambda0: lambda0_weight(g, sigma),
            sites,
            colours,
            roots,
        })
    }

    pub fn dual(&self) -> &DualAlgebra {
        &self.dual
    }

    pub fn order(&self) -> u32 {
        self.t
    }

    /// `λ₀` in fundamental-weight coordinates.
    pub fn lambda0(&self) -> &[K] {
        &self.lambda0
    }

    /// Rotation data acting on `ᴸg`.
    pub fn dual_symmetry(&self) -> Result<Symmetry<K>> {
        Symmetry::new(self.dual.algebra(), self.nu.clone(), self.t)
    }

    fn omega_pow(&self, r: u32) -> K {
        K::zeta_pow(self.t, r as i64)
    }

    fn site_weight(&self, i: usize, r: u32) -> Vec<K> {
        let c = (0..r).fold(self.sites[i].weight.clone(), |acc, _| self.nu.act_on_coweight(&acc));
        self.dual.weight(&c)
    }

    fn root_weight(&self, j: usize, r: u32) -> Vec<K> {
        let c = (0..r).fold(self.colours[j], |acc, _| self.nu.apply(acc));
        self.dual.simple_root(c)
    }

    /// Left-hand sides of the cyclotomic Bethe equations, one per root.
    pub fn bethe_residuals(&self) -> Vec<K> {
        let l0 = self.dual.weight(&self.lambda0);
        (0..self.roots.len())
            .map(|j| {
                let xj = &self.roots[j];
                let a = self.root_weight(j, 0);
                let mut acc = self.dual.pair(&a, &l0) / xj.clone();
                for r in 0..self.t {
                    let wr = self.omega_pow(r);
                    for (i, s) in self.sites.iter().enumerate() {
                        acc = acc + self.dual.pair(&a, &self.site_weight(i, r)) / (xj.clone() - &(wr.clone() * &s.z));
                    }
                    for (k, xk) in self.roots.iter().enumerate() {
                        if r == 0 && k == j {
                            continue;
                        }
                        acc = acc - &(self.dual.pair(&a, &self.root_weight(k, r)) / (xj.clone() - &(wr.clone() * xk)));
                    }
                }
                acc
            })
            .collect()
    }

    /// Eigenvalues `E_i` of the quadratic Hamiltonians on the Bethe vector.
    pub fn energies(&self) -> Vec<K> {
        let l0 = self.dual.weight(&self.lambda0);
        (0..self.sites.len())
            .map(|i| {
                let zi = &self.sites[i].z;
                let li = self.site_weight(i, 0);
                let mut acc = self.dual.pair(&li, &l0) / zi.clone();
                for r in 0..self.t {
                    let wr = self.omega_pow(r);
                    for (j, s) in self.sites.iter().enumerate() {
                        if r == 0 && j == i {
                            continue;
                        }
                        acc = acc + self.dual.pair(&li, &self.site_weight(j, r)) / (zi.clone() - &(wr.clone() * &s.z));
                    }
                    for (j, xj) in self.roots.iter().enumerate() {
                        acc = acc - &(self.dual.pair(&li, &self.root_weight(j, r)) / (zi.clone() - &(wr.clone() * xj)));
                    }
                }
                acc
            })
            .collect()
    }

    /// `λ(t) = λ₀/t + Σ_r (Σ_i ν^r λ_i/(t − ω^r z_i) − Σ_j ν^r α_{c(j)}/(t − ω^r x_j))`
    /// as an element of `ᴸh(t)`.
    pub fn lambda_function(&self) -> Vec<RatFunc<K>> {
        let mut acc: Vec<RatFunc<K>> = vecops::zeros(self.dual.algebra().dim());
        let add = |acc: &mut Vec<RatFunc<K>>, v: &[K], p: &K, sign: i64| {
            let pole = RatFunc::simple_pole(p) * &RatFunc::from_i64(sign);
            for (a, c) in acc.iter_mut().zip(v) {
                if !c.is_zero() {
                    *a = a.clone() + &(pole.clone() * &konst(c));
                }
            }
        };
        add(&mut acc, &self.dual.weight(&self.lambda0), &K::zero(), 1);
        for r in 0..self.t {
            let wr = self.omega_pow(r);
            for (i, s) in self.sites.iter().enumerate() {
                add(&mut acc, &self.site_weight(i, r), &(wr.clone() * &s.z), 1);
            }
            for (j, x) in self.roots.iter().enumerate() {
                add(&mut acc, &self.root_weight(j, r), &(wr.clone() * x), -1);
            }
        }
        acc
    }

    /// The Miura oper `d + p̌₋₁ − λ(t)` over `ᴸg`.
    pub fn miura_from_bethe(&self) -> Result<MiuraOper<K>> {
        let alg = self.dual.algebra();
        let lam = self.lambda_function();
        let u = (0..alg.rank()).map(|i| -lam[alg.h(i)].clone()).collect();
        Ok(MiuraOper::new(u).with_flag(alg, &self.dual_symmetry()?))
    }

    /// `½(λ|λ) − (λ′|ρ)`.
    pub fn quadratic_density(&self) -> RatFunc<K> {
        let lam = self.lambda_function();
        let dlam: Vec<RatFunc<K>> = lam.iter().map(|f| f.derivative()).collect();
        let rho: Vec<RatFunc<K>> = self.dual.algebra().rho_check();
        let half = RatFunc::from_rational(&Q::new(1.into(), 2.into()));
        self.dual.pair(&lam, &lam) * &half - &self.dual.pair(&dlam, &rho)
    }

    /// Compares `E_i` with the residues at `z_i` of the density and of
    /// `2(ρ|ρ) u₁` for the dual oper, where `u₁` comes from the full
    /// canonical form and is cross-checked against the closed formula.
    pub fn energy_oper_identity(&self) -> Result<Vec<EnergyCheck<K>>> {
        let alg = self.dual.algebra();
        let miura = self.miura_from_bethe()?;
        let conn = miura.connection(alg);
        let canonical = canonical_representative(alg, &conn, None)?;
        let closed = u1_coefficient(alg, &conn)?;
        if *canonical.u1() != closed {
            return Err(CoreError::Internal("canonical u₁ disagrees with the closed formula".into()));
        }
        let rho: Vec<K> = alg.rho_check();
        let scale = alg.form(&rho, &rho) * &K::from_i64(2);
        let density = self.quadratic_density();
        let energies = self.energies();
        Ok(self
            .sites
            .iter()
            .zip(energies)
            .map(|(s, energy)| {
                let p = Point::Finite(s.z.clone());
                EnergyCheck {
                    energy,
                    lambda_residue: density.residue(&p),
                    oper_residue: canonical.u1().residue(&p) * &scale,
                }
            })
            .collect())
    }

    /// `λ₀ + Σ_r (Σ_i ν^r λ_i − Σ_j ν^r α_{c(j)})`, i.e. `−res_∞ λ(t) dt`, in
    /// fundamental-weight coordinates.
    pub fn total_weight(&self) -> Vec<K> {
        let alg = self.dual.algebra();
        let lam = self.lambda_function();
        let res: Vec<K> = lam.iter().map(|f| -f.residue(&Point::Infinity)).collect();
        alg.coweight_coords(&res)
    }

    /// `(w_∞, λ_∞)` with `w_∞ ∈ W^ν`, `w_∞·λ_∞` the total weight and
    /// `λ_∞ + ρ` dominant.
    pub fn weight_at_infinity(&self) -> Result<(WeylElement, Vec<K>)> {
        let total = self.total_weight();
        dominant_shifted(self.dual.algebra().cartan(), &total, Some(self.nu.perm()))?
            .ok_or_else(|| CoreError::NoDominantRepresentative(render_vec(&total, Some(self.t))))
    }
}
