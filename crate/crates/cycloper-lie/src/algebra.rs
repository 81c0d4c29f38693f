use std::collections::HashMap;

use cycloper_arith::{Field, Mat, Q};
use num_traits::{One, Zero};

use crate::cartan::CartanDatum;
use crate::error::LieError;
use crate::roots::{add_roots, neg_root, unit, Root, RootSystem};
use crate::vecops;

/// Per-degree data for solving `x = [p₋₁, Y] + c` with `Y ∈ g_{i+1}`, `c ∈ a ∩ g_i`.
#[derive(Clone, Debug)]
struct DsLevel {
    /// Basis indices spanning `g_i`.
    rows: Vec<usize>,
    /// Basis indices spanning `g_{i+1}`.
    y_cols: Vec<usize>,
    /// Positions in the centralizer basis of degree `i`.
    c_cols: Vec<usize>,
    inverse: Mat<Q>,
}

/// A semisimple Lie algebra in a Chevalley basis.
///
/// Basis order: negative roots by increasing height, then the simple coroots
/// `α̌_1, …, α̌_n`, then positive roots by increasing height.
#[derive(Clone, Debug)]
pub struct ChevalleyAlgebra {
    roots: RootSystem,
    dim: usize,
    npos: usize,
    basis_roots: Vec<Root>,
    heights: Vec<i64>,
    root_to_index: HashMap<Root, usize>,
    /// `table[a][b]` lists the nonzero coordinates of `[x_a, x_b]`.
    table: Vec<Vec<Vec<(usize, Q)>>>,
    /// Positive-pair structure constants, keyed by positive root indices.
    n_pos: HashMap<(usize, usize), i64>,
    component_of: Vec<usize>,
    form_scale: Vec<Q>,
    gram: Mat<Q>,
    rho_check: Vec<Q>,
    p1: Vec<Q>,
    pm1: Vec<Q>,
    /// `(exponent, element)` ordered by exponent.
    centralizer: Vec<(usize, Vec<Q>)>,
    ds: Vec<DsLevel>,
}

impl ChevalleyAlgebra {
    pub fn build(cartan: &CartanDatum) -> Self {
        let scales = vec![Q::one(); cartan.components().len()];
        Self::build_with_form(cartan, &scales).expect("one scale per component")
    }

    /// `form_scale[c]` multiplies the invariant form on the `c`-th simple factor,
    /// components ordered as in [`CartanDatum::components`].
    pub fn build_with_form(cartan: &CartanDatum, form_scale: &[Q]) -> Result<Self, LieError> {
        let comps = cartan.components();
        if form_scale.len() != comps.len() {
            return Err(LieError::Dimension { expected: comps.len(), got: form_scale.len() });
        }
        let roots = RootSystem::new(cartan);
        let n = cartan.rank();
        let npos = roots.num_positive();
        let dim = 2 * npos + n;
        let mut basis_roots = Vec::with_capacity(dim);
        for k in (0..npos).rev() {
            basis_roots.push(neg_root(&roots.positive()[k]));
        }
        for _ in 0..n {
            basis_roots.push(vec![0; n]);
        }
        basis_roots.extend(roots.positive().iter().cloned());
        let heights = basis_roots.iter().map(|r| RootSystem::height(r)).collect();
        let root_to_index =
            basis_roots.iter().enumerate().filter(|(_, r)| r.iter().any(|&x| x != 0)).map(|(k, r)| (r.clone(), k)).collect();
        let mut component_of = vec![0; n];
        for (c, comp) in comps.iter().enumerate() {
            for &i in comp {
                component_of[i] = c;
            }
        }
        let mut alg = ChevalleyAlgebra {
            roots,
            dim,
            npos,
            basis_roots,
            heights,
            root_to_index,
            table: Vec::new(),
            n_pos: HashMap::new(),
            component_of,
            form_scale: form_scale.to_vec(),
            gram: Mat::zeros(0, 0),
            rho_check: Vec::new(),
            p1: Vec::new(),
            pm1: Vec::new(),
            centralizer: Vec::new(),
            ds: Vec::new(),
        };
        alg.compute_structure_constants();
        alg.build_table();
        alg.build_gram();
        alg.build_principal();
        alg.build_centralizer();
        alg.build_ds();
        Ok(alg)
    }

    pub fn from_label(label: &str) -> Result<Self, LieError> {
        Ok(Self::build(&CartanDatum::from_label(label)?))
    }

    fn compute_structure_constants(&mut self) {
        let pos = self.roots.positive().to_vec();
        for xi in &pos {
            let Some((i, zeta)) = self.roots.extraspecial(xi) else { continue };
            let eps = unit(self.rank(), i);
            let n_ez = self.roots.string_below(&eps, &zeta) + 1;
            let ie = self.roots.index_of(&eps).unwrap();
            let iz = self.roots.index_of(&zeta).unwrap();
            self.n_pos.insert((ie, iz), n_ez);
            self.n_pos.insert((iz, ie), -n_ez);
            let xi_len = self.roots.inner(xi, xi);
            for alpha in &pos {
                let beta: Root = xi.iter().zip(alpha).map(|(a, b)| a - b).collect();
                let (Some(ia), Some(ib)) = (self.roots.index_of(alpha), self.roots.index_of(&beta)) else { continue };
                if ia == ie || ia == iz || self.n_pos.contains_key(&(ia, ib)) {
                    continue;
                }
                let mut s = Q::zero();
                let b_e: Root = beta.iter().zip(&eps).map(|(x, y)| x - y).collect();
                if self.roots.is_root(&b_e) {
                    let term = self.n_q(&beta, &neg_root(&eps)) * self.n_q(alpha, &neg_root(&zeta));
                    s += term / self.roots.inner(&b_e, &b_e);
                }
                let a_e: Root = alpha.iter().zip(&eps).map(|(x, y)| x - y).collect();
                if self.roots.is_root(&a_e) {
                    let term = self.n_q(&neg_root(&eps), alpha) * self.n_q(&beta, &neg_root(&zeta));
                    s += term / self.roots.inner(&a_e, &a_e);
                }
                let v = s * &xi_len / Q::from_integer(n_ez.into());
                assert!(v.is_integer(), "non-integral structure constant");
                let v = v.to_integer().try_into().expect("small structure constant");
                self.n_pos.insert((ia, ib), v);
                self.n_pos.insert((ib, ia), -v);
            }
        }
    }

    /// `N_{x,y}` for roots with `x + y` a root.
    fn n_q(&self, x: &[i64], y: &[i64]) -> Q {
        let pos = |r: &[i64]| r.iter().all(|&c| c >= 0);
        match (pos(x), pos(y)) {
            (true, true) => {
                let k = (self.roots.index_of(x).unwrap(), self.roots.index_of(y).unwrap());
                Q::from_integer(self.n_pos[&k].into())
            }
            (false, false) => -self.n_q(&neg_root(x), &neg_root(y)),
            (false, true) => -self.n_q(y, x),
            (true, false) => {
                let b = neg_root(y);
                let gamma: Root = x.iter().zip(&b).map(|(p, q)| p - q).collect();
                if pos(&gamma) {
                    // x + (-b) + (-γ) = 0
                    -(self.roots.inner(&gamma, &gamma) / self.roots.inner(x, x)) * self.n_q(&b, &gamma)
                } else {
                    // x + (-b) + δ = 0
                    let delta = neg_root(&gamma);
                    self.roots.inner(&delta, &delta) / self.roots.inner(&b, &b) * self.n_q(&delta, x)
                }
            }
        }
    }

    /// Structure constant `N_{x,y}`, zero when `x + y` is not a root.
    pub fn structure_constant(&self, x: &[i64], y: &[i64]) -> i64 {
        let s = add_roots(x, y);
        if s.iter().all(|&c| c == 0) || !self.roots.is_root(&s) {
            return 0;
        }
        self.n_q(x, y).to_integer().try_into().unwrap()
    }

    fn build_table(&mut self) {
        let d = self.dim;
        let n = self.rank();
        let mut table = vec![vec![Vec::new(); d]; d];
        for a in 0..d {
            for b in 0..d {
                let ra = &self.basis_roots[a];
                let rb = &self.basis_roots[b];
                let a_root = ra.iter().any(|&c| c != 0);
                let b_root = rb.iter().any(|&c| c != 0);
                let entry: Vec<(usize, Q)> = match (a_root, b_root) {
                    (false, false) => Vec::new(),
                    (false, true) => {
                        let i = a - self.npos;
                        let v = self.roots.pair_simple_coroot(rb, i);
                        if v == 0 { Vec::new() } else { vec![(b, Q::from_integer(v.into()))] }
                    }
                    (true, false) => {
                        let i = b - self.npos;
                        let v = -self.roots.pair_simple_coroot(ra, i);
                        if v == 0 { Vec::new() } else { vec![(a, Q::from_integer(v.into()))] }
                    }
                    (true, true) => {
                        let s = add_roots(ra, rb);
                        if s.iter().all(|&c| c == 0) {
                            let positive = ra.iter().all(|&c| c >= 0);
                            let co = self.roots.coroot(if positive { ra } else { rb });
                            let sign = if positive { Q::one() } else { -Q::one() };
                            (0..n).filter(|&i| !co[i].is_zero()).map(|i| (self.npos + i, co[i].clone() * &sign)).collect()
                        } else if let Some(&k) = self.root_to_index.get(&s) {
                            vec![(k, self.n_q(ra, rb))]
                        } else {
                            Vec::new()
                        }
                    }
                };
                table[a][b] = entry;
            }
        }
        self.table = table;
    }

    fn build_gram(&mut self) {
        let d = self.dim;
        let n = self.rank();
        let lengths = self.roots.simple_lengths().to_vec();
        let mut g = Mat::zeros(d, d);
        for a in 0..d {
            let r = &self.basis_roots[a];
            if r.iter().any(|&c| c != 0) {
                let b = self.root_to_index[&neg_root(r)];
                let comp = self.component_of[r.iter().position(|&c| c != 0).unwrap()];
                g[(a, b)] = Q::from_integer(2.into()) / self.roots.inner(r, r) * &self.form_scale[comp];
            }
        }
        for i in 0..n {
            for j in 0..n {
                let v = Q::from_integer((2 * self.roots.cartan().a(i, j)).into()) / &lengths[j];
                g[(self.npos + i, self.npos + j)] = v * &self.form_scale[self.component_of[i]];
            }
        }
        self.gram = g;
    }

    fn build_principal(&mut self) {
        let n = self.rank();
        let at: Mat<Q> = self.roots.cartan().to_mat::<Q>().transpose();
        let r = at.solve(&vec![Q::one(); n]).expect("Cartan matrix invertible");
        let mut rho = vec![Q::zero(); self.dim];
        let mut p1 = vec![Q::zero(); self.dim];
        let mut pm1 = vec![Q::zero(); self.dim];
        for i in 0..n {
            rho[self.h(i)] = r[i].clone();
            p1[self.e(i)] = r[i].clone() * Q::from_integer(2.into());
            pm1[self.f(i)] = Q::one();
        }
        self.rho_check = rho;
        self.p1 = p1;
        self.pm1 = pm1;
    }

    fn build_centralizer(&mut self) {
        let ad = self.ad::<Q>(&self.p1);
        let mut out: Vec<(usize, Vec<Q>)> = Vec::new();
        for k in 1..=self.max_height() as usize {
            let idx = self.degree_indices(k as i64);
            let sub = ad.submatrix(&(0..self.dim).collect::<Vec<_>>(), &idx);
            let mut kernel: Vec<Vec<Q>> = Vec::new();
            if k == 1 {
                kernel.push(idx.iter().map(|&j| self.p1[j].clone()).collect());
            }
            let (echelon, _) = Mat::from_rows(sub.kernel()).rref();
            for v in echelon.to_rows() {
                if vecops::is_zero(&v) {
                    continue;
                }
                let mut trial = kernel.clone();
                trial.push(v.clone());
                if Mat::from_rows(trial).rank() > kernel.len() {
                    kernel.push(v);
                }
            }
            for v in kernel {
                let mut full = vec![Q::zero(); self.dim];
                for (c, &j) in v.iter().zip(&idx) {
                    full[j] = c.clone();
                }
                out.push((k, full));
            }
        }
        self.centralizer = out;
    }

    fn build_ds(&mut self) {
        let h = self.max_height();
        let pm1 = self.pm1.clone();
        let mut levels = Vec::new();
        for i in 0..=h {
            let rows = self.degree_indices(i);
            let y_cols = self.degree_indices(i + 1);
            let c_cols: Vec<usize> =
                (0..self.centralizer.len()).filter(|&k| self.centralizer[k].0 as i64 == i).collect();
            let mut cols: Vec<Vec<Q>> = Vec::new();
            for &y in &y_cols {
                let mut ey = vec![Q::zero(); self.dim];
                ey[y] = Q::one();
                let br = self.bracket(&pm1, &ey);
                cols.push(rows.iter().map(|&r| br[r].clone()).collect());
            }
            for &c in &c_cols {
                cols.push(rows.iter().map(|&r| self.centralizer[c].1[r].clone()).collect());
            }
            let m = Mat::from_rows(cols).transpose();
            let inverse = m.inverse().expect("graded decomposition of g_i");
            levels.push(DsLevel { rows, y_cols, c_cols, inverse });
        }
        self.ds = levels;
    }

    pub fn roots(&self) -> &RootSystem {
        &self.roots
    }

    pub fn cartan(&self) -> &CartanDatum {
        self.roots.cartan()
    }

    pub fn rank(&self) -> usize {
        self.roots.rank()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_positive(&self) -> usize {
        self.npos
    }

    /// Index of `E_i`.
    pub fn e(&self, i: usize) -> usize {
        self.npos + self.rank() + i
    }

    /// Index of `F_i`.
    pub fn f(&self, i: usize) -> usize {
        self.npos - 1 - i
    }

    /// Index of `α̌_i`.
    pub fn h(&self, i: usize) -> usize {
        self.npos + i
    }

    pub fn is_cartan_index(&self, k: usize) -> bool {
        k >= self.npos && k < self.npos + self.rank()
    }

    /// Index of the root vector `E_β`, for positive or negative `β`.
    pub fn root_index(&self, beta: &[i64]) -> Option<usize> {
        self.root_to_index.get(beta).copied()
    }

    /// Root of a basis element (zero for Cartan elements).
    pub fn basis_root(&self, k: usize) -> &[i64] {
        &self.basis_roots[k]
    }

    pub fn height(&self, k: usize) -> i64 {
        self.heights[k]
    }

    pub fn max_height(&self) -> i64 {
        self.roots.max_height()
    }

    /// Coxeter number of a simple algebra (one more than the top height).
    pub fn coxeter_number(&self) -> i64 {
        self.max_height() + 1
    }

    pub fn degree_indices(&self, i: i64) -> Vec<usize> {
        (0..self.dim).filter(|&k| self.heights[k] == i).collect()
    }

    /// Indices of `n` (positive root vectors).
    pub fn positive_indices(&self) -> Vec<usize> {
        (self.npos + self.rank()..self.dim).collect()
    }

    /// Indices of `n₋`.
    pub fn negative_indices(&self) -> Vec<usize> {
        (0..self.npos).collect()
    }

    /// Indices of `b₋ = h ⊕ n₋`.
    pub fn borel_minus_indices(&self) -> Vec<usize> {
        (0..self.npos + self.rank()).collect()
    }

    pub fn basis_vector<F: Field>(&self, k: usize) -> Vec<F> {
        let mut v = vecops::zeros(self.dim);
        v[k] = F::one();
        v
    }

    pub fn basis_label(&self, k: usize) -> String {
        if self.is_cartan_index(k) {
            return format!("h{}", k - self.npos + 1);
        }
        let r = &self.basis_roots[k];
        let name = if r.iter().all(|&c| c >= 0) { "E" } else { "F" };
        let digits: String = r
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(i + 1, c.unsigned_abs() as usize))
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(if self.rank() > 9 { "," } else { "" });
        format!("{name}{digits}")
    }

    /// `[x_a, x_b]` as a sparse list.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(usize, Q)] {
        &self.table[a][b]
    }

    pub fn bracket<F: Field>(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out: Vec<F> = vecops::zeros(self.dim);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let xy = xa.clone() * yb;
                for (k, c) in &self.table[a][b] {
                    out[*k] = out[*k].clone() + xy.clone() * &F::from_rational(c);
                }
            }
        }
        out
    }

    /// Matrix of `ad x` acting on coordinate columns.
    pub fn ad<F: Field>(&self, x: &[F]) -> Mat<F> {
        let mut m: Mat<F> = Mat::zeros(self.dim, self.dim);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for b in 0..self.dim {
                for (k, c) in &self.table[a][b] {
                    let v = m[(*k, b)].clone() + xa.clone() * &F::from_rational(c);
                    m[(*k, b)] = v;
                }
            }
        }
        m
    }

    /// Recovers `x` from a matrix known to equal `ad x`.
    pub fn from_ad<F: Field>(&self, m: &Mat<F>) -> Vec<F> {
        let n = self.rank();
        let rho: Vec<F> = vecops::lift(&self.rho_check);
        let mr = m.mul_vec(&rho);
        let mut x = vecops::zeros(self.dim);
        for k in 0..self.dim {
            let h = self.heights[k];
            if h != 0 {
                x[k] = -mr[k].clone() / F::from_i64(h);
            }
        }
        // ⟨α_i, h⟩ is the E_i-coefficient of [x, E_i]
        let rhs: Vec<F> = (0..n).map(|i| m[(self.e(i), self.e(i))].clone()).collect();
        let at: Mat<F> = self.cartan().to_mat::<F>().transpose();
        let hcoords = at.solve(&rhs).expect("Cartan matrix invertible");
        for i in 0..n {
            x[self.h(i)] = hcoords[i].clone();
        }
        x
    }

    /// `exp(ad x)` for nilpotent `ad x`.
    pub fn exp_ad<F: Field>(&self, x: &[F]) -> Mat<F> {
        exp_nilpotent(&self.ad(x))
    }

    /// `exp(ad x) y` without forming matrices.
    pub fn exp_ad_apply<F: Field>(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut acc = y.to_vec();
        let mut term = y.to_vec();
        for k in 1.. {
            term = vecops::scale(&self.bracket(x, &term), &F::from_i64(k).inv());
            if vecops::is_zero(&term) {
                break;
            }
            acc = vecops::add(&acc, &term);
            assert!(k <= 4 * self.dim as i64, "exp_ad_apply: element is not nilpotent");
        }
        acc
    }

    /// `Z ∈ n` with `exp(ad Z) ρ̌ = x`, for `x ∈ ρ̌ + n`.
    pub fn log_from_rho_image<F: Field>(&self, x: &[F]) -> Vec<F> {
        let rho: Vec<F> = vecops::lift(&self.rho_check);
        let mut z: Vec<F> = vecops::zeros(self.dim);
        for k in 1..=self.max_height() {
            let y = self.exp_ad_apply(&z, &rho);
            for idx in self.degree_indices(k) {
                z[idx] = -(x[idx].clone() - &y[idx]) / F::from_i64(k);
            }
        }
        z
    }

    /// Logarithm of a unipotent element of `N` given by its adjoint matrix.
    pub fn log_unipotent<F: Field>(&self, m: &Mat<F>) -> Vec<F> {
        let rho: Vec<F> = vecops::lift(&self.rho_check);
        self.log_from_rho_image(&m.mul_vec(&rho))
    }

    pub fn gram(&self) -> &Mat<Q> {
        &self.gram
    }

    pub fn form<F: Field>(&self, x: &[F], y: &[F]) -> F {
        let mut acc = F::zero();
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                let g = &self.gram[(a, b)];
                if !g.is_zero() && !yb.is_zero() {
                    acc = acc + xa.clone() * yb * &F::from_rational(g);
                }
            }
        }
        acc
    }

    pub fn form_scale(&self) -> &[Q] {
        &self.form_scale
    }

    pub fn rho_check<F: Field>(&self) -> Vec<F> {
        vecops::lift(&self.rho_check)
    }

    pub fn p1<F: Field>(&self) -> Vec<F> {
        vecops::lift(&self.p1)
    }

    pub fn pm1<F: Field>(&self) -> Vec<F> {
        vecops::lift(&self.pm1)
    }

    /// `(p₋₁, ρ̌, p₁)`.
    pub fn principal_triple<F: Field>(&self) -> (Vec<F>, Vec<F>, Vec<F>) {
        (self.pm1(), self.rho_check(), self.p1())
    }

    /// Exponents with multiplicity, ascending.
    pub fn exponents(&self) -> Vec<usize> {
        self.centralizer.iter().map(|(k, _)| *k).collect()
    }

    /// Basis `{p_k}` of the centralizer `a` of `p₁`, ordered by exponent.
    pub fn centralizer_basis<F: Field>(&self) -> Vec<(usize, Vec<F>)> {
        self.centralizer.iter().map(|(k, v)| (*k, vecops::lift(v))).collect()
    }

    /// Degree-`i` part of `x`.
    pub fn degree_part<F: Field>(&self, x: &[F], i: i64) -> Vec<F> {
        (0..self.dim).map(|k| if self.heights[k] == i { x[k].clone() } else { F::zero() }).collect()
    }

    /// Splits `x ∈ g_i` (`0 ≤ i ≤` top height) as `[p₋₁, Y] + Σ c_k p_k` with `Y ∈ g_{i+1}`.
    /// Returns `Y` and the coefficients, indexed like [`Self::centralizer_basis`].
    pub fn ds_split<F: Field>(&self, i: i64, x: &[F]) -> (Vec<F>, Vec<(usize, F)>) {
        let lvl = &self.ds[i as usize];
        let rhs: Vec<F> = lvl.rows.iter().map(|&r| x[r].clone()).collect();
        let inv: Mat<F> = lvl.inverse.map(F::from_rational);
        let sol = inv.mul_vec(&rhs);
        let mut y = vecops::zeros(self.dim);
        for (k, &idx) in lvl.y_cols.iter().enumerate() {
            y[idx] = sol[k].clone();
        }
        let cs = lvl.c_cols.iter().enumerate().map(|(k, &c)| (c, sol[lvl.y_cols.len() + k].clone())).collect();
        (y, cs)
    }

    /// `⟨β, λ̌⟩` for a root and coweight coordinates `⟨α_j, λ̌⟩`.
    pub fn pair_root<F: Field>(&self, beta: &[i64], coweight: &[F]) -> F {
        beta.iter().zip(coweight).fold(F::zero(), |acc, (b, c)| if *b == 0 { acc } else { acc + F::from_i64(*b) * c })
    }

    /// Element of `h` with the given coweight coordinates.
    pub fn coweight_element<F: Field>(&self, coords: &[F]) -> Vec<F> {
        let at: Mat<F> = self.cartan().to_mat::<F>().transpose();
        let c = at.solve(coords).expect("Cartan matrix invertible");
        let mut x = vecops::zeros(self.dim);
        for (i, ci) in c.into_iter().enumerate() {
            x[self.h(i)] = ci;
        }
        x
    }

    /// Coweight coordinates `⟨α_j, h⟩` of the Cartan part of `x`.
    pub fn coweight_coords<F: Field>(&self, x: &[F]) -> Vec<F> {
        let n = self.rank();
        (0..n)
            .map(|j| (0..n).fold(F::zero(), |acc, i| acc + x[self.h(i)].clone() * &F::from_i64(self.cartan().a(i, j))))
            .collect()
    }

    /// `ω̌_i` as an element of `h`.
    pub fn fundamental_coweight<F: Field>(&self, i: usize) -> Vec<F> {
        let mut c = vecops::zeros(self.rank());
        c[i] = F::one();
        self.coweight_element(&c)
    }

    /// Diagonal adjoint matrix of the torus element `s^{λ̌}`, given the scalar
    /// values `s^{⟨β, λ̌⟩}` through `power(⟨β, λ̌⟩)`.
    pub fn torus<F: Field>(&self, coweight: &[i64], power: impl Fn(i64) -> F) -> Mat<F> {
        let d: Vec<F> = (0..self.dim)
            .map(|k| {
                let p: i64 = self.basis_roots[k].iter().zip(coweight).map(|(b, c)| b * c).sum();
                power(p)
            })
            .collect();
        Mat::diagonal(&d)
    }

    /// Indices of the simple factor containing each simple root.
    pub fn component_of(&self, i: usize) -> usize {
        self.component_of[i]
    }
}

/// `exp(M)` for a nilpotent matrix.
pub fn exp_nilpotent<F: Field>(m: &Mat<F>) -> Mat<F> {
    let n = m.rows();
    let mut acc = Mat::identity(n);
    let mut term = Mat::identity(n);
    for k in 1..=n as i64 {
        term = term.mul(m).scale(&F::from_i64(k).inv());
        if term.is_zero() {
            return acc;
        }
        acc = acc.add(&term);
    }
    assert!(term.mul(m).is_zero(), "exp_nilpotent: matrix is not nilpotent");
    acc
}
