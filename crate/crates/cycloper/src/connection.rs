//! Connections `d + A(t) dt` on the trivial bundle over ℙ¹ and the adjoint
//! gauge group acting on them.
//!
//! A connection is stored as the coefficient vector of `A(t)` in the
//! Chevalley basis of the algebra; group elements are adjoint matrices with
//! rational-function entries, carried together with their inverses.

use cycloper_arith::{rational_antiderivative, exp_integral, CycloField, Field, Mat, MonodromyObstruction, Point, RatFunc};
use cycloper_lie::{vecops, AlgebraAut, AutKind, ChevalleyAlgebra, DiagramAut};
use num_traits::Zero;

use crate::error::{CoreError, Result};

pub(crate) fn konst<K: Field>(k: &K) -> RatFunc<K> {
    RatFunc::constant(k.clone())
}

pub(crate) fn lift_mat<K: Field>(m: &Mat<K>) -> Mat<RatFunc<K>> {
    m.map(konst)
}

pub(crate) fn render_vec<K: Field>(v: &[K], zeta: Option<u32>) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.render(&["t", "z"], zeta)).collect();
    format!("[{}]", parts.join(", "))
}

/// Which subalgebra a connection takes values in, most specific first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// `A ∈ h(t)`.
    Cartan,
    /// `A ∈ p₋₁ + b(t)`.
    Oper,
    /// `A ∈ b(t)`.
    Borel,
    /// `A ∈ b₋(t)`.
    BorelMinus,
    General,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Connection<K: Field> {
    coeffs: Vec<RatFunc<K>>,
}

impl<K: Field> Connection<K> {
    pub fn new(coeffs: Vec<RatFunc<K>>) -> Self {
        Connection { coeffs }
    }

    pub fn zero(alg: &ChevalleyAlgebra) -> Self {
        Connection { coeffs: vecops::zeros(alg.dim()) }
    }

    /// `d + p₋₁ + v`.
    pub fn oper(alg: &ChevalleyAlgebra, v: &[RatFunc<K>]) -> Self {
        Connection { coeffs: vecops::add(&alg.pm1(), v) }
    }

    /// `d + p₋₁ + Σ u_i α̌_i`.
    pub fn miura(alg: &ChevalleyAlgebra, u: &[RatFunc<K>]) -> Self {
        let mut coeffs: Vec<RatFunc<K>> = alg.pm1();
        for (i, ui) in u.iter().enumerate() {
            coeffs[alg.h(i)] = ui.clone();
        }
        Connection { coeffs }
    }

    pub fn coeffs(&self) -> &[RatFunc<K>] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<RatFunc<K>> {
        self.coeffs
    }

    pub fn shape(&self, alg: &ChevalleyAlgebra) -> Shape {
        let nz = |k: usize| !self.coeffs[k].is_zero();
        let d = alg.dim();
        if (0..d).all(|k| alg.is_cartan_index(k) || !nz(k)) {
            return Shape::Cartan;
        }
        let pm1: Vec<RatFunc<K>> = alg.pm1();
        if alg.degree_part(&self.coeffs, -1) == pm1 && (0..d).all(|k| alg.height(k) >= -1 || !nz(k)) {
            return Shape::Oper;
        }
        if (0..d).all(|k| alg.height(k) >= 0 || !nz(k)) {
            return Shape::Borel;
        }
        if (0..d).all(|k| alg.height(k) <= 0 || !nz(k)) {
            return Shape::BorelMinus;
        }
        Shape::General
    }

    /// `A ∈ b₋(t)`, regardless of the more specific shape.
    pub fn in_borel_minus(&self, alg: &ChevalleyAlgebra) -> bool {
        (0..alg.dim()).all(|k| alg.height(k) <= 0 || self.coeffs[k].is_zero())
    }

    /// Coefficients of the Cartan part in the basis `α̌_i`.
    pub fn cartan_part(&self, alg: &ChevalleyAlgebra) -> Vec<RatFunc<K>> {
        (0..alg.rank()).map(|i| self.coeffs[alg.h(i)].clone()).collect()
    }

    /// `A(c·t)` (without the factor `c` from `dt`).
    pub fn scale_var(&self, c: &K) -> Self {
        Connection { coeffs: self.coeffs.iter().map(|f| f.scale_var(c)).collect() }
    }

    pub fn render(&self, alg: &ChevalleyAlgebra, zeta: Option<u32>) -> String {
        let mut terms = Vec::new();
        for (k, f) in self.coeffs.iter().enumerate() {
            if !f.is_zero() {
                terms.push(format!("({})*{}", f.render_with(&["t", "z"], zeta), alg.basis_label(k)));
            }
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Element of the adjoint group over `K(t)`, with its inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement<K: Field> {
    mat: Mat<RatFunc<K>>,
    inv: Mat<RatFunc<K>>,
}

impl<K: Field> GroupElement<K> {
    pub fn identity(alg: &ChevalleyAlgebra) -> Self {
        GroupElement { mat: Mat::identity(alg.dim()), inv: Mat::identity(alg.dim()) }
    }

    /// `exp(ad x)` for nilpotent `x`.
    pub fn exp(alg: &ChevalleyAlgebra, x: &[RatFunc<K>]) -> Self {
        GroupElement { mat: alg.exp_ad(x), inv: alg.exp_ad(&vecops::neg(x)) }
    }

    /// `t^{λ̌}` for an integral coweight.
    pub fn torus(alg: &ChevalleyAlgebra, coweight: &[i64]) -> Self {
        GroupElement {
            mat: alg.torus(coweight, |p| RatFunc::monomial(K::one(), p)),
            inv: alg.torus(coweight, |p| RatFunc::monomial(K::one(), -p)),
        }
    }

    /// Constant element; fails if the matrix is singular.
    pub fn constant(m: &Mat<K>) -> Result<Self> {
        let inv = m.inverse().ok_or_else(|| CoreError::InvalidInput("singular group element".into()))?;
        Ok(GroupElement { mat: lift_mat(m), inv: lift_mat(&inv) })
    }

    pub fn from_matrix(mat: Mat<RatFunc<K>>) -> Result<Self> {
        let inv = mat.inverse().ok_or_else(|| CoreError::InvalidInput("singular group element".into()))?;
        Ok(GroupElement { mat, inv })
    }

    pub(crate) fn from_parts(mat: Mat<RatFunc<K>>, inv: Mat<RatFunc<K>>) -> Self {
        GroupElement { mat, inv }
    }

    pub fn matrix(&self) -> &Mat<RatFunc<K>> {
        &self.mat
    }

    pub fn inverse_matrix(&self) -> &Mat<RatFunc<K>> {
        &self.inv
    }

    /// `self · other`.
    pub fn compose(&self, other: &GroupElement<K>) -> Self {
        GroupElement { mat: self.mat.mul(&other.mat), inv: other.inv.mul(&self.inv) }
    }

    pub fn inverse(&self) -> Self {
        GroupElement { mat: self.inv.clone(), inv: self.mat.clone() }
    }

    /// Value at `t = x`, if every entry is regular there.
    pub fn eval(&self, x: &K) -> Option<Mat<K>> {
        let rows = self.mat.rows();
        let mut out = Mat::zeros(rows, rows);
        for i in 0..rows {
            for j in 0..rows {
                out[(i, j)] = self.mat[(i, j)].eval(x)?;
            }
        }
        Some(out)
    }

    /// `g(c·t)`.
    pub fn scale_var(&self, c: &K) -> Self {
        GroupElement { mat: self.mat.map(|f| f.scale_var(c)), inv: self.inv.map(|f| f.scale_var(c)) }
    }

    /// Whether the element lies in `N`, i.e. is `exp(ad x)` for some `x ∈ n`.
    pub fn in_unipotent(&self, alg: &ChevalleyAlgebra) -> bool {
        let x = alg.log_unipotent(&self.mat);
        alg.exp_ad(&x) == self.mat
    }

    /// Whether the element preserves `b₋`.
    pub fn in_borel_minus(&self, alg: &ChevalleyAlgebra) -> bool {
        preserves_borel_minus(alg, &self.mat)
    }
}

pub(crate) fn preserves_borel_minus<F: Field>(alg: &ChevalleyAlgebra, m: &Mat<F>) -> bool {
    let low = alg.borel_minus_indices();
    let high = alg.positive_indices();
    high.iter().all(|&r| low.iter().all(|&c| m[(r, c)].is_zero()))
}

/// `dg·g⁻¹` as an element of the algebra.
pub fn log_derivative<K: Field>(alg: &ChevalleyAlgebra, g: &GroupElement<K>) -> Vec<RatFunc<K>> {
    let d = alg.dim();
    let dg = g.mat.map(|f| f.derivative());
    let rho: Vec<RatFunc<K>> = alg.rho_check();
    let mr = dg.mul_vec(&g.inv.mul_vec(&rho));
    let mut x: Vec<RatFunc<K>> = vecops::zeros(d);
    for (k, xk) in x.iter_mut().enumerate() {
        let h = alg.height(k);
        if h != 0 {
            *xk = -mr[k].clone() / RatFunc::from_i64(h);
        }
    }
    let n = alg.rank();
    let rhs: Vec<RatFunc<K>> = (0..n)
        .map(|i| {
            let e = alg.e(i);
            (0..d).fold(RatFunc::zero(), |acc, j| {
                if dg[(e, j)].is_zero() || g.inv[(j, e)].is_zero() {
                    acc
                } else {
                    acc + dg[(e, j)].clone() * &g.inv[(j, e)]
                }
            })
        })
        .collect();
    let h = alg.coweight_element(&rhs);
    for i in 0..n {
        x[alg.h(i)] = h[alg.h(i)].clone();
    }
    x
}

/// `g·∇ = d − dg·g⁻¹ + Ad_g A`.
pub fn gauge_transform<K: Field>(alg: &ChevalleyAlgebra, conn: &Connection<K>, g: &GroupElement<K>) -> Connection<K> {
    let moved = g.mat.mul_vec(&conn.coeffs);
    Connection { coeffs: vecops::sub(&moved, &log_derivative(alg, g)) }
}

/// Invariance under the twisted action `A(t) ↦ ω⁻¹ υ(A(ω⁻¹t))` on
/// connections and `g(t) ↦ υ g(ω⁻¹t) υ⁻¹` on group elements, `ω = ζ_T`.
pub trait Equivariant<K: CycloField> {
    fn is_equivariant(&self, aut: &AlgebraAut<K>) -> bool;
}

impl<K: CycloField> Equivariant<K> for Connection<K> {
    fn is_equivariant(&self, aut: &AlgebraAut<K>) -> bool {
        let winv = aut.omega().inv();
        let shifted = self.scale_var(&winv);
        let u = lift_mat(aut.matrix());
        let img = vecops::scale(&u.mul_vec(&shifted.coeffs), &konst(&winv));
        img == self.coeffs
    }
}

impl<K: CycloField> Equivariant<K> for GroupElement<K> {
    fn is_equivariant(&self, aut: &AlgebraAut<K>) -> bool {
        let winv = aut.omega().inv();
        let shifted = self.mat.map(|f| f.scale_var(&winv));
        let u = lift_mat(aut.matrix());
        let uinv = lift_mat(&aut.matrix().pow(aut.order_bound() - 1));
        u.mul(&shifted).mul(&uinv) == self.mat
    }
}

/// The rotation data `(T, ν)` together with `ς`.
#[derive(Clone, Debug)]
pub struct Symmetry<K: CycloField> {
    t: u32,
    nu: DiagramAut,
    varsigma: AlgebraAut<K>,
}

impl<K: CycloField> Symmetry<K> {
    pub fn new(alg: &ChevalleyAlgebra, nu: DiagramAut, t: u32) -> Result<Self> {
        if t == 0 || t as usize % nu.order() != 0 {
            return Err(CoreError::InvalidInput(format!("ν of order {} does not divide T = {t}", nu.order())));
        }
        let varsigma = AlgebraAut::new(alg, &nu, &AutKind::Varsigma, t)?;
        Ok(Symmetry { t, nu, varsigma })
    }

    /// `T = 1`, `ν = id`: no symmetry condition.
    pub fn trivial(alg: &ChevalleyAlgebra) -> Self {
        Self::new(alg, DiagramAut::identity(alg.rank()), 1).expect("trivial symmetry")
    }

    pub fn order(&self) -> u32 {
        self.t
    }

    pub fn nu(&self) -> &DiagramAut {
        &self.nu
    }

    pub fn varsigma(&self) -> &AlgebraAut<K> {
        &self.varsigma
    }

    pub fn omega(&self) -> K {
        K::zeta(self.t)
    }

    pub fn omega_pow(&self, r: i64) -> K {
        K::zeta_pow(self.t, r)
    }

    /// `ϑ = Ad_{ω^{-λ̌₀}} ∘ ς`.
    pub fn vartheta(&self, alg: &ChevalleyAlgebra, lambda0: &[i64]) -> Result<AlgebraAut<K>> {
        Ok(AlgebraAut::new(alg, &self.nu, &AutKind::Vartheta(lambda0.to_vec()), self.t)?)
    }

    /// `[x, ωx, …, ω^{T-1}x]`.
    pub fn orbit(&self, x: &K) -> Vec<K> {
        (0..self.t as i64).map(|r| self.omega_pow(r) * x).collect()
    }

    /// `ν^r` applied to coweight coordinates.
    pub fn nu_pow_coweight<F: Clone>(&self, c: &[F], r: usize) -> Vec<F> {
        (0..r).fold(c.to_vec(), |acc, _| self.nu.act_on_coweight(&acc))
    }
}

/// Residue of `A dt` at a simple pole, as an element of the algebra.
pub fn connection_residue<K: Field>(conn: &Connection<K>, at: &Point<K>) -> Result<Vec<K>> {
    let bound = match at {
        Point::Finite(_) => -1,
        Point::Infinity => 1,
    };
    let mut out = Vec::with_capacity(conn.coeffs.len());
    for (k, f) in conn.coeffs.iter().enumerate() {
        if f.order_at(at).is_some_and(|v| v < bound) {
            return Err(CoreError::NotRegularSingular { point: at.render(&["t", "z"], None), component: k });
        }
        out.push(f.residue(at));
    }
    Ok(out)
}

/// `t^{-λ̌₀}·∇`.
pub fn regularize<K: Field>(alg: &ChevalleyAlgebra, conn: &Connection<K>, lambda0: &[i64]) -> Connection<K> {
    let neg: Vec<i64> = lambda0.iter().map(|x| -x).collect();
    gauge_transform(alg, conn, &GroupElement::torus(alg, &neg))
}

/// Pullback along `t = u^q`: `A(u^q)·q·u^{q-1}`.
pub fn lift_to_cover<K: Field>(conn: &Connection<K>, q: usize) -> Connection<K> {
    let jac = RatFunc::monomial(K::from_i64(q as i64), q as i64 - 1);
    Connection { coeffs: conn.coeffs.iter().map(|f| f.substitute_power(q) * &jac).collect() }
}

/// Automorphism under which the pullback to the `q`-fold cover of a
/// `(T, ς)`-equivariant connection is equivariant: `T` becomes `qT` and the
/// generator exponents become `-q`.
pub fn cover_symmetry<K: CycloField>(alg: &ChevalleyAlgebra, sym: &Symmetry<K>, q: u32) -> Result<AlgebraAut<K>> {
    Ok(AlgebraAut::new(alg, sym.nu(), &AutKind::Sigma(vec![-(q as i64); alg.rank()]), q * sym.order())?)
}

/// Monodromy of `t^{λ̌₀}` around the origin, `exp(2πi λ̌₀)`, for `qλ̌₀` integral.
pub fn monodromy_at_origin<K: CycloField>(alg: &ChevalleyAlgebra, lambda0: &[K], q: u32) -> Result<Mat<K>> {
    let scaled: Option<Vec<i64>> = lambda0.iter().map(|c| (c.clone() * &K::from_i64(q as i64)).to_i64()).collect();
    let c = scaled.ok_or_else(|| CoreError::NonIntegralCoweight(render_vec(lambda0, None)))?;
    Ok(alg.torus(&c, |p| K::zeta_pow(q, p)))
}

/// Why a triangular system could not be solved in rational functions.
#[derive(Clone, Debug, PartialEq)]
pub enum OdeFailure<K> {
    NotTriangular,
    /// A diagonal entry with a non-integral residue or a higher-order pole.
    Diagonal(usize),
    /// The particular solution is singular at the base point.
    SingularAtBase(usize),
    Obstruction { row: usize, obstruction: MonodromyObstruction<K> },
}

/// Solves `Y' = −M·Y`, `Y(base) = Y₀`, for triangular `M`, row by row.
pub fn solve_matrix_ode<K: Field>(
    m: &Mat<RatFunc<K>>,
    base: &K,
    y0: &Mat<K>,
    hints: &[K],
) -> std::result::Result<Mat<RatFunc<K>>, OdeFailure<K>> {
    let n = m.rows();
    let upper = (0..n).all(|i| (0..i).all(|j| m[(i, j)].is_zero()));
    let lower = (0..n).all(|i| (i + 1..n).all(|j| m[(i, j)].is_zero()));
    if !upper && !lower {
        return Err(OdeFailure::NotTriangular);
    }
    let order: Vec<usize> = if upper { (0..n).rev().collect() } else { (0..n).collect() };
    let mut weights = Vec::with_capacity(n);
    for i in 0..n {
        let e = exp_integral(&-m[(i, i)].clone(), hints).map_err(|_| OdeFailure::Diagonal(i))?;
        let e0 = e.eval(base).filter(|v| !v.is_zero()).ok_or(OdeFailure::SingularAtBase(i))?;
        weights.push((e, e0));
    }
    let mut z: Mat<RatFunc<K>> = Mat::zeros(n, n);
    for col in 0..n {
        for &i in &order {
            let mut rhs = RatFunc::zero();
            for k in 0..n {
                if k != i && !m[(i, k)].is_zero() && !z[(k, col)].is_zero() {
                    rhs = rhs - &(m[(i, k)].clone() * &z[(k, col)]);
                }
            }
            let (e, e0) = &weights[i];
            let init = if i == col { e0.inv() } else { K::zero() };
            let integral = if rhs.is_zero() {
                RatFunc::zero()
            } else {
                let g = rational_antiderivative(&(rhs / e), hints).map_err(|obstruction| OdeFailure::Obstruction { row: i, obstruction })?;
                let g0 = g.eval(base).ok_or(OdeFailure::SingularAtBase(i))?;
                g - &konst(&g0)
            };
            z[(i, col)] = e.clone() * &(integral + &konst(&init));
        }
    }
    Ok(z.mul(&lift_mat(y0)))
}

/// Result of [`solve_fundamental`]: a rational solution or the residues that
/// obstruct one.
#[derive(Clone, Debug, PartialEq)]
pub enum Fundamental<K: Field> {
    Solution(GroupElement<K>),
    Obstruction(MonodromyObstruction<K>),
}

/// Fundamental solution `dY + ad(A)·Y = 0`, `Y(base) = Y₀`, of a
/// `b₋`-valued connection in the adjoint representation.
pub fn solve_fundamental<K: Field>(
    alg: &ChevalleyAlgebra,
    conn: &Connection<K>,
    base: &K,
    y0: &Mat<K>,
    hints: &[K],
) -> Result<Fundamental<K>> {
    if !conn.in_borel_minus(alg) {
        return Err(CoreError::Shape("solve_fundamental needs a b₋-valued connection".into()));
    }
    let m = alg.ad(&conn.coeffs);
    match solve_matrix_ode(&m, base, y0, hints) {
        Ok(y) => Ok(Fundamental::Solution(GroupElement::from_matrix(y)?)),
        Err(OdeFailure::Obstruction { row, mut obstruction }) => {
            obstruction.level = Some(alg.height(row).unsigned_abs() as usize);
            Ok(Fundamental::Obstruction(obstruction))
        }
        Err(OdeFailure::NotTriangular) => Err(CoreError::Internal("ad of b₋ is not triangular".into())),
        Err(OdeFailure::Diagonal(i)) | Err(OdeFailure::SingularAtBase(i)) => Err(CoreError::NoRationalSolution(format!(
            "fundamental solution singular in component {}",
            alg.basis_label(i)
        ))),
    }
}

/// Factorization `M = n⁻¹·b` with `n ∈ N`, `b ∈ B₋`, of an adjoint matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct GaussFactors<F> {
    /// `Y ∈ n` with `n⁻¹ = exp(ad Y)`.
    pub log_n_inverse: Vec<F>,
    pub n: Mat<F>,
    pub b: Mat<F>,
}

/// Factorizes `M = n⁻¹ b`. The columns of `M` spanning `M(b₋)` are combined
/// to meet `ρ̌ + n`, and the logarithm of `n⁻¹` is read off from that point.
pub fn gauss_factorize<F: Field>(alg: &ChevalleyAlgebra, m: &Mat<F>) -> Result<GaussFactors<F>> {
    let low = alg.borel_minus_indices();
    let p_low = m.submatrix(&low, &low);
    let rho: Vec<F> = alg.rho_check();
    let rho_low: Vec<F> = low.iter().map(|&k| rho[k].clone()).collect();
    // a singular minor means no candidate can pass the b₋ test below
    let outside = || CoreError::NotInOpenCell { minor: p_low.det().render(&["t", "z"], None) };
    let c = p_low.solve_unique(&rho_low).ok_or_else(outside)?;
    let cols = m.submatrix(&(0..alg.dim()).collect::<Vec<_>>(), &low);
    let x = cols.mul_vec(&c);
    let y = alg.log_from_rho_image(&x);
    let n = alg.exp_ad(&vecops::neg(&y));
    let b = n.mul(m);
    if !preserves_borel_minus(alg, &b) {
        return Err(outside());
    }
    Ok(GaussFactors { log_n_inverse: y, n, b })
}

/// Group-level form of [`gauss_factorize`]: `(n, b)` with `g = n⁻¹ b`.
pub fn gauss_factorize_group<K: Field>(
    alg: &ChevalleyAlgebra,
    g: &GroupElement<K>,
) -> Result<(GroupElement<K>, GroupElement<K>)> {
    let f = gauss_factorize(alg, &g.mat)?;
    let n = GroupElement::from_parts(f.n.clone(), alg.exp_ad(&f.log_n_inverse));
    let b_inv = g.inv.mul(&n.inv);
    Ok((n, GroupElement::from_parts(f.b, b_inv)))
}

