//! Points of the flag variety `G/B₋` attached to reproductions, and the
//! cells of its `ϑ`-fixed locus.

use cycloper_arith::{CycloField, Field, Mat, Point, RatFunc};
use cycloper_lie::{vecops, weyl_lift, AlgebraAut, ChevalleyAlgebra, Root, WeylElement, WeylGroup};

use crate::connection::GroupElement;
use crate::error::{CoreError, Result};

/// Limit at `t → 0` of the subspace spanned by the given columns.
pub fn limit_subspace<K: Field>(cols: &[Vec<RatFunc<K>>]) -> Vec<Vec<K>> {
    let origin = Point::origin();
    let mut cols: Vec<Vec<RatFunc<K>>> = cols.to_vec();
    loop {
        let mut leads = Vec::with_capacity(cols.len());
        for col in cols.iter_mut() {
            let v = col.iter().filter_map(|f| f.order_at(&origin)).min().expect("nonzero column");
            if v != 0 {
                let s = RatFunc::monomial(K::one(), -v);
                for f in col.iter_mut() {
                    *f = f.clone() * &s;
                }
            }
            leads.push(col.iter().map(|f| f.eval(&K::zero()).expect("normalized column is regular")).collect::<Vec<K>>());
        }
        let dim = leads[0].len();
        let m = Mat::from_fn(dim, leads.len(), |i, j| leads[j][i].clone());
        let ker = m.kernel();
        let Some(c) = ker.first() else { return leads };
        let p = c.iter().rposition(|x| !x.is_zero()).expect("nonzero kernel vector");
        let mut combo: Vec<RatFunc<K>> = vecops::zeros(dim);
        for (j, cj) in c.iter().enumerate() {
            if !cj.is_zero() {
                combo = vecops::add(&combo, &vecops::scale(&cols[j], &RatFunc::constant(cj.clone())));
            }
        }
        cols[p] = combo;
    }
}

/// Position of a flag `L ⊂ g` (a conjugate of `b₋`) in the Bruhat cell
/// `N ẇ B₋`, with coordinates `X ∈ n` supported on `{α > 0 : w⁻¹α > 0}`.
#[derive(Clone, Debug, PartialEq)]
pub struct FlagPoint<K> {
    pub w: WeylElement,
    /// `X` with `L = exp(ad X) ẇ b₋`.
    pub coords: Vec<K>,
    /// `exp(ad X)`.
    pub n: Mat<K>,
}

fn big_cell_log<K: Field>(alg: &ChevalleyAlgebra, basis: &Mat<K>) -> Option<Vec<K>> {
    let low = alg.borel_minus_indices();
    let p_low = basis.submatrix(&low, &(0..basis.cols()).collect::<Vec<_>>());
    let rho: Vec<K> = alg.rho_check();
    let rho_low: Vec<K> = low.iter().map(|&k| rho[k].clone()).collect();
    if p_low.rows() != p_low.cols() || p_low.det().is_zero() {
        return None;
    }
    let c = p_low.solve_unique(&rho_low)?;
    Some(alg.log_from_rho_image(&basis.mul_vec(&c)))
}

/// Cell and coordinates of a constant flag `L`, given by a basis of columns.
pub fn locate_flag<K: Field>(alg: &ChevalleyAlgebra, flag: &[Vec<K>]) -> Result<FlagPoint<K>> {
    let group = WeylGroup::enumerate(alg.cartan())?;
    let mut elems: Vec<WeylElement> = group.elements().to_vec();
    elems.sort_by_key(|w| w.len());
    let cols = Mat::from_fn(alg.dim(), flag.len(), |i, j| flag[j][i].clone());
    let low = alg.borel_minus_indices();
    for w in elems {
        let lift: Mat<K> = weyl_lift(alg, &w);
        let lift_inv = lift.inverse().expect("Weyl lift invertible");
        let moved = lift_inv.mul(&cols);
        let Some(y) = big_cell_log(alg, &moved) else { continue };
        let supported = (0..alg.dim()).all(|k| {
            y[k].is_zero() || alg.height(k) > 0 && {
                let img = w.act_on_root(alg.cartan(), alg.basis_root(k));
                img.iter().sum::<i64>() > 0
            }
        });
        if !supported {
            continue;
        }
        // exp(ad Y) b₋ must equal the moved flag
        let e = alg.exp_ad(&y);
        let image = e.submatrix(&(0..alg.dim()).collect::<Vec<_>>(), &low);
        let joined = Mat::from_fn(alg.dim(), image.cols() + moved.cols(), |i, j| {
            if j < image.cols() {
                image[(i, j)].clone()
            } else {
                moved[(i, j - image.cols())].clone()
            }
        });
        if joined.rank() != low.len() {
            continue;
        }
        let coords = lift.mul_vec(&y);
        let n = alg.exp_ad(&coords);
        return Ok(FlagPoint { w, coords, n });
    }
    Err(CoreError::Internal("flag lies in no Bruhat cell".into()))
}

/// Flag point `lim_{t→0} g_r(t)⁻¹ b₋` of a reproduction `g`, where
/// `g_r = t^{−λ̌₀} g t^{λ̌₀}`.
pub fn flag_position<K: Field>(alg: &ChevalleyAlgebra, lambda0: &[i64], g: &GroupElement<K>) -> Result<FlagPoint<K>> {
    let neg: Vec<i64> = lambda0.iter().map(|c| -c).collect();
    let gr = GroupElement::torus(alg, &neg).compose(g).compose(&GroupElement::torus(alg, lambda0));
    let m = gr.inverse_matrix();
    let cols: Vec<Vec<RatFunc<K>>> = alg.borel_minus_indices().iter().map(|&k| m.col(k)).collect();
    locate_flag(alg, &limit_subspace(&cols))
}

/// Cell `N ẇ B₋/B₋` of the flag variety with its `ϑ`-fixed part.
#[derive(Clone, Debug, PartialEq)]
pub struct FlagCell<K> {
    pub w: WeylElement,
    /// `{α > 0 : w⁻¹α > 0}`.
    pub roots: Vec<Root>,
    /// Basis of the `ϑ`-fixed vectors in the span of those root vectors.
    pub fixed_basis: Vec<Vec<K>>,
}

impl<K> FlagCell<K> {
    pub fn fixed_dim(&self) -> usize {
        self.fixed_basis.len()
    }
}

/// Cells labelled by `w ∈ W^ν` with the `ϑ`-fixed subspace of each.
pub fn fixed_flag_cells<K: CycloField>(alg: &ChevalleyAlgebra, theta: &AlgebraAut<K>) -> Result<Vec<FlagCell<K>>> {
    let perm = theta.diagram().perm().to_vec();
    let group = WeylGroup::enumerate(alg.cartan())?;
    let mut elems = group.nu_invariant(&perm);
    elems.sort_by_key(|w| w.len());
    let mut out = Vec::new();
    for w in elems {
        let winv = w.inverse(alg.cartan());
        let idx: Vec<usize> = alg
            .positive_indices()
            .into_iter()
            .filter(|&k| winv.act_on_root(alg.cartan(), alg.basis_root(k)).iter().sum::<i64>() > 0)
            .collect();
        let roots = idx.iter().map(|&k| alg.basis_root(k).to_vec()).collect();
        let sub = theta.matrix().submatrix(&idx, &idx);
        let shift = sub.sub(&Mat::identity(idx.len()));
        let fixed_basis = shift
            .kernel()
            .into_iter()
            .map(|v| {
                let mut full: Vec<K> = vecops::zeros(alg.dim());
                for (c, &k) in v.into_iter().zip(&idx) {
                    full[k] = c;
                }
                full
            })
            .collect();
        out.push(FlagCell { w, roots, fixed_basis });
    }
    Ok(out)
}
