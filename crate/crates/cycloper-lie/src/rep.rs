use cycloper_arith::{Field, Mat};

use crate::algebra::ChevalleyAlgebra;
use crate::roots::{neg_root, unit};

/// A matrix representation determined by the images of `E_i`, `F_i`, `α̌_i`
/// and extended along extraspecial pairs.
#[derive(Clone, Debug)]
pub struct Representation<F> {
    images: Vec<Mat<F>>,
}

impl<F: Field> Representation<F> {
    pub fn from_generators(alg: &ChevalleyAlgebra, e: Vec<Mat<F>>, f: Vec<Mat<F>>, h: Vec<Mat<F>>) -> Self {
        let d = alg.dim();
        let n = alg.rank();
        let size = e[0].rows();
        let mut images: Vec<Option<Mat<F>>> = vec![None; d];
        for i in 0..n {
            images[alg.e(i)] = Some(e[i].clone());
            images[alg.f(i)] = Some(f[i].clone());
            images[alg.h(i)] = Some(h[i].clone());
        }
        for xi in alg.roots().positive().to_vec() {
            let Some((i, zeta)) = alg.roots().extraspecial(&xi) else { continue };
            let eps = unit(n, i);
            for (e_, z_, x_) in [(eps.clone(), zeta.clone(), xi.clone()), (neg_root(&eps), neg_root(&zeta), neg_root(&xi))] {
                let a = images[alg.root_index(&e_).unwrap()].clone().unwrap();
                let b = images[alg.root_index(&z_).unwrap()].clone().unwrap();
                let c = a.mul(&b).sub(&b.mul(&a)).scale(&F::from_i64(alg.structure_constant(&e_, &z_)).inv());
                images[alg.root_index(&x_).unwrap()] = Some(c);
            }
        }
        let images = images.into_iter().map(|m| m.unwrap_or_else(|| Mat::zeros(size, size))).collect();
        Representation { images }
    }

    /// Defining representation of `sl_{n+1}` for a type `A_n` algebra.
    pub fn fundamental_sl(alg: &ChevalleyAlgebra) -> Self {
        let n = alg.rank();
        let unit_mat = |i: usize, j: usize| {
            let mut m = Mat::zeros(n + 1, n + 1);
            m[(i, j)] = F::one();
            m
        };
        let e = (0..n).map(|i| unit_mat(i, i + 1)).collect();
        let f = (0..n).map(|i| unit_mat(i + 1, i)).collect();
        let h = (0..n).map(|i| unit_mat(i, i).sub(&unit_mat(i + 1, i + 1))).collect();
        Self::from_generators(alg, e, f, h)
    }

    pub fn size(&self) -> usize {
        self.images[0].rows()
    }

    pub fn image(&self, x: &[F]) -> Mat<F> {
        let s = self.size();
        x.iter().zip(&self.images).fold(Mat::zeros(s, s), |acc, (c, m)| if c.is_zero() { acc } else { acc.add(&m.scale(c)) })
    }

    pub fn basis_image(&self, k: usize) -> &Mat<F> {
        &self.images[k]
    }

    /// `exp(ρ(x))` for nilpotent `ρ(x)`.
    pub fn exp(&self, x: &[F]) -> Mat<F> {
        crate::algebra::exp_nilpotent(&self.image(x))
    }
}
