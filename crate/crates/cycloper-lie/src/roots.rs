use std::collections::HashMap;

use cycloper_arith::Q;
use num_traits::Zero;

use crate::cartan::CartanDatum;

pub type Root = Vec<i64>;

/// Positive roots ordered by height, then lexicographically by coordinates
/// read from the first simple root.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan: CartanDatum,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
    lengths: Vec<Q>,
    /// `(α_i, α_j)` for simple roots.
    form: Vec<Vec<Q>>,
}

impl RootSystem {
    pub fn new(cartan: &CartanDatum) -> Self {
        let n = cartan.rank();
        let mut positive: Vec<Root> = (0..n).map(|i| unit(n, i)).collect();
        let mut index: HashMap<Root, usize> = positive.iter().cloned().enumerate().map(|(k, r)| (r, k)).collect();
        let mut level: Vec<Root> = positive.clone();
        while !level.is_empty() {
            let mut next: Vec<Root> = Vec::new();
            for beta in &level {
                for i in 0..n {
                    // α_i-string through β: p - q = ⟨β, α̌_i⟩
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if index.contains_key(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..n).map(|j| beta[j] * cartan.a(i, j)).sum();
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if !next.contains(&up) {
                            next.push(up);
                        }
                    }
                }
            }
            next.sort_by(|a, b| b.cmp(a));
            for r in &next {
                index.insert(r.clone(), positive.len());
                positive.push(r.clone());
            }
            level = next;
        }
        let lengths = cartan.root_lengths();
        let half = Q::new(1.into(), 2.into());
        let form = (0..n)
            .map(|i| (0..n).map(|j| Q::from_integer(cartan.a(i, j).into()) * &lengths[i] * &half).collect())
            .collect();
        RootSystem { cartan: cartan.clone(), positive, index, lengths, form }
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn positive(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Index among positive roots.
    pub fn index_of(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn is_root(&self, r: &[i64]) -> bool {
        if r.iter().all(|&x| x >= 0) {
            self.index.contains_key(r)
        } else if r.iter().all(|&x| x <= 0) {
            let neg: Root = r.iter().map(|x| -x).collect();
            self.index.contains_key(&neg)
        } else {
            false
        }
    }

    pub fn height(r: &[i64]) -> i64 {
        r.iter().sum()
    }

    pub fn max_height(&self) -> i64 {
        self.positive.last().map_or(0, |r| Self::height(r))
    }

    /// `⟨β, α̌_i⟩`.
    pub fn pair_simple_coroot(&self, beta: &[i64], i: usize) -> i64 {
        beta.iter().enumerate().map(|(j, b)| b * self.cartan.a(i, j)).sum()
    }

    /// `(β, γ)` in the normalized invariant form.
    pub fn inner(&self, beta: &[i64], gamma: &[i64]) -> Q {
        let n = self.rank();
        let mut s = Q::zero();
        for i in 0..n {
            if beta[i] == 0 {
                continue;
            }
            for j in 0..n {
                if gamma[j] != 0 {
                    s += Q::from_integer((beta[i] * gamma[j]).into()) * &self.form[i][j];
                }
            }
        }
        s
    }

    pub fn simple_lengths(&self) -> &[Q] {
        &self.lengths
    }

    /// `s_i β`.
    pub fn reflect(&self, i: usize, beta: &[i64]) -> Root {
        let mut out = beta.to_vec();
        out[i] -= self.pair_simple_coroot(beta, i);
        out
    }

    /// Coordinates of `β̌` in simple coroots.
    pub fn coroot(&self, beta: &[i64]) -> Vec<Q> {
        let l = self.inner(beta, beta);
        beta.iter().enumerate().map(|(i, b)| Q::from_integer((*b).into()) * &self.lengths[i] / &l).collect()
    }

    /// Largest `p` with `β - pα` a root.
    pub fn string_below(&self, alpha: &[i64], beta: &[i64]) -> i64 {
        let mut p = 0;
        let mut cur: Root = beta.to_vec();
        loop {
            for (c, a) in cur.iter_mut().zip(alpha) {
                *c -= a;
            }
            if self.is_root(&cur) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    /// Extraspecial pair `(α_i, ξ - α_i)` for a non-simple positive root,
    /// with `i` the smallest index such that `ξ - α_i` is a root.
    pub fn extraspecial(&self, xi: &[i64]) -> Option<(usize, Root)> {
        if Self::height(xi) < 2 {
            return None;
        }
        (0..self.rank()).find_map(|i| {
            let mut rest = xi.to_vec();
            rest[i] -= 1;
            self.index.contains_key(&rest).then_some((i, rest))
        })
    }
}

pub fn unit(n: usize, i: usize) -> Root {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

pub fn add_roots(a: &[i64], b: &[i64]) -> Root {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn neg_root(a: &[i64]) -> Root {
    a.iter().map(|x| -x).collect()
}
