use cycloper_arith::{Field, Mat, Q};
use num_traits::{One, Zero};

use crate::error::LieError;

/// Cartan matrix with `a[i][j] = ⟨α_j, α̌_i⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    a: Vec<Vec<i64>>,
    label: Option<String>,
}

impl CartanDatum {
    pub fn new(a: Vec<Vec<i64>>) -> Result<Self, LieError> {
        let n = a.len();
        if n == 0 {
            return Err(LieError::NotFiniteType("empty matrix".into()));
        }
        for (i, row) in a.iter().enumerate() {
            if row.len() != n {
                return Err(LieError::NotFiniteType("matrix is not square".into()));
            }
            if row[i] != 2 {
                return Err(LieError::NotFiniteType(format!("a[{i}][{i}] != 2")));
            }
            for j in 0..n {
                if i != j && (row[j] > 0 || (row[j] == 0) != (a[j][i] == 0)) {
                    return Err(LieError::NotFiniteType(format!("bad off-diagonal entry a[{i}][{j}]")));
                }
            }
        }
        let d = CartanDatum { a, label: None };
        let lengths = d.try_root_lengths().ok_or_else(|| LieError::NotFiniteType("not symmetrizable".into()))?;
        // Sylvester's criterion on the symmetrized matrix
        let b = Mat::from_fn(n, n, |i, j| lengths[i].clone() * Q::from_integer(d.a[i][j].into()));
        for k in 1..=n {
            let idx: Vec<usize> = (0..k).collect();
            if b.submatrix(&idx, &idx).det() <= Q::zero() {
                return Err(LieError::NotFiniteType("symmetrized matrix is not positive definite".into()));
            }
        }
        Ok(d)
    }

    /// Parses labels such as `A2`, `B3`, `D4`, `G2` or products `A1xA1`.
    pub fn from_label(label: &str) -> Result<Self, LieError> {
        let mut blocks = Vec::new();
        for part in label.split(['x', '+', '*']) {
            let part = part.trim();
            let (kind, rank) = part.split_at(part.find(|c: char| c.is_ascii_digit()).unwrap_or(part.len()));
            let n: usize = rank.parse().map_err(|_| LieError::UnknownLabel(label.into()))?;
            let kind = kind.to_ascii_uppercase();
            blocks.push(simple_block(&kind, n).ok_or_else(|| LieError::UnknownLabel(label.into()))?);
        }
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut a = vec![vec![0; n]; n];
        let mut off = 0;
        for b in blocks {
            for (i, row) in b.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    a[off + i][off + j] = *x;
                }
            }
            off += b.len();
        }
        let mut d = CartanDatum::new(a)?;
        d.label = Some(label.to_string());
        Ok(d)
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.a[i][j]
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn transpose(&self) -> CartanDatum {
        let n = self.rank();
        CartanDatum { a: (0..n).map(|i| (0..n).map(|j| self.a[j][i]).collect()).collect(), label: None }
    }

    pub fn to_mat<F: Field>(&self) -> Mat<F> {
        let n = self.rank();
        Mat::from_fn(n, n, |i, j| F::from_i64(self.a[i][j]))
    }

    /// Connected components of the Dynkin diagram, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                for j in 0..n {
                    if !seen[j] && self.a[i][j] != 0 {
                        seen[j] = true;
                        comp.push(j);
                    }
                }
                k += 1;
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// Squared lengths `(α_i, α_i)` with the longest simple root of every
    /// component normalized to 2.
    pub fn root_lengths(&self) -> Vec<Q> {
        self.try_root_lengths().expect("validated at construction")
    }

    fn try_root_lengths(&self) -> Option<Vec<Q>> {
        let n = self.rank();
        let mut l: Vec<Option<Q>> = vec![None; n];
        for comp in self.components() {
            l[comp[0]] = Some(Q::one());
            let mut stack = vec![comp[0]];
            while let Some(i) = stack.pop() {
                let li = l[i].clone().unwrap();
                for j in 0..n {
                    if i == j || self.a[i][j] == 0 {
                        continue;
                    }
                    // a_ij ℓ_i = a_ji ℓ_j
                    let lj = li.clone() * Q::from_integer(self.a[i][j].into()) / Q::from_integer(self.a[j][i].into());
                    match &l[j] {
                        Some(x) if *x != lj => return None,
                        Some(_) => {}
                        None => {
                            l[j] = Some(lj);
                            stack.push(j);
                        }
                    }
                }
            }
            let max = comp.iter().map(|&i| l[i].clone().unwrap()).max().unwrap();
            let f = Q::from_integer(2.into()) / max;
            for &i in &comp {
                l[i] = Some(l[i].clone().unwrap() * &f);
            }
        }
        Some(l.into_iter().map(Option::unwrap).collect())
    }

    /// Applies a permutation check: `a[ν(i)][ν(j)] = a[i][j]`.
    pub fn preserved_by(&self, perm: &[usize]) -> bool {
        let n = self.rank();
        perm.len() == n && (0..n).all(|i| (0..n).all(|j| self.a[perm[i]][perm[j]] == self.a[i][j]))
    }
}

fn simple_block(kind: &str, n: usize) -> Option<Vec<Vec<i64>>> {
    let chain = |n: usize| {
        let mut a = vec![vec![0i64; n]; n];
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
        a
    };
    let a = match (kind, n) {
        ("A", n) if n >= 1 => chain(n),
        ("B", n) if n >= 2 => {
            let mut a = chain(n);
            a[n - 1][n - 2] = -2;
            a
        }
        ("C", n) if n >= 2 => {
            let mut a = chain(n);
            a[n - 2][n - 1] = -2;
            a
        }
        ("D", n) if n >= 3 => {
            let mut a = chain(n);
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
            a
        }
        ("G", 2) => vec![vec![2, -3], vec![-1, 2]],
        ("F", 4) => {
            let mut a = chain(4);
            a[2][1] = -2;
            a
        }
        ("E", n) if (6..=8).contains(&n) => {
            // Bourbaki numbering: 1-3-4-5-…, with 2 attached to 4
            let mut a = vec![vec![0i64; n]; n];
            let mut link = |i: usize, j: usize| {
                a[i][j] = -1;
                a[j][i] = -1;
            };
            link(0, 2);
            link(1, 3);
            link(2, 3);
            for k in 3..n - 1 {
                link(k, k + 1);
            }
            for (i, row) in a.iter_mut().enumerate() {
                row[i] = 2;
            }
            a
        }
        _ => return None,
    };
    Some(a)
}
