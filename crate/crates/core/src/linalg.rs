//! Dense exact linear algebra over a [`Field`].

use crate::field::Field;

/// Reduces `rows` (each of length `ncols`) to reduced row echelon form in
/// place, dropping zero rows. Returns the pivot column of each row.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut().skip(col) {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for j in col..ncols {
                if !pivot_row[j].is_zero() {
                    row[j] = row[j].clone() - factor.clone() * pivot_row[j].clone();
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{v : A v = 0}` for the matrix with the given rows, in reduced
/// row echelon form.
pub fn nullspace<F: Field>(rows: Vec<Vec<F>>, ncols: usize) -> Vec<Vec<F>> {
    let mut a = rows;
    let pivots = rref(&mut a, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![F::zero(); ncols];
        v[free] = F::one();
        for (row, &p) in a.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        basis.push(v);
    }
    rref(&mut basis, ncols);
    basis
}

/// A subspace of `F^n` stored as a reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<F> {
    dim: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn new(ambient: usize, vectors: Vec<Vec<F>>) -> Self {
        let mut rows = vectors;
        for v in &rows {
            assert_eq!(v.len(), ambient, "vector length");
        }
        let pivots = rref(&mut rows, ambient);
        Subspace {
            dim: ambient,
            rows,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::new(ambient, Vec::new())
    }

    pub fn ambient(&self) -> usize {
        self.dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating the pivot columns.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for j in p..self.dim {
                if !row[j].is_zero() {
                    out[j] = out[j].clone() - factor.clone() * row[j].clone();
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_space(&self, other: &Subspace<F>) -> bool {
        other.rows.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        let mut v = self.rows.clone();
        v.extend(other.rows.iter().cloned());
        Subspace::new(self.dim, v)
    }

    /// Intersection, computed from the kernel of `[A; -B]^T`.
    pub fn intersection(&self, other: &Subspace<F>) -> Subspace<F> {
        let (k, l) = (self.dim(), other.dim());
        if k == 0 || l == 0 {
            return Subspace::zero(self.dim);
        }
        // columns: coefficients a_1..a_k, b_1..b_l with sum a_i A_i = sum b_j B_j
        let rows: Vec<Vec<F>> = (0..self.dim)
            .map(|c| {
                self.rows
                    .iter()
                    .map(|r| r[c].clone())
                    .chain(other.rows.iter().map(|r| -r[c].clone()))
                    .collect()
            })
            .collect();
        let kernel = nullspace(rows, k + l);
        let vecs = kernel
            .into_iter()
            .map(|coeffs| {
                let mut v = vec![F::zero(); self.dim];
                for (a, row) in coeffs.iter().take(k).zip(&self.rows) {
                    if a.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(row) {
                        *x = x.clone() + a.clone() * y.clone();
                    }
                }
                v
            })
            .collect();
        Subspace::new(self.dim, vecs)
    }

    /// Echelon basis of a complement of `self` inside `larger`.
    pub fn complement_in(&self, larger: &Subspace<F>) -> Vec<Vec<F>> {
        let mut rem: Vec<Vec<F>> = larger
            .rows
            .iter()
            .map(|v| self.reduce(v))
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        rref(&mut rem, self.dim);
        rem
    }
}

/// Solves `A x = b` for square or overdetermined consistent systems;
/// `None` when no solution exists. Free variables are set to zero.
pub fn solve<F: Field>(a: &[Vec<F>], b: &[F]) -> Option<Vec<F>> {
    let ncols = a.first().map(|r| r.len()).unwrap_or(0);
    let mut aug: Vec<Vec<F>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![F::zero(); ncols];
    for (row, &p) in aug.iter().zip(&pivots) {
        x[p] = row[ncols].clone();
    }
    Some(x)
}
