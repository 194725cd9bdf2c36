//! Dense Gaussian elimination over a [`FieldCtx`].

use crate::gf::{Fe, FieldCtx};

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Fe>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r);
        }
        Matrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [Fe] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Fe]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    /// `self * other^T`.
    pub fn mul_transpose(&self, other: &Matrix, f: &FieldCtx) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut out = Matrix::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                out.set(i, j, dot(self.row(i), other.row(j), f));
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self, f: &FieldCtx) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(piv) = (r..self.rows).find(|&i| !self.get(i, col).is_zero()) else {
                continue;
            };
            self.swap_rows(r, piv);
            let inv = f.inv(self.get(r, col)).unwrap();
            for v in self.row_mut(r) {
                *v = f.mul(*v, inv);
            }
            let pivot_row = self.row(r).to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, col);
                if factor.is_zero() {
                    continue;
                }
                axpy(self.row_mut(i), f.neg(factor), &pivot_row, f);
            }
            pivots.push(col);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &FieldCtx) -> usize {
        self.clone().rref(f).len()
    }

    /// Basis of `{v : self * v = 0}`.
    pub fn nullspace(&self, f: &FieldCtx) -> Vec<Vec<Fe>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Fe::ZERO; self.cols];
                v[free] = Fe::ONE;
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = f.neg(m.get(r, free));
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }
}

pub fn dot(a: &[Fe], b: &[Fe], f: &FieldCtx) -> Fe {
    a.iter()
        .zip(b)
        .fold(Fe::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

/// `y += alpha * x`
pub fn axpy(y: &mut [Fe], alpha: Fe, x: &[Fe], f: &FieldCtx) {
    if alpha.is_zero() {
        return;
    }
    for (yi, &xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = f.add(*yi, f.mul(alpha, xi));
        }
    }
}

/// Incrementally built echelon basis of a subspace of `F^dim`.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<(usize, Vec<Fe>)>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut v: Vec<Fe>, f: &FieldCtx) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        for (p, row) in &self.rows {
            let c = v[*p];
            if !c.is_zero() {
                axpy(&mut v, f.neg(c), row, f);
            }
        }
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = f.inv(v[p]).unwrap();
        for c in &mut v {
            *c = f.mul(*c, inv);
        }
        self.rows.push((p, v));
        true
    }
}
