//! A small dense complex matrix, row-major.

use alloc::vec::Vec;
use core::ops::{Index, IndexMut};

use num_complex::Complex64;
use num_traits::Float;

use crate::scalar::CompensatedSum;

#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix {
            rows,
            cols,
            data: alloc::vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Builds a matrix from `f(row, col)`.
    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize, usize) -> Complex64,
    {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        CMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Row-major storage.
    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> CMatrix {
        CMatrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn scale(&self, k: Complex64) -> CMatrix {
        CMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * k).collect(),
        }
    }

    /// Matrix product; panics on mismatched shapes.
    pub fn matmul(&self, rhs: &CMatrix) -> CMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matmul");
        CMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            let mut acc = CompensatedSum::new();
            for k in 0..self.cols {
                acc.add(self[(i, k)] * rhs[(k, j)]);
            }
            acc.total()
        })
    }

    /// `Σ |mᵢⱼ|²`.
    pub fn frobenius_sq(&self) -> f64 {
        let mut acc = CompensatedSum::new();
        for v in &self.data {
            acc.add(Complex64::new(v.norm_sqr(), 0.0));
        }
        acc.total().re
    }

    /// `Σ_{i,j<k} |mᵢⱼ|²`.
    pub fn leading_frobenius_sq(&self, k: usize) -> f64 {
        let mut acc = CompensatedSum::new();
        for i in 0..k.min(self.rows) {
            for j in 0..k.min(self.cols) {
                acc.add(Complex64::new(self[(i, j)].norm_sqr(), 0.0));
            }
        }
        acc.total().re
    }

    /// `max |aᵢⱼ - bᵢⱼ|` over the leading `k × k` block.
    pub fn block_max_diff(&self, other: &CMatrix, k: usize) -> f64 {
        let k = k.min(self.rows).min(self.cols).min(other.rows).min(other.cols);
        let mut m = 0.0;
        for i in 0..k {
            for j in 0..k {
                m = Float::max(m, (self[(i, j)] - other[(i, j)]).norm());
            }
        }
        m
    }
}

impl Index<(usize, usize)> for CMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}
