//! Small dense row-major matrices and a partial-pivoting LU solve.

use std::ops::{Index, IndexMut};

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    /// Builds a matrix from a closure over `(row, col)`.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    /// Panics if `rows` is ragged.
    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        Self {
            rows: rows.len(),
            cols: ncols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[f64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [f64] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    /// `self * v`.
    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `self^T * v`.
    pub fn tr_mul_vec(&self, v: &[f64]) -> Vec<f64> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![0.0; self.cols];
        for (r, &vr) in v.iter().enumerate() {
            for (o, a) in out.iter_mut().zip(self.row(r)) {
                *o += a * vr;
            }
        }
        out
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|a| a.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;

    fn index(&self, (r, c): (usize, usize)) -> &f64 {
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut f64 {
        &mut self.data[r * self.cols + c]
    }
}

/// Failure of [`lu_solve`]: the column whose best pivot fell below threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SingularPivot {
    pub column: usize,
    pub pivot: f64,
}

/// Gaussian elimination with row partial pivoting.
///
/// A pivot smaller than `1e-13 * ||a||_inf` is treated as singular.
pub fn lu_solve(a: &Matrix, b: &[f64]) -> Result<Vec<f64>, SingularPivot> {
    let n = a.rows();
    assert_eq!(n, a.cols(), "matrix must be square");
    assert_eq!(n, b.len(), "rhs length must match matrix");

    let threshold = 1e-13 * a.norm_inf();
    let mut lu = a.clone();
    let mut x = b.to_vec();

    for col in 0..n {
        let (piv_row, piv_abs) = (col..n)
            .map(|r| (r, lu[(r, col)].abs()))
            .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if !(piv_abs >= threshold) || piv_abs == 0.0 {
            return Err(SingularPivot {
                column: col,
                pivot: piv_abs,
            });
        }
        if piv_row != col {
            for c in 0..n {
                lu.data.swap(piv_row * n + c, col * n + c);
            }
            x.swap(piv_row, col);
        }
        let pivot = lu[(col, col)];
        for r in col + 1..n {
            let factor = lu[(r, col)] / pivot;
            if factor == 0.0 {
                continue;
            }
            lu[(r, col)] = 0.0;
            for c in col + 1..n {
                let v = lu[(col, c)];
                lu[(r, c)] -= factor * v;
            }
            x[r] -= factor * x[col];
        }
    }

    for r in (0..n).rev() {
        let tail: f64 = (r + 1..n).map(|c| lu[(r, c)] * x[c]).sum();
        x[r] = (x[r] - tail) / lu[(r, r)];
    }
    Ok(x)
}
