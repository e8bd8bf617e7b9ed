//! Haar wavelets on `[0, 1]`, their first and second integrals, and the
//! precomputed collocation matrices used by the stepper.
//!
//! Ordinal `i = 1` is the scaling function. For `i >= 2` the wavelet has
//! dilation `m = 2^j` and translation `k` with `i = m + k + 1`, and is `+1` on
//! `[k/m, (k+1/2)/m)`, `-1` on `[(k+1/2)/m, (k+1)/m)`, zero elsewhere.

use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Largest resolution level accepted by [`HaarBasis::new`].
pub const MAX_LEVEL: u32 = 12;

/// Dilation/translation data of a wavelet with ordinal `i >= 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveletIndex {
    pub ordinal: usize,
    pub level: u32,
    pub dilation: usize,
    pub translation: usize,
    /// Breakpoints `(k/m, (k+0.5)/m, (k+1)/m)`.
    pub breakpoints: [f64; 3],
}

impl WaveletIndex {
    pub fn from_ordinal(i: usize) -> Result<Self> {
        if i < 2 {
            return Err(Error::InvalidIndex(i));
        }
        Ok(Self::from_ordinal_unchecked(i))
    }

    fn from_ordinal_unchecked(i: usize) -> Self {
        let level = (i - 1).ilog2();
        let m = 1usize << level;
        let k = i - m - 1;
        let mf = m as f64;
        let kf = k as f64;
        Self {
            ordinal: i,
            level,
            dilation: m,
            translation: k,
            breakpoints: [kf / mf, (kf + 0.5) / mf, (kf + 1.0) / mf],
        }
    }
}

/// Free-function form of [`WaveletIndex::from_ordinal`].
pub fn index_from_ordinal(i: usize) -> Result<WaveletIndex> {
    WaveletIndex::from_ordinal(i)
}

fn check_unit(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::Domain { x, lo: 0.0, hi: 1.0 })
    }
}

fn check_ordinal(i: usize) -> Result<()> {
    if i == 0 {
        Err(Error::InvalidIndex(i))
    } else {
        Ok(())
    }
}

/// Value of `h_i(x)` for `x` in `[0, 1]`.
pub fn haar_eval(i: usize, x: f64) -> Result<f64> {
    check_ordinal(i)?;
    check_unit(x)?;
    Ok(haar_raw(i, x))
}

/// `sigma`-fold integral of `h_i` from 0 to `x`, for `sigma` in `{1, 2}`.
pub fn p_eval(sigma: u32, i: usize, x: f64) -> Result<f64> {
    check_ordinal(i)?;
    check_unit(x)?;
    match sigma {
        1 => Ok(p1_raw(i, x)),
        2 => Ok(p2_raw(i, x)),
        other => Err(Error::UnsupportedOrder(other)),
    }
}

fn haar_raw(i: usize, x: f64) -> f64 {
    if i == 1 {
        return if (0.0..1.0).contains(&x) { 1.0 } else { 0.0 };
    }
    let [e1, e2, e3] = WaveletIndex::from_ordinal_unchecked(i).breakpoints;
    if e1 <= x && x < e2 {
        1.0
    } else if e2 <= x && x < e3 {
        -1.0
    } else {
        0.0
    }
}

fn p1_raw(i: usize, x: f64) -> f64 {
    if i == 1 {
        return x;
    }
    let [e1, e2, e3] = WaveletIndex::from_ordinal_unchecked(i).breakpoints;
    if e1 <= x && x < e2 {
        x - e1
    } else if e2 <= x && x < e3 {
        e3 - x
    } else {
        0.0
    }
}

fn p2_raw(i: usize, x: f64) -> f64 {
    if i == 1 {
        return 0.5 * x * x;
    }
    let idx = WaveletIndex::from_ordinal_unchecked(i);
    let [e1, e2, e3] = idx.breakpoints;
    let plateau = p2_at_one(i);
    if e1 <= x && x < e2 {
        0.5 * (x - e1).powi(2)
    } else if e2 <= x && x < e3 {
        plateau - 0.5 * (e3 - x).powi(2)
    } else if x >= e3 {
        plateau
    } else {
        0.0
    }
}

/// `p_{2,i}(1)`: `1/2` for the scaling function, `1/(4 m^2)` otherwise.
fn p2_at_one(i: usize) -> f64 {
    if i == 1 {
        0.5
    } else {
        let m = WaveletIndex::from_ordinal_unchecked(i).dilation as f64;
        1.0 / (4.0 * m * m)
    }
}

/// Which series [`HaarBasis::reconstruct`] sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    /// `sum c_i h_i(x)`
    Value,
    /// `sum c_i p_{1,i}(x)`
    FirstIntegral,
    /// `sum c_i p_{2,i}(x)`
    SecondIntegral,
}

/// Haar basis of size `2M = 2^(J+1)` sampled at the midpoint collocation grid.
///
/// Matrices are stored with rows indexed by collocation point and columns by
/// ordinal (column 0 is `i = 1`).
#[derive(Debug, Clone)]
pub struct HaarBasis {
    level: u32,
    points: Vec<f64>,
    h: Matrix,
    p1: Matrix,
    p2: Matrix,
    p2_one: Vec<f64>,
    // P1[k][i] - p2_one[i]: maps coefficients to w_x minus the boundary slope.
    slope_map: Matrix,
    // P2[k][i] - x_k p2_one[i]: maps coefficients to w minus the boundary line.
    value_map: Matrix,
}

impl HaarBasis {
    /// Builds the basis at resolution level `level` (`0 ..= 12`).
    pub fn new(level: u32) -> Result<Self> {
        if level > MAX_LEVEL {
            return Err(Error::Config(format!(
                "resolution level {level} outside 0..={MAX_LEVEL}"
            )));
        }
        let n = 2usize << level;
        let points: Vec<f64> = (1..=n).map(|k| (k as f64 - 0.5) / n as f64).collect();
        let h = Matrix::from_fn(n, n, |r, c| haar_raw(c + 1, points[r]));
        let p1 = Matrix::from_fn(n, n, |r, c| p1_raw(c + 1, points[r]));
        let p2 = Matrix::from_fn(n, n, |r, c| p2_raw(c + 1, points[r]));
        let p2_one: Vec<f64> = (1..=n).map(p2_at_one).collect();
        let slope_map = Matrix::from_fn(n, n, |r, c| p1[(r, c)] - p2_one[c]);
        let value_map = Matrix::from_fn(n, n, |r, c| p2[(r, c)] - points[r] * p2_one[c]);
        Ok(Self {
            level,
            points,
            h,
            p1,
            p2,
            p2_one,
            slope_map,
            value_map,
        })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    /// Number of basis functions and collocation points, `2M`.
    pub fn size(&self) -> usize {
        self.points.len()
    }

    /// Grid spacing `1/(2M)` in the mapped coordinate.
    pub fn spacing(&self) -> f64 {
        1.0 / self.size() as f64
    }

    /// Collocation points `x_k = (k - 0.5)/(2M)`.
    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn h(&self) -> &Matrix {
        &self.h
    }

    pub fn p1(&self) -> &Matrix {
        &self.p1
    }

    pub fn p2(&self) -> &Matrix {
        &self.p2
    }

    pub fn p2_one(&self) -> &[f64] {
        &self.p2_one
    }

    /// `P1[k][i] - p_{2,i}(1)`.
    pub fn slope_map(&self) -> &Matrix {
        &self.slope_map
    }

    /// `P2[k][i] - x_k p_{2,i}(1)`.
    pub fn value_map(&self) -> &Matrix {
        &self.value_map
    }

    /// Coefficients `c` with `sum_i c_i h_i(x_k) = samples[k]`.
    ///
    /// Uses the discrete orthogonality of the columns of `H`, so the square
    /// collocation system is solved exactly without elimination.
    pub fn expand(&self, samples: &[f64]) -> Result<Vec<f64>> {
        let n = self.size();
        if samples.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: samples.len(),
            });
        }
        let mut c = self.h.tr_mul_vec(samples);
        for (i, ci) in c.iter_mut().enumerate() {
            *ci /= self.column_weight(i + 1);
        }
        Ok(c)
    }

    /// Sum of `c_i` times the selected series at `x`.
    pub fn reconstruct(&self, coeffs: &[f64], kind: SeriesKind, x: f64) -> Result<f64> {
        if coeffs.len() != self.size() {
            return Err(Error::DimensionMismatch {
                expected: self.size(),
                got: coeffs.len(),
            });
        }
        check_unit(x)?;
        let f = match kind {
            SeriesKind::Value => haar_raw,
            SeriesKind::FirstIntegral => p1_raw,
            SeriesKind::SecondIntegral => p2_raw,
        };
        Ok(coeffs
            .iter()
            .enumerate()
            .map(|(c, ci)| ci * f(c + 1, x))
            .sum())
    }

    /// `sum_k h_i(x_k)^2`, i.e. the number of collocation points in the support.
    fn column_weight(&self, i: usize) -> f64 {
        if i == 1 {
            self.size() as f64
        } else {
            let m = WaveletIndex::from_ordinal_unchecked(i).dilation;
            (self.size() / m) as f64
        }
    }

    /// Largest deviation of `(1/2M) H^T H` from `diag(2^-j)`.
    pub fn orthogonality_deviation(&self) -> f64 {
        let n = self.size();
        let mut worst = 0.0f64;
        for i in 0..n {
            for l in i..n {
                let dot: f64 = (0..n).map(|k| self.h[(k, i)] * self.h[(k, l)]).sum();
                let expected = if i == l {
                    self.column_weight(i + 1) / n as f64
                } else {
                    0.0
                };
                worst = worst.max((dot / n as f64 - expected).abs());
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordinal_two_is_the_mother_wavelet() {
        let w = index_from_ordinal(2).unwrap();
        assert_eq!((w.level, w.dilation, w.translation), (0, 1, 0));
        assert_eq!(w.breakpoints, [0.0, 0.5, 1.0]);
    }

    #[test]
    fn ordinal_three_and_six() {
        let w = index_from_ordinal(3).unwrap();
        assert_eq!((w.level, w.dilation, w.translation), (1, 2, 0));
        assert_eq!(w.breakpoints, [0.0, 0.25, 0.5]);

        let w = index_from_ordinal(6).unwrap();
        assert_eq!((w.level, w.dilation, w.translation), (2, 4, 1));
        assert_eq!(w.breakpoints, [0.25, 0.375, 0.5]);
    }

    #[test]
    fn ordinal_below_two_is_rejected() {
        assert!(matches!(index_from_ordinal(1), Err(Error::InvalidIndex(1))));
        assert!(matches!(index_from_ordinal(0), Err(Error::InvalidIndex(0))));
    }

    #[test]
    fn haar_values() {
        assert_eq!(haar_eval(1, 0.3).unwrap(), 1.0);
        assert_eq!(haar_eval(1, 1.0).unwrap(), 0.0);
        assert_eq!(haar_eval(2, 0.25).unwrap(), 1.0);
        assert_eq!(haar_eval(2, 0.75).unwrap(), -1.0);
        assert_eq!(haar_eval(3, 0.6).unwrap(), 0.0);
        // half-open branches
        assert_eq!(haar_eval(2, 0.5).unwrap(), -1.0);
        assert_eq!(haar_eval(2, 1.0).unwrap(), 0.0);
    }

    #[test]
    fn haar_rejects_out_of_domain() {
        assert!(matches!(haar_eval(2, 1.5), Err(Error::Domain { .. })));
        assert!(matches!(haar_eval(2, -0.1), Err(Error::Domain { .. })));
    }

    #[test]
    fn integral_values() {
        assert_eq!(p_eval(1, 2, 0.25).unwrap(), 0.25);
        assert_eq!(p_eval(1, 2, 0.75).unwrap(), 0.25);
        assert_eq!(p_eval(2, 1, 1.0).unwrap(), 0.5);
        assert_eq!(p_eval(2, 2, 1.0).unwrap(), 0.25);
        assert_eq!(p_eval(1, 1, 0.3).unwrap(), 0.3);
        assert!(matches!(p_eval(3, 2, 0.5), Err(Error::UnsupportedOrder(3))));
    }

    #[test]
    fn first_integral_vanishes_at_ends_of_support() {
        for i in 2..64 {
            let e3 = WaveletIndex::from_ordinal_unchecked(i).breakpoints[2];
            assert_eq!(p_eval(1, i, 0.0).unwrap(), 0.0);
            assert_eq!(p_eval(1, i, 1.0).unwrap(), 0.0);
            assert!(p_eval(1, i, e3).unwrap().abs() < 1e-15);
        }
    }

    #[test]
    fn second_integral_is_monotone_with_plateau() {
        for i in 2..40 {
            let idx = WaveletIndex::from_ordinal_unchecked(i);
            let plateau = 1.0 / (4.0 * (idx.dilation * idx.dilation) as f64);
            let mut prev = 0.0;
            for s in 0..=1000 {
                let x = s as f64 / 1000.0;
                let v = p_eval(2, i, x).unwrap();
                assert!(v >= 0.0 && v >= prev - 1e-16, "i={i} x={x}");
                if x >= idx.breakpoints[2] {
                    assert!((v - plateau).abs() < 1e-16);
                }
                prev = v;
            }
        }
    }

    #[test]
    fn second_integral_differentiates_to_first() {
        let step = 1e-6;
        for i in 1..20 {
            for s in 1..200 {
                let x = s as f64 / 200.0 + 1.3e-3;
                if x + step > 1.0 {
                    continue;
                }
                let fd = (p2_raw(i, x + step) - p2_raw(i, x - step)) / (2.0 * step);
                assert!((fd - p1_raw(i, x)).abs() < 1e-6, "i={i} x={x}");
            }
        }
    }

    #[test]
    fn level_zero_basis() {
        let b = HaarBasis::new(0).unwrap();
        assert_eq!(b.points(), &[0.25, 0.75]);
        assert_eq!(b.h(), &Matrix::from_rows(&[vec![1.0, 1.0], vec![1.0, -1.0]]));
    }

    #[test]
    fn level_one_and_three_grids() {
        let b = HaarBasis::new(1).unwrap();
        assert_eq!(b.points(), &[0.125, 0.375, 0.625, 0.875]);
        let b = HaarBasis::new(3).unwrap();
        assert_eq!(b.size(), 16);
        assert_eq!(b.spacing(), 1.0 / 16.0);
    }

    #[test]
    fn level_out_of_range() {
        assert!(matches!(HaarBasis::new(13), Err(Error::Config(_))));
    }

    #[test]
    fn basis_entries_and_endpoint_integrals() {
        let b = HaarBasis::new(4).unwrap();
        let n = b.size();
        assert!(b.h().as_slice().iter().all(|v| [-1.0, 0.0, 1.0].contains(v)));
        assert!((0..n).all(|k| b.h()[(k, 0)] == 1.0));
        assert_eq!(b.p2_one()[0], 0.5);
        for i in 2..=n {
            let m = WaveletIndex::from_ordinal_unchecked(i).dilation as f64;
            assert_eq!(b.p2_one()[i - 1], 1.0 / (4.0 * m * m));
        }
        assert!(b.points().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn orthogonality_is_exact() {
        for level in 0..=6 {
            assert!(HaarBasis::new(level).unwrap().orthogonality_deviation() <= 1e-14);
        }
    }

    #[test]
    fn expand_constant_and_single_wavelet() {
        let b = HaarBasis::new(3).unwrap();
        let c = b.expand(&vec![5.0; 16]).unwrap();
        assert_eq!(c[0], 5.0);
        assert!(c[1..].iter().all(|&v| v == 0.0));

        let samples: Vec<f64> = b.points().iter().map(|&x| haar_raw(2, x)).collect();
        let c = b.expand(&samples).unwrap();
        for (i, v) in c.iter().enumerate() {
            assert_eq!(*v, if i == 1 { 1.0 } else { 0.0 });
        }
    }

    #[test]
    fn expand_rejects_wrong_length() {
        let b = HaarBasis::new(1).unwrap();
        assert!(matches!(
            b.expand(&[1.0; 3]),
            Err(Error::DimensionMismatch { expected: 4, got: 3 })
        ));
    }

    #[test]
    fn reconstruct_unit_vector() {
        let b = HaarBasis::new(2).unwrap();
        let mut c = vec![0.0; b.size()];
        c[0] = 1.0;
        assert_eq!(b.reconstruct(&c, SeriesKind::Value, 0.3).unwrap(), 1.0);
        assert_eq!(b.reconstruct(&c, SeriesKind::SecondIntegral, 1.0).unwrap(), 0.5);
        assert_eq!(b.reconstruct(&c, SeriesKind::FirstIntegral, 0.4).unwrap(), 0.4);
    }

    #[test]
    fn reconstruct_second_integral_differentiates_to_first() {
        let b = HaarBasis::new(3).unwrap();
        let c: Vec<f64> = (0..b.size()).map(|i| ((i * 7 + 3) % 11) as f64 - 5.0).collect();
        let step = 1e-5;
        for &x in b.points() {
            let fd = (b.reconstruct(&c, SeriesKind::SecondIntegral, x + step).unwrap()
                - b.reconstruct(&c, SeriesKind::SecondIntegral, x - step).unwrap())
                / (2.0 * step);
            let exact = b.reconstruct(&c, SeriesKind::FirstIntegral, x).unwrap();
            assert!((fd - exact).abs() < 1e-7);
        }
    }
}
