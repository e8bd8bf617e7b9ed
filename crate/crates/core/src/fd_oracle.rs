//! Second-order finite-difference solver used to cross-check the wavelet
//! scheme. It shares nothing with the wavelet code beyond [`ProblemSpec`].
//!
//! Crank–Nicolson in time with central differences in space. The nonlinear
//! coefficients `w^mu` and `nu w^delta` are frozen within a step: a predictor
//! uses level-`n` values, and a corrector re-solves with coefficients at the
//! average of level `n` and the predictor.

use crate::error::{Error, Result};
use crate::problems::ProblemSpec;

const MAX_INTERVALS: usize = 1 << 15;
const FIRST_INTERVALS: usize = 32;
const FIRST_STEPS: usize = 32;

/// Uniform grid of `n` interior nodes on `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdGrid {
    pub n: usize,
    pub a: f64,
    pub h: f64,
    pub dt: f64,
}

impl FdGrid {
    pub fn new(spec: &ProblemSpec, n: usize, dt: f64) -> Result<Self> {
        if n < 3 {
            return Err(Error::Config(format!("need at least 3 interior nodes, got {n}")));
        }
        if !(dt > 0.0) {
            return Err(Error::Config(format!("time step must be positive, got {dt}")));
        }
        let (a, b) = spec.domain();
        Ok(Self {
            n,
            a,
            h: (b - a) / (n + 1) as f64,
            dt,
        })
    }

    /// Interior node `i` in `0..n` (physical coordinate).
    pub fn node(&self, i: usize) -> f64 {
        self.a + (i + 1) as f64 * self.h
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.node(i)).collect()
    }
}

/// Thomas algorithm for `lower[i] x[i-1] + diag[i] x[i] + upper[i] x[i+1] = rhs[i]`.
fn solve_tridiagonal(lower: &[f64], diag: &[f64], upper: &[f64], rhs: &mut [f64]) {
    let n = diag.len();
    let mut c = vec![0.0; n];
    let mut beta = diag[0];
    rhs[0] /= beta;
    for i in 1..n {
        c[i - 1] = upper[i - 1] / beta;
        beta = diag[i] - lower[i] * c[i - 1];
        rhs[i] = (rhs[i] - lower[i] * rhs[i - 1]) / beta;
    }
    for i in (0..n - 1).rev() {
        rhs[i] -= c[i] * rhs[i + 1];
    }
}

struct CnStep<'a> {
    spec: &'a ProblemSpec,
    grid: &'a FdGrid,
}

impl CnStep<'_> {
    /// One Crank–Nicolson step from `w` (time `t`) with coefficients evaluated
    /// on `frozen`.
    fn solve(&self, w: &[f64], t: f64, frozen: &[f64]) -> Vec<f64> {
        let (h, dt, n) = (self.grid.h, self.grid.dt, self.grid.n);
        let (mu, delta, nu) = (self.spec.mu() as i32, self.spec.delta() as i32, self.spec.nu());
        let (l_old, r_old) = (self.spec.left_boundary(t), self.spec.right_boundary(t));
        let (l_new, r_new) = (
            self.spec.left_boundary(t + dt),
            self.spec.right_boundary(t + dt),
        );

        let mut lower = vec![0.0; n];
        let mut diag = vec![0.0; n];
        let mut upper = vec![0.0; n];
        let mut rhs = vec![0.0; n];
        for i in 0..n {
            let adv = frozen[i].powi(mu);
            let dif = nu * frozen[i].powi(delta);
            // operator: (-adv D1 + dif D2) w, stencil weights for (i-1, i, i+1)
            let wl = adv / (2.0 * h) + dif / (h * h);
            let wc = -2.0 * dif / (h * h);
            let wr = -adv / (2.0 * h) + dif / (h * h);

            let left = if i == 0 { l_old } else { w[i - 1] };
            let right = if i + 1 == n { r_old } else { w[i + 1] };
            rhs[i] = w[i] + 0.5 * dt * (wl * left + wc * w[i] + wr * right);

            lower[i] = -0.5 * dt * wl;
            diag[i] = 1.0 - 0.5 * dt * wc;
            upper[i] = -0.5 * dt * wr;
            if i == 0 {
                rhs[i] -= lower[i] * l_new;
            }
            if i + 1 == n {
                rhs[i] -= upper[i] * r_new;
            }
        }
        solve_tridiagonal(&lower, &diag, &upper, &mut rhs);
        rhs
    }
}

/// Node values at time `t_end`, starting from the initial profile at `t0`.
pub fn fd_solve(spec: &ProblemSpec, grid: &FdGrid, t_end: f64) -> Result<Vec<f64>> {
    let t0 = spec.t0();
    let steps = ((t_end - t0) / grid.dt).round();
    if !(steps >= 1.0) || (steps * grid.dt - (t_end - t0)).abs() > 1e-9 {
        return Err(Error::Config(format!(
            "final time {t_end} is not a whole number of steps of {} from {t0}",
            grid.dt
        )));
    }
    let stepper = CnStep { spec, grid };
    let mut w: Vec<f64> = grid.nodes().iter().map(|&x| spec.initial(x)).collect();
    for step in 0..steps as usize {
        let t = t0 + step as f64 * grid.dt;
        let predicted = stepper.solve(&w, t, &w);
        let mid: Vec<f64> = w.iter().zip(&predicted).map(|(a, b)| 0.5 * (a + b)).collect();
        w = stepper.solve(&w, t, &mid);
        if w.iter().any(|v| !v.is_finite()) {
            return Err(Error::Divergence {
                step: step + 1,
                t: t + grid.dt,
            });
        }
    }
    Ok(w)
}

/// Piecewise-linear interpolation of node values (with boundary data at
/// `t`) to physical coordinates `queries`.
pub fn interpolate(
    spec: &ProblemSpec,
    grid: &FdGrid,
    values: &[f64],
    t: f64,
    queries: &[f64],
) -> Result<Vec<f64>> {
    let (a, b) = spec.domain();
    let at = |j: usize| -> f64 {
        if j == 0 {
            spec.left_boundary(t)
        } else if j == grid.n + 1 {
            spec.right_boundary(t)
        } else {
            values[j - 1]
        }
    };
    queries
        .iter()
        .map(|&x| {
            if x < a - 1e-12 || x > b + 1e-12 {
                return Err(Error::Domain { x, lo: a, hi: b });
            }
            let s = ((x - a) / grid.h).clamp(0.0, (grid.n + 1) as f64);
            let nearest = s.round();
            if (s - nearest).abs() < 1e-9 {
                return Ok(at(nearest as usize));
            }
            let j = (s.floor() as usize).min(grid.n);
            let frac = s - j as f64;
            Ok(at(j) + frac * (at(j + 1) - at(j)))
        })
        .collect()
}

/// Certified reference values at `queries` (physical coordinates) and time
/// `t_end`.
#[derive(Debug, Clone)]
pub struct OracleReference {
    pub values: Vec<f64>,
    /// Intervals of the finest grid used.
    pub intervals: usize,
    /// Number of grid doublings performed after the first solve.
    pub refinements: usize,
    /// Max change at the queries between the last two grids.
    pub last_change: f64,
}

/// Refines `h` and `dt` together until two successive solutions differ by at
/// most `accuracy_target` at every query point, then returns the finer one.
pub fn fd_reference_at(
    spec: &ProblemSpec,
    queries: &[f64],
    t_end: f64,
    accuracy_target: f64,
) -> Result<OracleReference> {
    if !(accuracy_target > 0.0) {
        return Err(Error::Config(format!(
            "accuracy target must be positive, got {accuracy_target}"
        )));
    }
    let span = t_end - spec.t0();
    if !(span > 0.0) {
        return Err(Error::Config(format!(
            "final time {t_end} must follow the start time {}",
            spec.t0()
        )));
    }

    let solve_on = |intervals: usize, steps: usize| -> Result<Vec<f64>> {
        let grid = FdGrid::new(spec, intervals - 1, span / steps as f64)?;
        let values = fd_solve(spec, &grid, t_end)?;
        interpolate(spec, &grid, &values, t_end, queries)
    };

    let (mut intervals, mut steps) = (FIRST_INTERVALS, FIRST_STEPS);
    let mut previous = solve_on(intervals, steps)?;
    let mut refinements = 0;
    loop {
        intervals *= 2;
        steps *= 2;
        refinements += 1;
        if intervals > MAX_INTERVALS {
            return Err(Error::CannotCertify(format!(
                "no agreement to {accuracy_target:e} before the {MAX_INTERVALS}-interval cap"
            )));
        }
        let current = match solve_on(intervals, steps) {
            Ok(v) => v,
            Err(Error::Divergence { .. }) => {
                return Err(Error::CannotCertify(format!(
                    "finite-difference solution diverged on {intervals} intervals"
                )))
            }
            Err(e) => return Err(e),
        };
        let change = current
            .iter()
            .zip(&previous)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        if change.is_nan() {
            return Err(Error::CannotCertify("non-finite oracle values".into()));
        }
        log::debug!("oracle: {intervals} intervals, {steps} steps, change {change:e}");
        if change <= accuracy_target {
            return Ok(OracleReference {
                values: current,
                intervals,
                refinements,
                last_change: change,
            });
        }
        previous = current;
    }
}
