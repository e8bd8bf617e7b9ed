//! One-sweep quasilinearized Haar collocation time stepping.
//!
//! At each level the unknown `w_xx` is expanded in Haar wavelets; `w_x` and
//! `w` follow by integration with the Dirichlet data built in:
//!
//! ```text
//! w_xx = sum c_i h_i
//! w_x  = sum c_i (p1_i(x) - p2_i(1)) + f2 - f1
//! w    = sum c_i (p2_i(x) - x p2_i(1)) + x (f2 - f1) + f1
//! ```
//!
//! Advection and diffusion are averaged between levels `j` and `j + 1`, and
//! the level `j + 1` nonlinearities are linearized about level `j`.

use crate::error::{Error, Result};
use crate::haar_basis::HaarBasis;
use crate::linalg::{lu_solve, Matrix};
use crate::problems::ProblemSpec;

const TIME_TOL: f64 = 1e-9;

/// Time-stepping configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Resolution level `J`; the basis has `2^(J+1)` functions.
    pub level: u32,
    pub dt: f64,
    pub t_end: f64,
}

impl SolverConfig {
    pub fn new(level: u32, dt: f64, t_end: f64) -> Self {
        Self { level, dt, t_end }
    }

    /// Number of steps from `t0` to `t_end`; the interval must be a whole
    /// number of steps.
    pub fn n_steps(&self, t0: f64) -> Result<usize> {
        whole_steps(t0, self.t_end, self.dt).ok_or_else(|| {
            Error::Config(format!(
                "final time {} is not reachable from {t0} in whole steps of {}",
                self.t_end, self.dt
            ))
        })
    }
}

fn whole_steps(t0: f64, t: f64, dt: f64) -> Option<usize> {
    if !(dt > 0.0) || !dt.is_finite() || !(t > t0) {
        return None;
    }
    let n = ((t - t0) / dt).round();
    ((n * dt - (t - t0)).abs() <= TIME_TOL && n >= 1.0).then_some(n as usize)
}

/// Solution samples at the collocation points at time `t`.
///
/// Derivatives are with respect to the mapped coordinate `x = (x* - a)/L`.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionState {
    pub t: f64,
    pub w: Vec<f64>,
    pub wx: Vec<f64>,
    pub wxx: Vec<f64>,
    /// Wavelet coefficients of the last solve; empty before the first step.
    pub coeffs: Vec<f64>,
}

impl SolutionState {
    /// Initial state from the problem data.
    pub fn initial(spec: &ProblemSpec, basis: &HaarBasis) -> Self {
        let s = spec.sample_initial(basis);
        Self {
            t: spec.t0(),
            w: s.w,
            wx: s.wx,
            wxx: s.wxx,
            coeffs: Vec::new(),
        }
    }

    fn is_finite(&self) -> bool {
        self.w
            .iter()
            .chain(&self.wx)
            .chain(&self.wxx)
            .all(|v| v.is_finite())
    }
}

/// Collocation system `A c = rhs` for the level at time `t`.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub a: Matrix,
    pub rhs: Vec<f64>,
    pub t: f64,
}

/// `w^e` by repeated multiplication, with `w^0 = 1` for every `w`.
fn ipow(w: f64, e: u32) -> f64 {
    (0..e).fold(1.0, |acc, _| acc * w)
}

/// `e * w^(e-1)`, identically zero when `e = 0`.
fn dpow(w: f64, e: u32) -> f64 {
    if e == 0 {
        0.0
    } else {
        e as f64 * ipow(w, e - 1)
    }
}

/// Per-point coefficients of the linearized equation
///
/// `diff * W_xx - adv * W_x + react * W = base`
///
/// where `W` is the level `j + 1` unknown and everything else is from level `j`.
struct PointCoefficients {
    diff: f64,
    adv: f64,
    react: f64,
    base: f64,
}

fn point_coefficients(
    spec: &ProblemSpec,
    dt: f64,
    w: f64,
    wx: f64,
    wxx: f64,
) -> PointCoefficients {
    let l = spec.length();
    let (mu, delta) = (spec.mu(), spec.delta());
    let dcoef = spec.nu() * dt / (2.0 * l * l);
    let acoef = dt / (2.0 * l);
    let w_mu = ipow(w, mu);
    let w_delta = ipow(w, delta);
    let react = dcoef * dpow(w, delta) * wxx - acoef * dpow(w, mu) * wx - 1.0;
    let base = -w + acoef * (1.0 - mu as f64) * w_mu * wx
        - dcoef * (1.0 - delta as f64) * w_delta * wxx;
    PointCoefficients {
        diff: dcoef * w_delta,
        adv: acoef * w_mu,
        react,
        base,
    }
}

fn check_lengths(state: &SolutionState, basis: &HaarBasis) -> Result<()> {
    let n = basis.size();
    for len in [state.w.len(), state.wx.len(), state.wxx.len()] {
        if len != n {
            return Err(Error::DimensionMismatch { expected: n, got: len });
        }
    }
    Ok(())
}

/// Assembles the collocation system advancing `state` to `t_next`.
pub fn assemble_system(
    state: &SolutionState,
    spec: &ProblemSpec,
    basis: &HaarBasis,
    dt: f64,
    t_next: f64,
) -> Result<LinearSystem> {
    check_lengths(state, basis)?;
    if !state.is_finite() {
        return Err(Error::Divergence {
            step: 0,
            t: state.t,
        });
    }
    let n = basis.size();
    let f1 = spec.left_boundary(t_next);
    let f2 = spec.right_boundary(t_next);
    let jump = f2 - f1;

    let mut a = Matrix::zeros(n, n);
    let mut rhs = vec![0.0; n];
    for (k, &x) in basis.points().iter().enumerate() {
        let pc = point_coefficients(spec, dt, state.w[k], state.wx[k], state.wxx[k]);
        let h = basis.h().row(k);
        let slope = basis.slope_map().row(k);
        let value = basis.value_map().row(k);
        for (i, entry) in a.row_mut(k).iter_mut().enumerate() {
            *entry = pc.diff * h[i] - pc.adv * slope[i] + pc.react * value[i];
        }
        rhs[k] = pc.base + pc.adv * jump - pc.react * (x * jump + f1);
    }
    Ok(LinearSystem { a, rhs, t: t_next })
}

/// Solves the collocation system by partial-pivoting elimination.
pub fn solve_dense(sys: &LinearSystem) -> Result<Vec<f64>> {
    lu_solve(&sys.a, &sys.rhs).map_err(|p| Error::Singular {
        t: sys.t,
        pivot: p.pivot,
    })
}

/// Samples `(w, w_x, w_xx)` of the expansion with coefficients `c` at time `t`.
pub fn reconstruct_state(
    coeffs: Vec<f64>,
    spec: &ProblemSpec,
    basis: &HaarBasis,
    t: f64,
) -> SolutionState {
    let f1 = spec.left_boundary(t);
    let jump = spec.right_boundary(t) - f1;
    let wxx = basis.h().mul_vec(&coeffs);
    let wx = basis
        .slope_map()
        .mul_vec(&coeffs)
        .into_iter()
        .map(|v| v + jump)
        .collect();
    let w = basis
        .value_map()
        .mul_vec(&coeffs)
        .into_iter()
        .zip(basis.points())
        .map(|(v, &x)| v + x * jump + f1)
        .collect();
    SolutionState {
        t,
        w,
        wx,
        wxx,
        coeffs,
    }
}

/// Advances one time level.
pub fn advance(
    state: &SolutionState,
    spec: &ProblemSpec,
    basis: &HaarBasis,
    dt: f64,
) -> Result<SolutionState> {
    let t_next = state.t + dt;
    let sys = assemble_system(state, spec, basis, dt, t_next)?;
    let coeffs = solve_dense(&sys)?;
    Ok(reconstruct_state(coeffs, spec, basis, t_next))
}

/// Residual of the linearized equation at each collocation point when the
/// level `j + 1` samples `next` are substituted, alongside the equation's
/// right-hand side there.
pub fn linearized_residual(
    prev: &SolutionState,
    next: &SolutionState,
    spec: &ProblemSpec,
    dt: f64,
) -> Vec<(f64, f64)> {
    (0..prev.w.len())
        .map(|k| {
            let pc = point_coefficients(spec, dt, prev.w[k], prev.wx[k], prev.wxx[k]);
            let lhs = pc.diff * next.wxx[k] - pc.adv * next.wx[k] + pc.react * next.w[k];
            (lhs - pc.base, pc.base)
        })
        .collect()
}

/// Output of [`run`].
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub final_state: SolutionState,
    /// States at the requested snapshot times, in request order.
    pub snapshots: Vec<SolutionState>,
}

/// Marches from `t0` to `config.t_end`, recording states at `snapshot_times`.
pub fn run(
    spec: &ProblemSpec,
    basis: &HaarBasis,
    config: &SolverConfig,
    snapshot_times: &[f64],
) -> Result<RunOutput> {
    run_with(spec, basis, config, snapshot_times, |_, _| Ok(()))
}

/// [`run`] with a hook invoked after every step with `(previous, next)`.
pub fn run_with(
    spec: &ProblemSpec,
    basis: &HaarBasis,
    config: &SolverConfig,
    snapshot_times: &[f64],
    mut on_step: impl FnMut(&SolutionState, &SolutionState) -> Result<()>,
) -> Result<RunOutput> {
    if basis.level() != config.level {
        return Err(Error::Config(format!(
            "basis level {} does not match configured level {}",
            basis.level(),
            config.level
        )));
    }
    let t0 = spec.t0();
    let n_steps = config.n_steps(t0)?;
    let mut wanted = Vec::with_capacity(snapshot_times.len());
    for &ts in snapshot_times {
        let step = whole_steps(t0, ts, config.dt)
            .filter(|&s| s <= n_steps)
            .ok_or_else(|| {
                Error::Config(format!(
                    "snapshot time {ts} is not a whole number of steps within ({t0}, {}]",
                    config.t_end
                ))
            })?;
        wanted.push(step);
    }

    let mut snapshots: Vec<Option<SolutionState>> = vec![None; wanted.len()];
    let mut state = SolutionState::initial(spec, basis);
    for step in 1..=n_steps {
        let t_next = t0 + step as f64 * config.dt;
        let sys = assemble_system(&state, spec, basis, config.dt, t_next).map_err(|e| match e {
            Error::Divergence { .. } => Error::Divergence {
                step: step - 1,
                t: state.t,
            },
            other => other,
        })?;
        let coeffs = solve_dense(&sys)?;
        let next = reconstruct_state(coeffs, spec, basis, t_next);
        if !next.is_finite() {
            return Err(Error::Divergence { step, t: t_next });
        }
        on_step(&state, &next)?;
        for (slot, &s) in snapshots.iter_mut().zip(&wanted) {
            if s == step {
                *slot = Some(next.clone());
            }
        }
        state = next;
    }
    Ok(RunOutput {
        final_state: state,
        snapshots: snapshots.into_iter().map(|s| s.expect("snapshot step reached")).collect(),
    })
}
