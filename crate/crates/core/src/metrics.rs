//! Error norms, convergence studies in the resolution level, and the
//! a-priori `L2` bound.

use crate::error::{Error, Result};
use crate::fd_oracle::fd_reference_at;
use crate::haar_basis::HaarBasis;
use crate::problems::ProblemSpec;
use crate::stepper::{run, SolutionState, SolverConfig};

/// Error of a numerical solution against a reference at one time.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorReport {
    pub l_inf: f64,
    /// `sqrt(dx * sum e^2)`.
    pub l_2: f64,
    pub n_points: usize,
    pub t: f64,
}

pub fn error_norms(numeric: &[f64], reference: &[f64], dx: f64, t: f64) -> Result<ErrorReport> {
    if numeric.len() != reference.len() {
        return Err(Error::DimensionMismatch {
            expected: numeric.len(),
            got: reference.len(),
        });
    }
    let (max, sq) = numeric
        .iter()
        .zip(reference)
        .map(|(a, b)| (a - b).abs())
        .fold((0.0f64, 0.0f64), |(m, s), e| (m.max(e), s + e * e));
    Ok(ErrorReport {
        l_inf: max,
        l_2: (dx * sq).sqrt(),
        n_points: numeric.len(),
        t,
    })
}

/// Physical coordinates of the collocation points.
pub fn physical_points(spec: &ProblemSpec, basis: &HaarBasis) -> Vec<f64> {
    let a = spec.domain().0;
    basis.points().iter().map(|&x| a + spec.length() * x).collect()
}

/// Closed-form values at the collocation points at time `t`.
pub fn exact_at_points(spec: &ProblemSpec, basis: &HaarBasis, t: f64) -> Result<Vec<f64>> {
    physical_points(spec, basis)
        .into_iter()
        .map(|x| spec.evaluate_exact(x, t))
        .collect()
}

/// Error of `state` against the closed-form solution.
pub fn exact_error(
    spec: &ProblemSpec,
    basis: &HaarBasis,
    state: &SolutionState,
) -> Result<ErrorReport> {
    let reference = exact_at_points(spec, basis, state.t)?;
    error_norms(&state.w, &reference, basis.spacing(), state.t)
}

/// What a convergence study measures errors against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Reference {
    Exact,
    /// Finite-difference oracle certified to the given accuracy.
    Oracle { accuracy_target: f64 },
}

/// One level of a convergence study.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceRow {
    pub level: u32,
    pub l_inf: f64,
    pub l_2: f64,
    /// `(l_inf, l_2)` of the previous row divided by this row's.
    pub ratio_to_previous: Option<(f64, f64)>,
    /// `log2` of the `l_2` ratio per unit of level.
    pub observed_order: Option<f64>,
    /// `max |w_x|` over the collocation points (mapped coordinate).
    pub k_estimate: f64,
    /// [`theoretical_bound`] at this level with `k_estimate`.
    pub bound: f64,
}

/// Runs the solver at each level in `levels` and tabulates the errors.
pub fn convergence_study(
    spec: &ProblemSpec,
    dt: f64,
    t_end: f64,
    levels: &[u32],
    reference: Reference,
) -> Result<Vec<ConvergenceRow>> {
    let mut rows: Vec<ConvergenceRow> = Vec::with_capacity(levels.len());
    for &level in levels {
        let basis = HaarBasis::new(level)?;
        let out = run(spec, &basis, &SolverConfig::new(level, dt, t_end), &[])?;
        let state = out.final_state;
        let expected = match reference {
            Reference::Exact => exact_at_points(spec, &basis, state.t)?,
            Reference::Oracle { accuracy_target } => {
                fd_reference_at(spec, &physical_points(spec, &basis), t_end, accuracy_target)?
                    .values
            }
        };
        let report = error_norms(&state.w, &expected, basis.spacing(), state.t)?;
        let k_estimate = state.wx.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let (ratio_to_previous, observed_order) = match rows.last() {
            Some(prev) => {
                let ratio = (prev.l_inf / report.l_inf, prev.l_2 / report.l_2);
                let span = level as f64 - prev.level as f64;
                (Some(ratio), Some(ratio.1.log2() / span))
            }
            None => (None, None),
        };
        rows.push(ConvergenceRow {
            level,
            l_inf: report.l_inf,
            l_2: report.l_2,
            ratio_to_previous,
            observed_order,
            k_estimate,
            bound: theoretical_bound(level, k_estimate),
        });
    }
    Ok(rows)
}

/// `2K 2^{-(5(J+1)/2 + 1)} / (1 - 2^{-5/2})`.
pub fn theoretical_bound(level: u32, k: f64) -> f64 {
    let exponent = -(2.5 * (level as f64 + 1.0) + 1.0);
    2.0 * k * exponent.exp2() / (1.0 - (-2.5f64).exp2())
}
