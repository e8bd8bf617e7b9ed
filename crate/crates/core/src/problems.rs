//! PDE instances `w_t + w^mu w_x = nu w^delta w_xx` on `[a, b]` and the four
//! built-in test problems.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::haar_basis::HaarBasis;

/// Function of one variable (space or time).
pub type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;
/// Function of `(x*, t)`.
pub type FieldFn = Arc<dyn Fn(f64, f64) -> f64 + Send + Sync>;

const CORNER_TOL: f64 = 1e-10;

/// One instance of the generalized Burgers' equation with its data.
#[derive(Clone)]
pub struct ProblemSpec {
    name: String,
    mu: u32,
    delta: u32,
    nu: f64,
    a: f64,
    b: f64,
    t0: f64,
    initial: ScalarFn,
    initial_dx: Option<ScalarFn>,
    initial_dxx: Option<ScalarFn>,
    left: ScalarFn,
    right: ScalarFn,
    exact: Option<FieldFn>,
    params: BTreeMap<String, f64>,
}

impl fmt::Debug for ProblemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ProblemSpec")
            .field("name", &self.name)
            .field("mu", &self.mu)
            .field("delta", &self.delta)
            .field("nu", &self.nu)
            .field("domain", &(self.a, self.b))
            .field("t0", &self.t0)
            .field("has_exact", &self.exact.is_some())
            .field("params", &self.params)
            .finish()
    }
}

impl ProblemSpec {
    /// New problem with homogeneous Dirichlet data and no exact solution.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: impl Into<String>,
        mu: u32,
        delta: u32,
        nu: f64,
        domain: (f64, f64),
        t0: f64,
        initial: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Result<Self> {
        let (a, b) = domain;
        if mu + delta < 1 {
            return Err(Error::Config("exponents must satisfy mu + delta >= 1".into()));
        }
        if !(nu > 0.0) || !nu.is_finite() {
            return Err(Error::Config(format!("viscosity must be positive, got {nu}")));
        }
        if !(b > a) || !a.is_finite() || !b.is_finite() {
            return Err(Error::Config(format!("empty domain [{a}, {b}]")));
        }
        if !t0.is_finite() {
            return Err(Error::Config("start time must be finite".into()));
        }
        Ok(Self {
            name: name.into(),
            mu,
            delta,
            nu,
            a,
            b,
            t0,
            initial: Arc::new(initial),
            initial_dx: None,
            initial_dxx: None,
            left: Arc::new(|_| 0.0),
            right: Arc::new(|_| 0.0),
            exact: None,
            params: BTreeMap::new(),
        })
    }

    /// Analytic first and second `x*`-derivatives of the initial profile.
    pub fn with_initial_derivatives(
        mut self,
        dx: impl Fn(f64) -> f64 + Send + Sync + 'static,
        dxx: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        self.initial_dx = Some(Arc::new(dx));
        self.initial_dxx = Some(Arc::new(dxx));
        self
    }

    /// Dirichlet data `w(a, t) = left(t)`, `w(b, t) = right(t)`.
    pub fn with_boundary(
        mut self,
        left: impl Fn(f64) -> f64 + Send + Sync + 'static,
        right: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        self.left = Arc::new(left);
        self.right = Arc::new(right);
        self.warn_on_corner_mismatch();
        self
    }

    pub fn with_exact(mut self, exact: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        self.exact = Some(Arc::new(exact));
        self
    }

    pub fn with_param(mut self, key: impl Into<String>, value: f64) -> Self {
        self.params.insert(key.into(), value);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn mu(&self) -> u32 {
        self.mu
    }

    pub fn delta(&self) -> u32 {
        self.delta
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    /// Domain length `L = b - a`.
    pub fn length(&self) -> f64 {
        self.b - self.a
    }

    pub fn t0(&self) -> f64 {
        self.t0
    }

    pub fn params(&self) -> &BTreeMap<String, f64> {
        &self.params
    }

    pub fn has_exact(&self) -> bool {
        self.exact.is_some()
    }

    pub fn initial(&self, x_star: f64) -> f64 {
        (self.initial)(x_star)
    }

    pub fn left_boundary(&self, t: f64) -> f64 {
        (self.left)(t)
    }

    pub fn right_boundary(&self, t: f64) -> f64 {
        (self.right)(t)
    }

    /// Largest mismatch between the initial profile and the boundary data at `t0`.
    pub fn corner_mismatch(&self) -> f64 {
        let l = (self.initial(self.a) - self.left_boundary(self.t0)).abs();
        let r = (self.initial(self.b) - self.right_boundary(self.t0)).abs();
        l.max(r)
    }

    fn warn_on_corner_mismatch(&self) {
        let gap = self.corner_mismatch();
        if !(gap <= CORNER_TOL) {
            log::warn!(
                "problem `{}`: initial data and boundary data disagree at the corners by {gap:e}",
                self.name
            );
        }
    }

    /// Closed-form solution at `(x*, t)`.
    pub fn evaluate_exact(&self, x_star: f64, t: f64) -> Result<f64> {
        let exact = self
            .exact
            .as_ref()
            .ok_or_else(|| Error::NoExactSolution(self.name.clone()))?;
        let slack = 1e-12 * self.length();
        if x_star < self.a - slack || x_star > self.b + slack {
            return Err(Error::Domain {
                x: x_star,
                lo: self.a,
                hi: self.b,
            });
        }
        if t < self.t0 - 1e-12 {
            return Err(Error::Config(format!(
                "time {t} precedes the start time {}",
                self.t0
            )));
        }
        Ok(exact(x_star, t))
    }

    /// Samples `(w, w_x, w_xx)` of the initial profile at the collocation
    /// points, with derivatives taken in the mapped coordinate `x = (x* - a)/L`.
    ///
    /// Analytic derivatives are used when present; otherwise central
    /// differences with one-sided stencils near the domain ends.
    pub fn sample_initial(&self, basis: &HaarBasis) -> InitialSamples {
        let l = self.length();
        let xs: Vec<f64> = basis.points().iter().map(|&x| self.a + l * x).collect();
        let w: Vec<f64> = xs.iter().map(|&x| self.initial(x)).collect();
        let wx = xs
            .iter()
            .map(|&x| {
                l * match &self.initial_dx {
                    Some(d) => d(x),
                    None => self.fd_first(x),
                }
            })
            .collect();
        let wxx = xs
            .iter()
            .map(|&x| {
                l * l
                    * match &self.initial_dxx {
                        Some(d) => d(x),
                        None => self.fd_second(x),
                    }
            })
            .collect();
        InitialSamples { w, wx, wxx }
    }

    fn fd_first(&self, x: f64) -> f64 {
        let h = 1e-6 * self.length();
        let f = &self.initial;
        if x - h < self.a {
            (-3.0 * f(x) + 4.0 * f(x + h) - f(x + 2.0 * h)) / (2.0 * h)
        } else if x + h > self.b {
            (3.0 * f(x) - 4.0 * f(x - h) + f(x - 2.0 * h)) / (2.0 * h)
        } else {
            (f(x + h) - f(x - h)) / (2.0 * h)
        }
    }

    // A 1e-6 step would leave ~1e-4 relative round-off in a second difference;
    // 1e-4 balances truncation against cancellation.
    fn fd_second(&self, x: f64) -> f64 {
        let h = 1e-4 * self.length();
        let f = &self.initial;
        if x - h < self.a {
            (2.0 * f(x) - 5.0 * f(x + h) + 4.0 * f(x + 2.0 * h) - f(x + 3.0 * h)) / (h * h)
        } else if x + h > self.b {
            (2.0 * f(x) - 5.0 * f(x - h) + 4.0 * f(x - 2.0 * h) - f(x - 3.0 * h)) / (h * h)
        } else {
            (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
        }
    }

    /// Copy of this problem with analytic initial derivatives dropped, so that
    /// [`ProblemSpec::sample_initial`] falls back to finite differences.
    pub fn without_initial_derivatives(&self) -> Self {
        let mut out = self.clone();
        out.initial_dx = None;
        out.initial_dxx = None;
        out
    }
}

/// Initial samples at the collocation grid (mapped-coordinate derivatives).
#[derive(Debug, Clone, PartialEq)]
pub struct InitialSamples {
    pub w: Vec<f64>,
    pub wx: Vec<f64>,
    pub wxx: Vec<f64>,
}

/// Parameters of the built-in test problems.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct ProblemParams {
    /// Test problem 1 amplitude, `0 < c0 < 1`.
    pub c0: Option<f64>,
    /// Test problems 2 (`sigma > 0`) and 3 (`sigma > 1`).
    pub sigma: Option<f64>,
}

impl ProblemParams {
    pub fn c0(c0: f64) -> Self {
        Self {
            c0: Some(c0),
            sigma: None,
        }
    }

    pub fn sigma(sigma: f64) -> Self {
        Self {
            c0: None,
            sigma: Some(sigma),
        }
    }
}

/// Builds test problem `id` (1 to 4).
///
/// 1. `mu = 2, delta = 0` on `[0, 1]` from `t0 = 1`, logistic-type exact solution.
/// 2. `mu = 1, delta = 1` on `[0, 1]`, separable exact solution.
/// 3. `mu = 1, delta = 0` (classical Burgers) on `[0, 1]`, Cole–Hopf solution.
/// 4. `mu = 2, delta = 1` on `[0, 5]` with `w = sin(pi x*)` initially; no exact solution.
pub fn make_test_problem(id: u8, nu: f64, params: ProblemParams) -> Result<ProblemSpec> {
    if !(nu > 0.0) {
        return Err(Error::Config(format!("viscosity must be positive, got {nu}")));
    }
    match id {
        1 => {
            let c0 = params
                .c0
                .ok_or_else(|| Error::Config("test problem 1 requires c0".into()))?;
            if !(c0 > 0.0 && c0 < 1.0) {
                return Err(Error::Config(format!("c0 must lie in (0, 1), got {c0}")));
            }
            test_problem_1(nu, c0)
        }
        2 => {
            let sigma = params
                .sigma
                .ok_or_else(|| Error::Config("test problem 2 requires sigma".into()))?;
            if !(sigma > 0.0) {
                return Err(Error::Config(format!("sigma must be > 0, got {sigma}")));
            }
            test_problem_2(nu, sigma)
        }
        3 => {
            let sigma = params
                .sigma
                .ok_or_else(|| Error::Config("test problem 3 requires sigma".into()))?;
            if !(sigma > 1.0) {
                return Err(Error::Config(format!("sigma must be > 1, got {sigma}")));
            }
            test_problem_3(nu, sigma)
        }
        4 => test_problem_4(nu),
        other => Err(Error::Config(format!("unknown test problem {other}"))),
    }
}

/// `1 / (1 + e^g)` without overflow.
fn logistic_neg(g: f64) -> f64 {
    if g > 0.0 {
        let e = (-g).exp();
        e / (1.0 + e)
    } else {
        1.0 / (1.0 + g.exp())
    }
}

/// `w = (x/t) / (1 + (sqrt(t)/c0) exp(x^2/(4 nu t)))`, written as
/// `(x/t) s(g)` with `g = ln(sqrt(t)/c0) + x^2/(4 nu t)` and `s(g) = 1/(1+e^g)`.
struct Tp1 {
    nu: f64,
    c0: f64,
}

impl Tp1 {
    fn g(&self, x: f64, t: f64) -> f64 {
        (t.sqrt() / self.c0).ln() + x * x / (4.0 * self.nu * t)
    }

    fn value(&self, x: f64, t: f64) -> f64 {
        x / t * logistic_neg(self.g(x, t))
    }

    // s' = -s(1-s) g',  s'' = -s'(1-2s) g' - s(1-s) g''
    fn derivatives(&self, x: f64, t: f64) -> (f64, f64) {
        let g = self.g(x, t);
        let s = logistic_neg(g);
        let s_bar = logistic_neg(-g);
        let g1 = x / (2.0 * self.nu * t);
        let g2 = 1.0 / (2.0 * self.nu * t);
        let s1 = -s * s_bar * g1;
        let s2 = -s1 * (1.0 - 2.0 * s) * g1 - s * s_bar * g2;
        let wx = s / t + x / t * s1;
        let wxx = 2.0 / t * s1 + x / t * s2;
        (wx, wxx)
    }
}

fn test_problem_1(nu: f64, c0: f64) -> Result<ProblemSpec> {
    let tp = Arc::new(Tp1 { nu, c0 });
    let (f, fx, fxx, ex) = (tp.clone(), tp.clone(), tp.clone(), tp);
    Ok(ProblemSpec::new("test-problem-1", 2, 0, nu, (0.0, 1.0), 1.0, move |x| f.value(x, 1.0))?
        .with_initial_derivatives(move |x| fx.derivatives(x, 1.0).0, move |x| {
            fxx.derivatives(x, 1.0).1
        })
        .with_exact(move |x, t| ex.value(x, t))
        .with_param("c0", c0))
}

/// `w = (1 - e^{x/nu} + (e^{1/nu} - 1) x) / ((e^{1/nu} - 1) t + sigma)`, with
/// numerator and denominator divided by `e^{1/nu}`.
struct Tp2 {
    nu: f64,
    sigma: f64,
    // e^{-1/nu}
    decay: f64,
}

impl Tp2 {
    fn new(nu: f64, sigma: f64) -> Self {
        Self {
            nu,
            sigma,
            decay: (-1.0 / nu).exp(),
        }
    }

    fn denom(&self, t: f64) -> f64 {
        (1.0 - self.decay) * t + self.sigma * self.decay
    }

    fn value(&self, x: f64, t: f64) -> f64 {
        let num = self.decay - ((x - 1.0) / self.nu).exp() + (1.0 - self.decay) * x;
        num / self.denom(t)
    }

    fn dx(&self, x: f64, t: f64) -> f64 {
        (-((x - 1.0) / self.nu).exp() / self.nu + (1.0 - self.decay)) / self.denom(t)
    }

    fn dxx(&self, x: f64, t: f64) -> f64 {
        -((x - 1.0) / self.nu).exp() / (self.nu * self.nu) / self.denom(t)
    }
}

fn test_problem_2(nu: f64, sigma: f64) -> Result<ProblemSpec> {
    let tp = Arc::new(Tp2::new(nu, sigma));
    let (f, fx, fxx, ex) = (tp.clone(), tp.clone(), tp.clone(), tp);
    Ok(ProblemSpec::new("test-problem-2", 1, 1, nu, (0.0, 1.0), 0.0, move |x| f.value(x, 0.0))?
        .with_initial_derivatives(move |x| fx.dx(x, 0.0), move |x| fxx.dxx(x, 0.0))
        .with_exact(move |x, t| ex.value(x, t))
        .with_param("sigma", sigma))
}

/// `w = 2 pi nu q sin(pi x) / (sigma + q cos(pi x))` with `q = e^{-pi^2 nu t}`.
struct Tp3 {
    nu: f64,
    sigma: f64,
}

impl Tp3 {
    fn q(&self, t: f64) -> f64 {
        (-PI * PI * self.nu * t).exp()
    }

    fn value(&self, x: f64, t: f64) -> f64 {
        let q = self.q(t);
        2.0 * PI * self.nu * q * (PI * x).sin() / (self.sigma + q * (PI * x).cos())
    }

    fn dx(&self, x: f64, t: f64) -> f64 {
        let q = self.q(t);
        let d = self.sigma + q * (PI * x).cos();
        2.0 * PI * self.nu * q * PI * (self.sigma * (PI * x).cos() + q) / (d * d)
    }

    fn dxx(&self, x: f64, t: f64) -> f64 {
        let q = self.q(t);
        let (s, c) = (PI * x).sin_cos();
        let d = self.sigma + q * c;
        let k = 2.0 * PI * self.nu * q;
        k * PI * PI * s * (2.0 * q * (self.sigma * c + q) - self.sigma * d) / (d * d * d)
    }
}

fn test_problem_3(nu: f64, sigma: f64) -> Result<ProblemSpec> {
    let tp = Arc::new(Tp3 { nu, sigma });
    let (f, fx, fxx, ex) = (tp.clone(), tp.clone(), tp.clone(), tp);
    Ok(ProblemSpec::new("test-problem-3", 1, 0, nu, (0.0, 1.0), 0.0, move |x| f.value(x, 0.0))?
        .with_initial_derivatives(move |x| fx.dx(x, 0.0), move |x| fxx.dxx(x, 0.0))
        .with_exact(move |x, t| ex.value(x, t))
        .with_param("sigma", sigma))
}

fn test_problem_4(nu: f64) -> Result<ProblemSpec> {
    Ok(
        ProblemSpec::new("test-problem-4", 2, 1, nu, (0.0, 5.0), 0.0, |x| (PI * x).sin())?
            .with_initial_derivatives(|x| PI * (PI * x).cos(), |x| -PI * PI * (PI * x).sin()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn tp3_initial_value_at_midpoint() {
        let p = make_test_problem(3, 0.01, ProblemParams::sigma(100.0)).unwrap();
        let expected = 2.0 * PI * 0.01 / 100.0;
        assert!(rel(p.initial(0.5), expected) < 1e-12);
        assert!((p.initial(0.5) - 6.2832e-4).abs() < 1e-8);
    }

    #[test]
    fn tp2_vanishes_at_left_end() {
        let p = make_test_problem(2, 1.0, ProblemParams::sigma(2.0)).unwrap();
        for t in [0.0, 0.01, 0.5, 3.0] {
            assert_eq!(p.evaluate_exact(0.0, t).unwrap(), 0.0);
        }
    }

    #[test]
    fn tp1_matches_naive_formula_where_safe() {
        let p = make_test_problem(1, 0.01, ProblemParams::c0(0.5)).unwrap();
        let (x, t) = (0.5f64, 2.0f64);
        let naive = (x / t) / (1.0 + t.sqrt() / 0.5 * (x * x / (4.0 * 0.01 * t)).exp());
        assert!(rel(p.evaluate_exact(x, t).unwrap(), naive) < 1e-13);
    }

    #[test]
    fn tp1_small_viscosity_is_finite() {
        // log-domain reference: w = (x/t) exp(-g) / (1 + exp(-g)), g ~ 125 here
        let p = make_test_problem(1, 0.001, ProblemParams::c0(0.5)).unwrap();
        let (x, t, nu, c0) = (1.0f64, 1.0f64, 0.001, 0.5f64);
        let g = (t.sqrt() / c0).ln() + x * x / (4.0 * nu * t);
        let reference = (x / t) * (-g).exp() / (1.0 + (-g).exp());
        let v = p.evaluate_exact(x, t).unwrap();
        assert!(v.is_finite());
        assert!(rel(v, reference) < 1e-13);
        assert!(p.evaluate_exact(0.9, 1.3).unwrap().is_finite());
    }

    #[test]
    fn tp2_small_viscosity_is_finite() {
        let p = make_test_problem(2, 0.001, ProblemParams::sigma(4.0)).unwrap();
        for x in [0.0, 0.3, 0.999, 1.0] {
            assert!(p.evaluate_exact(x, 0.2).unwrap().is_finite());
        }
        assert!(p.evaluate_exact(1.0, 0.2).unwrap().abs() < 1e-15);
    }

    #[test]
    fn tp4_has_no_exact_solution() {
        let p = make_test_problem(4, 0.1, ProblemParams::default()).unwrap();
        assert!(matches!(p.evaluate_exact(1.0, 0.1), Err(Error::NoExactSolution(_))));
        assert_eq!(p.domain(), (0.0, 5.0));
        assert_eq!((p.mu(), p.delta()), (2, 1));
    }

    #[test]
    fn parameter_ranges_are_enforced() {
        assert!(make_test_problem(1, 0.01, ProblemParams::c0(1.0)).is_err());
        assert!(make_test_problem(1, 0.01, ProblemParams::default()).is_err());
        assert!(make_test_problem(2, 0.01, ProblemParams::sigma(0.0)).is_err());
        assert!(make_test_problem(3, 0.01, ProblemParams::sigma(1.0)).is_err());
        assert!(make_test_problem(3, -0.01, ProblemParams::sigma(2.0)).is_err());
        assert!(make_test_problem(5, 0.01, ProblemParams::sigma(2.0)).is_err());
    }

    #[test]
    fn exact_reproduces_initial_profile() {
        let basis = HaarBasis::new(5).unwrap();
        let problems = [
            make_test_problem(1, 0.01, ProblemParams::c0(0.5)).unwrap(),
            make_test_problem(2, 1.0, ProblemParams::sigma(2.0)).unwrap(),
            make_test_problem(2, 0.01, ProblemParams::sigma(4.0)).unwrap(),
            make_test_problem(3, 0.01, ProblemParams::sigma(100.0)).unwrap(),
        ];
        for p in &problems {
            for &x in basis.points() {
                let xs = p.domain().0 + p.length() * x;
                let d = (p.evaluate_exact(xs, p.t0()).unwrap() - p.initial(xs)).abs();
                assert!(d <= 1e-12, "{}: {d}", p.name());
            }
        }
    }

    #[test]
    fn zero_profile_samples_are_zero() {
        let p = ProblemSpec::new("zero", 1, 0, 0.1, (0.0, 2.0), 0.0, |_| 0.0).unwrap();
        let s = p.sample_initial(&HaarBasis::new(2).unwrap());
        assert!(s.w.iter().chain(&s.wx).chain(&s.wxx).all(|&v| v == 0.0));
    }

    #[test]
    fn tp4_samples_use_chain_rule() {
        let p = make_test_problem(4, 0.1, ProblemParams::default()).unwrap();
        let basis = HaarBasis::new(3).unwrap();
        let s = p.sample_initial(&basis);
        for (k, &x) in basis.points().iter().enumerate() {
            assert!((s.w[k] - (5.0 * PI * x).sin()).abs() < 1e-14);
            assert!((s.wx[k] - 5.0 * PI * (5.0 * PI * x).cos()).abs() < 1e-12);
            assert!((s.wxx[k] + 25.0 * PI * PI * (5.0 * PI * x).sin()).abs() < 1e-11);
        }
    }

    #[test]
    fn finite_difference_fallback_matches_analytic() {
        let basis = HaarBasis::new(4).unwrap();
        for p in [
            make_test_problem(2, 1.0, ProblemParams::sigma(2.0)).unwrap(),
            make_test_problem(3, 0.1, ProblemParams::sigma(4.0)).unwrap(),
            make_test_problem(1, 0.05, ProblemParams::c0(0.5)).unwrap(),
        ] {
            let analytic = p.sample_initial(&basis);
            let fd = p.without_initial_derivatives().sample_initial(&basis);
            let scale_x = analytic.wx.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            let scale_xx = analytic.wxx.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            for k in 0..basis.size() {
                assert!((fd.wx[k] - analytic.wx[k]).abs() <= 1e-6 * scale_x, "{}", p.name());
                assert!((fd.wxx[k] - analytic.wxx[k]).abs() <= 1e-6 * scale_xx, "{}", p.name());
            }
        }
    }

    #[test]
    fn one_sided_stencils_near_the_ends() {
        let p = ProblemSpec::new("cubic", 1, 0, 0.1, (0.0, 1.0), 0.0, |x| x * x * x).unwrap();
        let x = 1e-8;
        assert!((p.fd_first(x) - 3.0 * x * x).abs() < 1e-6);
        assert!((p.fd_second(x) - 6.0 * x).abs() < 1e-4);
        let x = 1.0 - 1e-8;
        assert!((p.fd_first(x) - 3.0).abs() < 1e-6);
        assert!((p.fd_second(x) - 6.0).abs() < 1e-4);
    }

    #[test]
    fn tp2_exact_solves_the_pde() {
        let p = make_test_problem(2, 1.0, ProblemParams::sigma(2.0)).unwrap();
        let (h, dt) = (1e-4, 1e-5);
        let w = |x: f64, t: f64| p.evaluate_exact(x, t).unwrap();
        for &x in &[0.2, 0.45, 0.7, 0.9] {
            for &t in &[0.05, 0.3] {
                let wt = (w(x, t + dt) - w(x, t - dt)) / (2.0 * dt);
                let wx = (w(x + h, t) - w(x - h, t)) / (2.0 * h);
                let wxx = (w(x + h, t) - 2.0 * w(x, t) + w(x - h, t)) / (h * h);
                let residual = wt + w(x, t) * wx - w(x, t) * wxx;
                assert!(residual.abs() <= 1e-6, "x={x} t={t} r={residual}");
            }
        }
    }

    #[test]
    fn tp3_viscosity_scaling() {
        let a = make_test_problem(3, 0.01, ProblemParams::sigma(4.0)).unwrap();
        let b = make_test_problem(3, 0.02, ProblemParams::sigma(4.0)).unwrap();
        for &x in &[0.1, 0.5, 0.77] {
            let wa = a.evaluate_exact(x, 0.8).unwrap() / 0.01;
            let wb = b.evaluate_exact(x, 0.4).unwrap() / 0.02;
            assert!((wa - wb).abs() <= 1e-12);
        }
    }

    #[test]
    fn corner_compatibility_of_test_problems() {
        for p in [
            make_test_problem(2, 1.0, ProblemParams::sigma(2.0)).unwrap(),
            make_test_problem(3, 0.01, ProblemParams::sigma(100.0)).unwrap(),
            make_test_problem(4, 0.1, ProblemParams::default()).unwrap(),
        ] {
            assert!(p.corner_mismatch() <= 1e-10, "{}", p.name());
        }
    }
}
