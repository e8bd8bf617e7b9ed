//! Haar wavelet collocation for the generalized Burgers' equation
//!
//! ```text
//! w_t + w^mu w_x* = nu w^delta w_x*x*,   a <= x* <= b,
//! ```
//!
//! with Dirichlet data. Time is discretized by forward differences with
//! advection and diffusion averaged over consecutive levels, the nonlinear
//! terms are quasilinearized about the previous level, and `w_xx` is expanded
//! in Haar wavelets collocated at cell midpoints.
//!
//! Verification tooling lives alongside the solver: built-in test problems
//! with closed-form solutions, `L2`/`L_inf` error norms, convergence studies,
//! and an independent finite-difference oracle.
//!
//! ```
//! use haar_burgers::{run, HaarBasis, SolverConfig, make_test_problem, ProblemParams};
//! use haar_burgers::metrics::exact_error;
//!
//! let spec = make_test_problem(2, 1.0, ProblemParams::sigma(2.0)).unwrap();
//! let basis = HaarBasis::new(2).unwrap();
//! let out = run(&spec, &basis, &SolverConfig::new(2, 0.001, 0.01), &[]).unwrap();
//! let err = exact_error(&spec, &basis, &out.final_state).unwrap();
//! assert!(err.l_inf < 2e-6);
//! ```

pub mod cli;
pub mod error;
pub mod fd_oracle;
pub mod haar_basis;
pub mod linalg;
pub mod metrics;
pub mod problems;
pub mod stepper;

pub use error::{Error, Result};
pub use haar_basis::{haar_eval, index_from_ordinal, p_eval, HaarBasis, SeriesKind, WaveletIndex};
pub use metrics::{error_norms, ErrorReport};
pub use problems::{make_test_problem, ProblemParams, ProblemSpec};
pub use stepper::{advance, run, SolutionState, SolverConfig};
