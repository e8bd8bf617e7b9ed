//! Certifies a finite-difference reference and compares the wavelet solution
//! against both it and the closed form.

use haar_burgers::fd_oracle::fd_reference_at;
use haar_burgers::metrics::{exact_at_points, physical_points};
use haar_burgers::{error_norms, make_test_problem, run, HaarBasis, ProblemParams, SolverConfig};

fn main() -> haar_burgers::Result<()> {
    let spec = make_test_problem(3, 0.05, ProblemParams::sigma(10.0))?;
    let t_end = 0.5;
    let basis = HaarBasis::new(4)?;
    let out = run(&spec, &basis, &SolverConfig::new(4, 0.005, t_end), &[])?;

    let oracle = fd_reference_at(&spec, &physical_points(&spec, &basis), t_end, 1e-7)?;
    println!(
        "oracle: {} intervals after {} refinements, last change {:.2e}",
        oracle.intervals, oracle.refinements, oracle.last_change
    );
    let exact = exact_at_points(&spec, &basis, t_end)?;
    let vs_oracle = error_norms(&out.final_state.w, &oracle.values, basis.spacing(), t_end)?;
    let vs_exact = error_norms(&out.final_state.w, &exact, basis.spacing(), t_end)?;
    let oracle_err = error_norms(&oracle.values, &exact, basis.spacing(), t_end)?;
    println!("wavelet vs oracle  L_inf {:.3e}", vs_oracle.l_inf);
    println!("wavelet vs exact   L_inf {:.3e}", vs_exact.l_inf);
    println!("oracle  vs exact   L_inf {:.3e}", oracle_err.l_inf);
    Ok(())
}
