//! Problem 4 (mu = delta = 1, sin initial data) has diffusion nu*w, which is
//! negative wherever w < 0. Coarse solutions look sensible, but refining
//! either the wavelet or the finite-difference discretization exposes the
//! backward-heat instability.

use haar_burgers::fd_oracle::{fd_solve, FdGrid};
use haar_burgers::{make_test_problem, run, HaarBasis, ProblemParams, SolverConfig};

fn main() -> haar_burgers::Result<()> {
    let spec = make_test_problem(4, 0.1, ProblemParams::default())?;
    let t_end = 0.1;
    for (level, dt) in [(3, 1e-3), (4, 1e-3), (5, 1e-3), (6, 5e-4)] {
        let basis = HaarBasis::new(level)?;
        match run(&spec, &basis, &SolverConfig::new(level, dt, t_end), &[]) {
            Ok(out) => {
                let peak = out.final_state.w.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                println!("wavelet J = {level}: max |w| = {peak:.4}");
            }
            Err(e) => println!("wavelet J = {level}: {e}"),
        }
    }
    for intervals in [32usize, 64, 128, 256] {
        let grid = FdGrid::new(&spec, intervals - 1, t_end / intervals as f64)?;
        match fd_solve(&spec, &grid, t_end) {
            Ok(w) => {
                let peak = w.iter().fold(0.0f64, |m, v| m.max(v.abs()));
                println!("fd {intervals:>3} intervals: max |w| = {peak:.4}");
            }
            Err(e) => println!("fd {intervals:>3} intervals: {e}"),
        }
    }
    Ok(())
}
