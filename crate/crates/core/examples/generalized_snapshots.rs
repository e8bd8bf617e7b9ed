//! Generalized Burgers' equation (mu = 2) with snapshots along the way.
//! This problem starts at t = 1.

use haar_burgers::metrics::{exact_error, physical_points};
use haar_burgers::{make_test_problem, run, HaarBasis, ProblemParams, SolverConfig};

fn main() -> haar_burgers::Result<()> {
    let spec = make_test_problem(1, 0.005, ProblemParams::c0(0.5))?;
    let basis = HaarBasis::new(3)?;
    let out = run(&spec, &basis, &SolverConfig::new(3, 0.01, 4.0), &[1.5, 2.0, 3.0, 4.0])?;

    let xs = physical_points(&spec, &basis);
    for snap in &out.snapshots {
        let err = exact_error(&spec, &basis, snap)?;
        println!("t = {}  L_inf {:.3e}  L_2 {:.3e}", snap.t, err.l_inf, err.l_2);
    }
    println!("\nx*        w(t=4)      exact");
    for (x, w) in xs.iter().zip(&out.final_state.w) {
        println!("{x:.5}  {w:.8}  {:.8}", spec.evaluate_exact(*x, 4.0)?);
    }
    Ok(())
}
