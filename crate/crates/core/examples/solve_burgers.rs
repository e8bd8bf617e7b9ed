//! Viscous Burgers' equation (mu = 1, delta = 0) on a user-defined problem,
//! compared against the steady travelling-front solution.

use haar_burgers::metrics::exact_error;
use haar_burgers::{run, HaarBasis, ProblemSpec, SolverConfig};

fn main() -> haar_burgers::Result<()> {
    let nu = 0.1;
    // w = -tanh(x/(2 nu)) is a steady solution of w_t + w w_x = nu w_xx.
    let front = move |x: f64| -(x / (2.0 * nu)).tanh();
    let spec = ProblemSpec::new("tanh-front", 1, 0, nu, (-1.0, 1.0), 0.0, front)?
        .with_boundary(move |_| front(-1.0), move |_| front(1.0))
        .with_exact(move |x, _| front(x));

    for level in 2..=6 {
        let basis = HaarBasis::new(level)?;
        let out = run(&spec, &basis, &SolverConfig::new(level, 0.01, 1.0), &[])?;
        let err = exact_error(&spec, &basis, &out.final_state)?;
        println!("J = {level}  2M = {:>3}  L_inf {:.3e}  L_2 {:.3e}", basis.size(), err.l_inf, err.l_2);
    }
    Ok(())
}
