//! Error against resolution, with observed order and the a-priori bound.

use haar_burgers::metrics::{convergence_study, Reference};
use haar_burgers::{make_test_problem, ProblemParams};

fn main() -> haar_burgers::Result<()> {
    let spec = make_test_problem(3, 0.01, ProblemParams::sigma(100.0))?;
    let rows = convergence_study(&spec, 0.01, 1.0, &[1, 2, 3, 4, 5, 6], Reference::Exact)?;
    println!(" J   2M     L_inf       L_2     order     bound");
    for r in rows {
        let order = r.observed_order.map_or("-".into(), |o| format!("{o:.3}"));
        println!("{:>2} {:>4}  {:.3e}  {:.3e}  {order:>6}  {:.3e}", r.level, 2 << r.level, r.l_inf, r.l_2, r.bound);
    }
    Ok(())
}
