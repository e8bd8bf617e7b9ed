use haar_burgers::linalg::{lu_solve, Matrix};
use haar_burgers::problems::{make_test_problem, ProblemParams, ProblemSpec};
use haar_burgers::stepper::{linearized_residual, run_with, solve_dense, LinearSystem};
use haar_burgers::{HaarBasis, SeriesKind, SolverConfig};
use proptest::prelude::*;

fn max_abs(v: impl IntoIterator<Item = f64>) -> f64 {
    v.into_iter().fold(0.0, |m, x| m.max(x.abs()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn expand_reconstruct_round_trip(
        level in 0u32..6,
        seed in proptest::collection::vec(-10.0f64..10.0, 64),
    ) {
        let basis = HaarBasis::new(level).unwrap();
        let samples: Vec<f64> = seed.iter().cycle().take(basis.size()).copied().collect();
        let c = basis.expand(&samples).unwrap();
        for (k, &x) in basis.points().iter().enumerate() {
            let v = basis.reconstruct(&c, SeriesKind::Value, x).unwrap();
            prop_assert!((v - samples[k]).abs() <= 1e-13 * (1.0 + samples[k].abs()));
        }
        let back = basis.h().mul_vec(&c);
        prop_assert!(max_abs(back.iter().zip(&samples).map(|(a, b)| a - b)) <= 1e-13 * 10.0);
    }

    #[test]
    fn coefficients_survive_sample_and_expand(
        level in 0u32..6,
        seed in proptest::collection::vec(-3.0f64..3.0, 64),
    ) {
        let basis = HaarBasis::new(level).unwrap();
        let c: Vec<f64> = seed.iter().cycle().take(basis.size()).copied().collect();
        let samples = basis.h().mul_vec(&c);
        let again = basis.expand(&samples).unwrap();
        prop_assert!(max_abs(again.iter().zip(&c).map(|(a, b)| a - b)) <= 1e-13);
    }

    #[test]
    fn wavelets_vanish_outside_support(i in 2usize..512, x in 0.0f64..=1.0) {
        let w = haar_burgers::index_from_ordinal(i).unwrap();
        let [e1, _, e3] = w.breakpoints;
        if x < e1 || x >= e3 {
            prop_assert_eq!(haar_burgers::haar_eval(i, x).unwrap(), 0.0);
        }
    }

    #[test]
    fn lu_matches_independent_elimination(
        entries in proptest::collection::vec(-1.0f64..1.0, 16 * 16),
        rhs in proptest::collection::vec(-5.0f64..5.0, 16),
    ) {
        // diagonally dominant, hence well conditioned
        let a = Matrix::from_fn(16, 16, |r, c| entries[r * 16 + c] + if r == c { 20.0 } else { 0.0 });
        let ours = lu_solve(&a, &rhs).unwrap();
        let oracle = nalgebra::DMatrix::from_row_slice(16, 16, a.as_slice())
            .lu()
            .solve(&nalgebra::DVector::from_column_slice(&rhs))
            .unwrap();
        prop_assert!(max_abs(ours.iter().zip(oracle.iter()).map(|(a, b)| a - b)) <= 1e-12);
        let residual = a.mul_vec(&ours);
        prop_assert!(
            max_abs(residual.iter().zip(&rhs).map(|(a, b)| a - b))
                <= 1e-10 * (1.0 + max_abs(rhs.iter().copied()))
        );
    }
}

#[test]
fn orthogonality_up_to_level_eight() {
    for level in 0..=8 {
        assert!(HaarBasis::new(level).unwrap().orthogonality_deviation() <= 1e-14);
    }
}

#[test]
fn singular_system_reports_time() {
    let sys = LinearSystem {
        a: Matrix::from_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]),
        rhs: vec![1.0, 2.0],
        t: 0.37,
    };
    match solve_dense(&sys) {
        Err(haar_burgers::Error::Singular { t, .. }) => assert_eq!(t, 0.37),
        other => panic!("unexpected {other:?}"),
    }
}

fn problems_under_test() -> Vec<(ProblemSpec, SolverConfig)> {
    vec![
        (
            make_test_problem(1, 0.01, ProblemParams::c0(0.5)).unwrap(),
            SolverConfig::new(3, 0.01, 1.5),
        ),
        (
            make_test_problem(2, 1.0, ProblemParams::sigma(2.0)).unwrap(),
            SolverConfig::new(4, 0.001, 0.05),
        ),
        (
            make_test_problem(3, 0.01, ProblemParams::sigma(100.0)).unwrap(),
            SolverConfig::new(3, 0.01, 0.5),
        ),
        (
            make_test_problem(4, 0.1, ProblemParams::default()).unwrap(),
            SolverConfig::new(3, 0.01, 0.1),
        ),
        (
            ProblemSpec::new("moving-ends", 1, 1, 0.2, (-1.0, 2.0), 0.0, |x| 1.0 + 0.1 * x)
                .unwrap()
                .with_boundary(|t| 0.9 + 0.5 * t, |t| 1.2 - t * t),
            SolverConfig::new(3, 0.01, 0.2),
        ),
    ]
}

#[test]
fn every_step_interpolates_the_boundary_data() {
    for (spec, cfg) in problems_under_test() {
        let basis = HaarBasis::new(cfg.level).unwrap();
        run_with(&spec, &basis, &cfg, &[], |_, next| {
            let c = &next.coeffs;
            let w_at = |x: f64| -> f64 {
                let p2: f64 = basis.reconstruct(c, SeriesKind::SecondIntegral, x).unwrap();
                let p2_one: f64 = basis.p2_one().iter().zip(c).map(|(p, c)| p * c).sum();
                let f1 = spec.left_boundary(next.t);
                p2 - x * p2_one + x * (spec.right_boundary(next.t) - f1) + f1
            };
            assert!((w_at(0.0) - spec.left_boundary(next.t)).abs() <= 1e-12, "{}", spec.name());
            assert!((w_at(1.0) - spec.right_boundary(next.t)).abs() <= 1e-12, "{}", spec.name());
            Ok(())
        })
        .unwrap();
    }
}

#[test]
fn every_step_satisfies_the_linearized_equation() {
    for (spec, cfg) in problems_under_test() {
        let basis = HaarBasis::new(cfg.level).unwrap();
        run_with(&spec, &basis, &cfg, &[], |prev, next| {
            let res = linearized_residual(prev, next, &spec, cfg.dt);
            let scale = 1.0 + max_abs(res.iter().map(|r| r.1));
            let worst = max_abs(res.iter().map(|r| r.0));
            assert!(worst <= 1e-9 * scale, "{}: {worst}", spec.name());
            Ok(())
        })
        .unwrap();
    }
}

#[test]
fn reconstructed_derivatives_are_consistent() {
    // Central differences are exact on the piecewise-polynomial expansions
    // as long as the stencil stays inside one dyadic cell.
    for (spec, cfg) in problems_under_test() {
        let basis = HaarBasis::new(cfg.level).unwrap();
        let step = basis.spacing() / 4.0;
        run_with(&spec, &basis, &cfg, &[], |_, next| {
            let c = &next.coeffs;
            let p2_one: f64 = basis.p2_one().iter().zip(c).map(|(p, c)| p * c).sum();
            let f1 = spec.left_boundary(next.t);
            let jump = spec.right_boundary(next.t) - f1;
            let w = |x: f64| {
                basis.reconstruct(c, SeriesKind::SecondIntegral, x).unwrap() - x * p2_one
                    + x * jump
                    + f1
            };
            let wx = |x: f64| {
                basis.reconstruct(c, SeriesKind::FirstIntegral, x).unwrap() - p2_one + jump
            };
            for (k, &x) in basis.points().iter().enumerate() {
                let d_w = (w(x + step) - w(x - step)) / (2.0 * step);
                let d_wx = (wx(x + step) - wx(x - step)) / (2.0 * step);
                assert!((d_w - next.wx[k]).abs() <= 1e-12 * (1.0 + next.wx[k].abs()));
                assert!((d_wx - next.wxx[k]).abs() <= 1e-12 * (1.0 + next.wxx[k].abs()));
                assert!((wx(x) - next.wx[k]).abs() <= 1e-12);
                assert!((w(x) - next.w[k]).abs() <= 1e-12);
            }
            Ok(())
        })
        .unwrap();
    }
}
