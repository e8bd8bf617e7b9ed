//! Command implementations behind the `haar-burgers` binary. Each command
//! returns its CSV output as a string.

pub mod runfile;

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::haar_basis::HaarBasis;
use crate::metrics::{
    convergence_study, error_norms, exact_at_points, physical_points, ConvergenceRow, Reference,
};
use crate::problems::{make_test_problem, ProblemParams};
use crate::stepper::{run, SolverConfig};

pub use runfile::RunFile;

pub const SOLVE_HEADER: &str = "t,x_star,w_numeric,w_exact,abs_error";
pub const TABLE_HEADER: &str = "table,T,dt,two_m,norm,computed,published,rel_dev,ratio_to_previous";
pub const CONVERGE_HEADER: &str =
    "J,two_m,l_inf,l_2,ratio_l_inf,ratio_l_2,observed_order,k_estimate,bound";

const DEFAULT_ORACLE_TARGET: f64 = 1e-6;

/// Eight significant digits, scientific notation.
pub fn fmt_num(v: f64) -> String {
    format!("{v:.7e}")
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt_num).unwrap_or_default()
}

/// Solution profiles at each snapshot time (default: the final time).
pub fn cmd_solve(rf: &RunFile) -> Result<String> {
    let spec = rf.problem_spec()?;
    let level = rf.require_level()?;
    let dt = rf.require_dt()?;
    let t_end = rf.require_t_end()?;
    let snapshots = if rf.snapshots.is_empty() {
        vec![t_end]
    } else {
        rf.snapshots.clone()
    };
    let basis = HaarBasis::new(level)?;
    let out = run(&spec, &basis, &SolverConfig::new(level, dt, t_end), &snapshots)?;
    let xs = physical_points(&spec, &basis);

    let mut csv = format!("{SOLVE_HEADER}\n");
    for (requested, state) in snapshots.iter().zip(&out.snapshots) {
        let exact = if spec.has_exact() {
            Some(exact_at_points(&spec, &basis, state.t)?)
        } else {
            None
        };
        for (k, (&x, &w)) in xs.iter().zip(&state.w).enumerate() {
            let (ex, err) = match &exact {
                Some(e) => (fmt_num(e[k]), fmt_num((w - e[k]).abs())),
                None => (String::new(), String::new()),
            };
            writeln!(csv, "{},{},{},{ex},{err}", fmt_num(*requested), fmt_num(x), fmt_num(w))
                .expect("write to String");
        }
    }
    Ok(csv)
}

/// A published "Present" cell: `(T, dt, level, norm, value)`.
type Cell = (f64, f64, u32, &'static str, f64);

struct TableSpec {
    problem: u8,
    nu: f64,
    params: ProblemParams,
    cells: &'static [Cell],
}

const TABLE_1: &[Cell] = &[
    (2.0, 0.01, 3, "l_inf", 0.76e-3),
    (2.0, 0.01, 3, "l_2", 0.347e-3),
    (4.0, 0.01, 3, "l_inf", 0.582e-3),
    (4.0, 0.01, 3, "l_2", 0.311e-3),
];

const TABLE_2: &[Cell] = &[
    (2.0, 0.01, 4, "l_inf", 0.2236e-3),
    (2.0, 0.01, 4, "l_2", 0.054998e-3),
    (4.0, 0.01, 4, "l_inf", 0.1823e-3),
    (4.0, 0.01, 4, "l_2", 0.575806e-3),
];

const TABLE_3: &[Cell] = &[
    (0.01, 0.001, 2, "l_inf", 1.1533e-6),
    (0.01, 0.001, 2, "l_2", 8.18486e-7),
    (0.1, 0.01, 2, "l_inf", 9.9506e-6),
    (0.1, 0.01, 2, "l_2", 7.00077e-6),
    (0.2, 0.01, 2, "l_inf", 1.73036e-5),
    (0.2, 0.01, 2, "l_2", 1.22587e-5),
    (0.01, 0.001, 4, "l_inf", 7.31654e-8),
    (0.01, 0.001, 4, "l_2", 5.12615e-8),
    (0.1, 0.01, 4, "l_inf", 6.26645e-7),
    (0.1, 0.01, 4, "l_2", 4.40074e-7),
    (0.2, 0.01, 4, "l_inf", 1.09634e-6),
    (0.2, 0.01, 4, "l_2", 7.72171e-7),
];

const TABLE_4: &[Cell] = &[
    (1.0, 0.01, 2, "l_2", 2.52147e-7),
    (1.0, 0.01, 2, "l_inf", 3.58275e-7),
    (1.0, 0.01, 3, "l_2", 6.35077e-8),
    (1.0, 0.01, 3, "l_inf", 9.02969e-8),
    (1.0, 0.01, 4, "l_2", 1.59079e-8),
    (1.0, 0.01, 4, "l_inf", 2.26455e-8),
    (1.0, 0.01, 5, "l_2", 3.98117e-9),
    (1.0, 0.01, 5, "l_inf", 5.66586e-9),
];

fn table_spec(n: u8) -> Result<TableSpec> {
    Ok(match n {
        1 => TableSpec {
            problem: 1,
            nu: 0.01,
            params: ProblemParams::c0(0.5),
            cells: TABLE_1,
        },
        2 => TableSpec {
            problem: 1,
            nu: 0.001,
            params: ProblemParams::c0(0.5),
            cells: TABLE_2,
        },
        3 => TableSpec {
            problem: 2,
            nu: 1.0,
            params: ProblemParams::sigma(2.0),
            cells: TABLE_3,
        },
        4 => TableSpec {
            problem: 3,
            nu: 0.01,
            params: ProblemParams::sigma(100.0),
            cells: TABLE_4,
        },
        other => return Err(Error::Config(format!("no table {other}; expected 1 to 4"))),
    })
}

/// One computed table cell.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub table: u8,
    pub t: f64,
    pub dt: f64,
    pub level: u32,
    pub norm: &'static str,
    pub computed: f64,
    pub published: f64,
    /// Same norm at the same `(T, dt)` one row earlier in level, divided by this one.
    pub ratio_to_previous: Option<f64>,
}

impl TableRow {
    pub fn rel_dev(&self) -> f64 {
        (self.computed - self.published) / self.published
    }
}

/// Recomputes the published cells of table `n`.
pub fn table_rows(n: u8) -> Result<Vec<TableRow>> {
    let ts = table_spec(n)?;
    let spec = make_test_problem(ts.problem, ts.nu, ts.params)?;
    let mut rows: Vec<TableRow> = Vec::with_capacity(ts.cells.len());
    // one solver run per (T, dt, level)
    let mut cache: Vec<((f64, f64, u32), (f64, f64))> = Vec::new();
    for &(t, dt, level, norm, published) in ts.cells {
        let key = (t, dt, level);
        let (l_inf, l_2) = match cache.iter().find(|(k, _)| *k == key) {
            Some((_, v)) => *v,
            None => {
                let basis = HaarBasis::new(level)?;
                let out = run(&spec, &basis, &SolverConfig::new(level, dt, t), &[])?;
                let reference = exact_at_points(&spec, &basis, out.final_state.t)?;
                let r = error_norms(&out.final_state.w, &reference, basis.spacing(), t)?;
                cache.push((key, (r.l_inf, r.l_2)));
                (r.l_inf, r.l_2)
            }
        };
        let computed = if norm == "l_inf" { l_inf } else { l_2 };
        let ratio_to_previous = rows
            .iter()
            .rev()
            .find(|r| r.t == t && r.dt == dt && r.norm == norm && r.level < level)
            .map(|r| r.computed / computed);
        rows.push(TableRow {
            table: n,
            t,
            dt,
            level,
            norm,
            computed,
            published,
            ratio_to_previous,
        });
    }
    Ok(rows)
}

/// CSV of [`table_rows`].
pub fn cmd_table(n: u8) -> Result<String> {
    let mut csv = format!("{TABLE_HEADER}\n");
    for r in table_rows(n)? {
        writeln!(
            csv,
            "{},{},{},{},{},{},{},{},{}",
            r.table,
            fmt_num(r.t),
            fmt_num(r.dt),
            2u64 << r.level,
            r.norm,
            fmt_num(r.computed),
            fmt_num(r.published),
            fmt_num(r.rel_dev()),
            fmt_opt(r.ratio_to_previous),
        )
        .expect("write to String");
    }
    Ok(csv)
}

/// Convergence rows for the run file's `J_list`. Problems without a closed
/// form are measured against the finite-difference oracle.
pub fn converge_rows(rf: &RunFile) -> Result<Vec<ConvergenceRow>> {
    let spec = rf.problem_spec()?;
    let dt = rf.require_dt()?;
    let t_end = rf.require_t_end()?;
    let levels = rf.require_levels()?;
    let reference = if spec.has_exact() {
        Reference::Exact
    } else {
        Reference::Oracle {
            accuracy_target: rf.accuracy_target.unwrap_or(DEFAULT_ORACLE_TARGET),
        }
    };
    convergence_study(&spec, dt, t_end, levels, reference)
}

pub fn cmd_converge(rf: &RunFile) -> Result<String> {
    let mut csv = format!("{CONVERGE_HEADER}\n");
    for r in converge_rows(rf)? {
        writeln!(
            csv,
            "{},{},{},{},{},{},{},{},{}",
            r.level,
            2u64 << r.level,
            fmt_num(r.l_inf),
            fmt_num(r.l_2),
            fmt_opt(r.ratio_to_previous.map(|p| p.0)),
            fmt_opt(r.ratio_to_previous.map(|p| p.1)),
            fmt_opt(r.observed_order),
            fmt_num(r.k_estimate),
            fmt_num(r.bound),
        )
        .expect("write to String");
    }
    Ok(csv)
}

/// Writes `csv` to `path`, or to stdout when `path` is `None`.
pub fn emit(csv: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, csv)?,
        None => print!("{csv}"),
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_format_has_eight_significant_digits() {
        assert_eq!(fmt_num(1.1533e-6), "1.1533000e-6");
        assert_eq!(fmt_num(0.0), "0.0000000e0");
        assert_eq!(fmt_num(-12.5), "-1.2500000e1");
    }

    #[test]
    fn unknown_table() {
        assert!(matches!(cmd_table(5), Err(Error::Config(_))));
    }

    #[test]
    fn single_level_has_empty_ratio_columns() {
        let rf = RunFile::parse("problem = 3\nnu = 0.01\nsigma = 100\ndt = 0.01\nT = 0.1\nJ_list = 2")
            .unwrap();
        let csv = cmd_converge(&rf).unwrap();
        let line = csv.lines().nth(1).unwrap();
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 9);
        assert_eq!(&fields[4..7], &["", "", ""]);
    }
}
