use std::io::{self, Write};

use rayon::prelude::*;

use super::{convergence_order, l1_error};
use crate::error::AnalysisError;
use crate::format::{sci5, seconds};
use crate::mapping::MappingSpec;
use crate::oned::{run_problem_1d, DtRule, Problem1D, ProblemSpec1D};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorReport {
    pub n: usize,
    pub l1: f64,
    /// Against the previous (coarser) entry.
    pub order: Option<f64>,
    pub wall_time: f64,
}

/// L1 errors against the translated initial profile at `t_end` on each grid
/// size, with orders between consecutive sizes (assumed to double).
pub fn convergence_study(
    problem: Problem1D,
    scheme: MappingSpec,
    sizes: &[usize],
    t_end: f64,
    dt_rule: DtRule,
) -> Result<Vec<ErrorReport>, AnalysisError> {
    if problem.is_euler() {
        return Err(AnalysisError::InvalidParameter("convergence needs an advection case".into()));
    }
    let runs: Vec<(usize, f64, f64)> = sizes
        .par_iter()
        .map(|&n| {
            let spec = ProblemSpec1D::new(problem, n, scheme).with_end_time(t_end).with_dt_rule(dt_rule);
            let r = run_problem_1d(&spec)?;
            let exact = problem.exact(&r.grid, t_end).expect("advection case");
            Ok((n, l1_error(r.interior(0), &exact)?, r.wall_time))
        })
        .collect::<Result<_, AnalysisError>>()?;
    let mut out: Vec<ErrorReport> = Vec::with_capacity(runs.len());
    for (i, &(n, l1, wall_time)) in runs.iter().enumerate() {
        let order = if i == 0 { None } else { Some(convergence_order(runs[i - 1].1, l1, 2.0)?) };
        out.push(ErrorReport { n, l1, order, wall_time });
    }
    Ok(out)
}

/// Columns `N,error,order,cpu_time`; the first order is `-`.
pub fn write_convergence_csv<W: Write>(mut out: W, rows: &[ErrorReport]) -> io::Result<()> {
    writeln!(out, "N,error,order,cpu_time")?;
    for r in rows {
        let order = r.order.map_or_else(|| "-".to_string(), |o| format!("{o:.1}"));
        writeln!(out, "{},{},{},{}", r.n, sci5(r.l1), order, seconds(r.wall_time))?;
    }
    Ok(())
}
