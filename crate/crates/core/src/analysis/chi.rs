use std::io::{self, Write};

use rayon::prelude::*;

use super::l1_error;
use crate::error::AnalysisError;
use crate::format::sci5;
use crate::mapping::MappingSpec;
use crate::oned::{run_problem_1d, DtRule, Problem1D, ProblemSpec1D, CASE5_DELTA};

/// Adaptive families swept over the local-operator parameter.
pub const CHI_FAMILIES: [&str; 6] = ["aims", "aima", "arms", "arma", "apms", "apma"];

#[derive(Debug, Clone, PartialEq)]
pub struct ChiSweepConfig {
    pub family: String,
    pub chis: Vec<f64>,
    pub times: Vec<f64>,
    pub n_cells: usize,
    pub sigma: f64,
    pub delta: f64,
}

impl ChiSweepConfig {
    /// 200 cells, `dt = 0.5 dx`, `chi in {1, 10, 100, 1000}`, `t = 2`.
    pub fn new(family: &str) -> Self {
        Self {
            family: family.to_ascii_lowercase(),
            chis: vec![1.0, 10.0, 100.0, 1000.0],
            times: vec![2.0],
            n_cells: 200,
            sigma: 0.5,
            delta: CASE5_DELTA,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChiRow {
    /// `chi` value, or the name of the classical map the family reduces to.
    pub label: String,
    pub scheme: MappingSpec,
    /// One L1 error per configured time.
    pub errors: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChiTable {
    pub family: String,
    pub times: Vec<f64>,
    pub rows: Vec<ChiRow>,
}

impl ChiTable {
    pub fn row(&self, label: &str) -> Option<&ChiRow> {
        self.rows.iter().find(|r| r.label == label)
    }
}

/// The classical map each family reduces to, with its label: `chi = 0` for
/// the AIM generalizations, `s = 0` (`c = 0`) for the PM/RM ones.
fn base_row(family: &MappingSpec) -> Result<(String, MappingSpec), AnalysisError> {
    Ok(match family {
        MappingSpec::AimPhi { .. } => ("aim".into(), family.with_chi(0.0)?),
        MappingSpec::Arm { .. } => ("rm260".into(), family.with_c(0.0)?),
        MappingSpec::Apm { .. } => ("pm6".into(), family.with_c(0.0)?),
        other => return Err(AnalysisError::InvalidParameter(format!("{other} has no chi parameter"))),
    })
}

/// L1 errors of case 5 for the base row and every `chi`, at every time.
pub fn chi_sweep(cfg: &ChiSweepConfig) -> Result<ChiTable, AnalysisError> {
    if !CHI_FAMILIES.contains(&cfg.family.as_str()) {
        return Err(AnalysisError::InvalidParameter(format!("`{}` is not a chi family", cfg.family)));
    }
    let family = MappingSpec::preset(&cfg.family)?;
    let mut rows = vec![base_row(&family)?];
    for &chi in &cfg.chis {
        rows.push((format!("{chi}"), family.with_chi(chi)?));
    }
    let mut times = cfg.times.clone();
    times.sort_by(f64::total_cmp);
    let t_end = *times.last().ok_or_else(|| AnalysisError::InvalidParameter("no times".into()))?;
    let problem = Problem1D::Case5 { delta: cfg.delta };

    let rows = rows
        .into_par_iter()
        .map(|(label, scheme)| {
            let mut spec = ProblemSpec1D::new(problem, cfg.n_cells, scheme)
                .with_end_time(t_end)
                .with_dt_rule(DtRule::Fixed { sigma: cfg.sigma });
            spec.snapshot_times = times[..times.len() - 1].to_vec();
            let run = run_problem_1d(&spec)?;
            let mut errors = Vec::with_capacity(times.len());
            for s in &run.snapshots {
                errors.push(l1_error(s.field.interior(0), &problem.exact(&run.grid, s.time).unwrap())?);
            }
            errors.push(l1_error(run.interior(0), &problem.exact(&run.grid, t_end).unwrap())?);
            Ok(ChiRow { label, scheme, errors })
        })
        .collect::<Result<Vec<_>, AnalysisError>>()?;
    Ok(ChiTable { family: cfg.family.clone(), times, rows })
}

/// Columns `chi,t=<t1>,t=<t2>,...`.
pub fn write_chi_table_csv<W: Write>(mut out: W, table: &ChiTable) -> io::Result<()> {
    let header: Vec<String> = table.times.iter().map(|t| format!("t={t}")).collect();
    writeln!(out, "chi,{}", header.join(","))?;
    for r in &table.rows {
        let cells: Vec<String> = r.errors.iter().map(|e| sci5(*e)).collect();
        writeln!(out, "{},{}", r.label, cells.join(","))?;
    }
    Ok(())
}
