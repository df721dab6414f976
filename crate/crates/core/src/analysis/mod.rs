//! Error norms, convergence orders, spectral (ADR) analysis and the
//! `chi` parameter sweep.

mod adr;
mod chi;
mod convergence;

pub use adr::{
    adr_spectrum, dissipation_distance, upwind5_curve, upwind5_wavenumber, write_spectrum_csv, SpectrumCurve,
    SpectrumPoint, ADR_SIGMA,
};
pub use chi::{chi_sweep, write_chi_table_csv, ChiRow, ChiSweepConfig, ChiTable, CHI_FAMILIES};
pub use convergence::{convergence_study, write_convergence_csv, ErrorReport};

use crate::error::AnalysisError;

/// `(1/N) sum |u_j - exact_j|`.
pub fn l1_error(numeric: &[f64], exact: &[f64]) -> Result<f64, AnalysisError> {
    if numeric.len() != exact.len() {
        return Err(AnalysisError::LengthMismatch { numeric: numeric.len(), exact: exact.len() });
    }
    if numeric.is_empty() {
        return Ok(0.0);
    }
    let sum: f64 = numeric.iter().zip(exact).map(|(a, b)| (a - b).abs()).sum();
    Ok(sum / numeric.len() as f64)
}

/// `log(e_coarse / e_fine) / log(ratio)`.
pub fn convergence_order(e_coarse: f64, e_fine: f64, ratio: f64) -> Result<f64, AnalysisError> {
    if !(e_coarse > 0.0 && e_fine > 0.0) {
        return Err(AnalysisError::NonPositiveError { coarse: e_coarse, fine: e_fine });
    }
    if !(ratio > 1.0) {
        return Err(AnalysisError::InvalidParameter(format!("refinement ratio must exceed 1, got {ratio}")));
    }
    Ok((e_coarse / e_fine).ln() / ratio.ln())
}
