use std::f64::consts::PI;
use std::io::{self, Write};

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::AnalysisError;
use crate::mapping::{MappingSpec, WeightMap};
use crate::oned::{advection_rhs, fill_ghosts, Boundary1D, Field1D, Grid1D};
use crate::time::rk3_step;

/// `dt / dx` of the single probing step.
pub const ADR_SIGMA: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumPoint {
    /// Reduced wavenumber in `(0, pi]`.
    pub phi: f64,
    /// Real part of the modified wavenumber.
    pub dispersion: f64,
    /// Imaginary part; non-positive for a damping scheme.
    pub dissipation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumCurve {
    pub label: String,
    pub points: Vec<SpectrumPoint>,
}

/// Modified wavenumber of the linear fifth-order upwind scheme, so that
/// `du/dt = -i Phi / dx * u` for `u = e^{i phi j}`.
pub fn upwind5_wavenumber(phi: f64) -> Complex64 {
    let c = [2.0, -13.0, 47.0, 27.0, -3.0];
    let h: Complex64 = c
        .iter()
        .enumerate()
        .map(|(m, cm)| cm / 60.0 * Complex64::from_polar(1.0, phi * (m as f64 - 2.0)))
        .sum();
    let shift = Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, -phi);
    -Complex64::i() * shift * h
}

/// The analytic upwind curve sampled at the same wavenumbers as
/// [`adr_spectrum`].
pub fn upwind5_curve(n_points: usize) -> SpectrumCurve {
    let points = (1..=n_points / 2)
        .map(|k| {
            let phi = 2.0 * PI * k as f64 / n_points as f64;
            let w = upwind5_wavenumber(phi);
            SpectrumPoint { phi, dispersion: w.re, dissipation: w.im }
        })
        .collect();
    SpectrumCurve { label: "upwind5".into(), points }
}

fn fourier(values: &[f64], k: usize) -> Complex64 {
    let n = values.len() as f64;
    values
        .iter()
        .enumerate()
        .map(|(j, v)| v * Complex64::from_polar(1.0, -2.0 * PI * k as f64 * (j as f64 + 0.5) / n))
        .sum()
}

/// Numerical dispersion relation: one RK3 step of periodic unit-speed
/// advection from `sin(phi (j + 1/2))` per wavenumber, with
/// `Phi = (i dx/dt) ln(u1_k / u0_k)`.
pub fn adr_spectrum(scheme: &MappingSpec, n_points: usize) -> Result<SpectrumCurve, AnalysisError> {
    if n_points < 16 || n_points % 2 != 0 {
        return Err(AnalysisError::InvalidParameter(format!(
            "n_points must be even and >= 16, got {n_points}"
        )));
    }
    let map = WeightMap::new(*scheme)?;
    let grid = Grid1D::new(n_points, 0.0, 1.0)?;
    let dt = ADR_SIGMA * grid.dx;
    let points = (1..=n_points / 2)
        .into_par_iter()
        .map(|k| {
            let phi = 2.0 * PI * k as f64 / n_points as f64;
            let u0: Vec<f64> = (0..n_points).map(|j| (phi * (j as f64 + 0.5)).sin()).collect();
            let mut field = Field1D::from_interior(&[u0.clone()]);
            rk3_step(&mut field, 0.0, dt, |s, _, out| {
                fill_ghosts(s, Boundary1D::Periodic);
                advection_rhs(s, &grid, &map, out)
            })?;
            let a0 = fourier(&u0, k);
            if a0.norm() < 1e-12 * n_points as f64 {
                return Err(AnalysisError::DegenerateCoefficient { k });
            }
            let a1 = fourier(field.interior(0), k);
            let w = Complex64::i() / ADR_SIGMA * (a1 / a0).ln();
            Ok(SpectrumPoint { phi, dispersion: w.re, dissipation: w.im })
        })
        .collect::<Result<Vec<_>, AnalysisError>>()?;
    Ok(SpectrumCurve { label: scheme.label(), points })
}

/// RMS gap between the dissipation parts of two curves sampled at the same
/// wavenumbers, restricted to `phi in [lo, hi]`.
pub fn dissipation_distance(a: &SpectrumCurve, b: &SpectrumCurve, lo: f64, hi: f64) -> f64 {
    let diffs: Vec<f64> = a
        .points
        .iter()
        .zip(&b.points)
        .filter(|(p, _)| p.phi >= lo && p.phi <= hi)
        .map(|(p, q)| p.dissipation - q.dissipation)
        .collect();
    if diffs.is_empty() {
        return 0.0;
    }
    (diffs.iter().map(|d| d * d).sum::<f64>() / diffs.len() as f64).sqrt()
}

/// Header `phi,dispersion,dissipation`.
pub fn write_spectrum_csv<W: Write>(mut out: W, curve: &SpectrumCurve) -> io::Result<()> {
    writeln!(out, "phi,dispersion,dissipation")?;
    for p in &curve.points {
        writeln!(out, "{:.10},{:.10e},{:.10e}", p.phi, p.dispersion, p.dissipation)?;
    }
    Ok(())
}
