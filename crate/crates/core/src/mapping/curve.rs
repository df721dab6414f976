//! Sampled `(omega, g(omega))` curves for plotting maps outside the library.

use std::io::{self, Write};

use super::MappingSpec;
use crate::error::MappingError;

pub const CURVE_SAMPLES: usize = 1001;

/// `g` sampled at `samples` uniform points of `[0, 1]`, both ends included.
pub fn mapping_curve(
    spec: &MappingSpec,
    d: f64,
    s: f64,
    samples: usize,
) -> Result<Vec<(f64, f64)>, MappingError> {
    if samples < 2 {
        return Err(MappingError::InvalidParameter("need at least two samples".into()));
    }
    (0..samples)
        .map(|i| {
            let w = i as f64 / (samples - 1) as f64;
            spec.evaluate(w, d, s).map(|g| (w, g))
        })
        .collect()
}

/// Two-column CSV with header `omega,g`.
pub fn write_curve_csv<W: Write>(mut out: W, curve: &[(f64, f64)]) -> io::Result<()> {
    writeln!(out, "omega,g")?;
    for (w, g) in curve {
        writeln!(out, "{w:.6},{g:.12e}")?;
    }
    Ok(())
}
