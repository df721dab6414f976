//! Local (width) operators `phi` used in the denominators of adaptive maps.

use crate::error::MappingError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    /// `(1 + chi (w - 1/2)^2) (w (1 - w))^kappa`
    Symmetric,
    /// `(1 + chi w) (w (1 - w))^kappa`
    Asymmetric,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalOperator {
    pub kind: OperatorKind,
    pub chi: f64,
    pub kappa: u32,
}

impl LocalOperator {
    pub fn new(kind: OperatorKind, chi: f64, kappa: u32) -> Result<Self, MappingError> {
        if kappa < 2 {
            return Err(MappingError::InvalidParameter(format!(
                "kappa must be >= 2, got {kappa}"
            )));
        }
        let chi_ok = match kind {
            OperatorKind::Symmetric => chi.is_finite() && chi >= 0.0,
            OperatorKind::Asymmetric => chi.is_finite() && chi > -1.0,
        };
        if !chi_ok {
            return Err(MappingError::InvalidParameter(format!(
                "chi = {chi} out of range for {kind:?} operator"
            )));
        }
        Ok(Self { kind, chi, kappa })
    }

    pub fn symmetric(chi: f64, kappa: u32) -> Result<Self, MappingError> {
        Self::new(OperatorKind::Symmetric, chi, kappa)
    }

    pub fn asymmetric(chi: f64, kappa: u32) -> Result<Self, MappingError> {
        Self::new(OperatorKind::Asymmetric, chi, kappa)
    }

    #[inline]
    pub fn eval(&self, omega: f64) -> f64 {
        match self.kind {
            OperatorKind::Symmetric => phi_symmetric(omega, self.chi, self.kappa),
            OperatorKind::Asymmetric => phi_asymmetric(omega, self.chi, self.kappa),
        }
    }

    pub(crate) fn with_chi(self, chi: f64) -> Result<Self, MappingError> {
        Self::new(self.kind, chi, self.kappa)
    }
}

#[inline]
pub fn phi_symmetric(omega: f64, chi: f64, kappa: u32) -> f64 {
    let shift = omega - 0.5;
    (1.0 + chi * (shift * shift)) * (omega * (1.0 - omega)).powi(kappa as i32)
}

#[inline]
pub fn phi_asymmetric(omega: f64, chi: f64, kappa: u32) -> f64 {
    (1.0 + chi * omega) * (omega * (1.0 - omega)).powi(kappa as i32)
}

/// Outcome of the sampled admissibility check of a local operator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorReport {
    pub positive_interior: bool,
    pub vanishes_at_ends: bool,
    pub flat_at_ends: bool,
    /// `(n+1) phi - phi' (w - d) >= -1e-10` at every sample.
    pub monotone_condition: bool,
    /// Smallest sampled value of `(n+1) phi - phi' (w - d)`.
    pub worst_condition: f64,
}

impl OperatorReport {
    pub fn is_admissible(&self) -> bool {
        self.positive_interior && self.vanishes_at_ends && self.flat_at_ends && self.monotone_condition
    }
}

pub const DEFAULT_OPERATOR_SAMPLES: usize = 10_001;
pub const DEFAULT_DERIVATIVE_STEP: f64 = 1e-4;

const ENDPOINT_TOL: f64 = 1e-12;
const SLOPE_TOL: f64 = 1e-6;
const CONDITION_TOL: f64 = -1e-10;

/// Checks that `phi` can serve as the width operator of an adaptive map with
/// exponent `n` and optimal weight `d`, on a uniform sample of `[0, 1]`.
/// Derivatives are Richardson-extrapolated central differences of base step
/// `h` (fourth-order accurate), so `phi` is evaluated slightly outside
/// `[0, 1]` at the endpoints.
pub fn validate_local_operator<F: Fn(f64) -> f64>(
    phi: F,
    n: u32,
    d: f64,
) -> Result<OperatorReport, MappingError> {
    validate_local_operator_with(phi, n, d, DEFAULT_OPERATOR_SAMPLES, DEFAULT_DERIVATIVE_STEP)
}

pub fn validate_local_operator_with<F: Fn(f64) -> f64>(
    phi: F,
    n: u32,
    d: f64,
    samples: usize,
    h: f64,
) -> Result<OperatorReport, MappingError> {
    if samples < 3 || !(h > 0.0) {
        return Err(MappingError::InvalidParameter(
            "need at least 3 samples and a positive step".into(),
        ));
    }
    let eval = |w: f64| -> Result<f64, MappingError> {
        let v = phi(w);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(MappingError::NonFiniteSample { omega: w })
        }
    };
    let central = |w: f64, h: f64| -> Result<f64, MappingError> { Ok((eval(w + h)? - eval(w - h)?) / (2.0 * h)) };
    let slope = |w: f64| -> Result<f64, MappingError> { Ok((4.0 * central(w, 0.5 * h)? - central(w, h)?) / 3.0) };

    let mut positive_interior = true;
    let mut worst = f64::INFINITY;
    let np1 = f64::from(n + 1);
    for i in 0..samples {
        let w = i as f64 / (samples - 1) as f64;
        let v = eval(w)?;
        if i > 0 && i + 1 < samples && v <= 0.0 {
            positive_interior = false;
        }
        let cond = np1 * v - slope(w)? * (w - d);
        worst = worst.min(cond);
    }
    let vanishes_at_ends = eval(0.0)?.abs() <= ENDPOINT_TOL && eval(1.0)?.abs() <= ENDPOINT_TOL;
    let flat_at_ends = slope(0.0)?.abs() <= SLOPE_TOL && slope(1.0)?.abs() <= SLOPE_TOL;
    Ok(OperatorReport {
        positive_interior,
        vanishes_at_ends,
        flat_at_ends,
        monotone_condition: worst >= CONDITION_TOL,
        worst_condition: worst,
    })
}
