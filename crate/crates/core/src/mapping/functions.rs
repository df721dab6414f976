//! Scalar mapping functions `g(omega; d, ...)`.
//!
//! Every map fixes `0`, `d` and `1`. Rational maps have a removable
//! singularity at `omega == d` and return `d` there directly.

use super::operator::LocalOperator;
use crate::error::MappingError;
use crate::reconstruction::SmoothnessTriple;

/// Local data feeding the adaptive amplitude `s`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdaptiveContext {
    pub beta_min: f64,
    pub beta_max: f64,
    pub dx: f64,
}

impl AdaptiveContext {
    pub fn new(beta_min: f64, beta_max: f64, dx: f64) -> Result<Self, MappingError> {
        if !(beta_min >= 0.0 && beta_min <= beta_max && beta_max.is_finite()) {
            return Err(MappingError::InvalidParameter(format!(
                "need 0 <= beta_min <= beta_max, got {beta_min}, {beta_max}"
            )));
        }
        if !(dx > 0.0 && dx.is_finite()) {
            return Err(MappingError::InvalidParameter(format!("dx must be positive, got {dx}")));
        }
        Ok(Self { beta_min, beta_max, dx })
    }

    #[inline]
    pub fn from_indicators(beta: &SmoothnessTriple, dx: f64) -> Self {
        Self {
            beta_min: beta.min(),
            beta_max: beta.max(),
            dx,
        }
    }

    /// `min(beta) / (max(beta) + dx^5)`
    #[inline]
    pub fn lambda(&self) -> f64 {
        self.beta_min / (self.beta_max + self.dx.powi(5))
    }
}

/// Amplitude for AIM and its generalizations: `c / d * lambda`.
#[inline]
pub fn adaptive_s_aim(ctx: &AdaptiveContext, d: f64, c: f64) -> f64 {
    c / d * ctx.lambda()
}

/// Amplitude for the adaptive PM and RM maps: `c * d * lambda`.
#[inline]
pub fn adaptive_s_new(ctx: &AdaptiveContext, d: f64, c: f64) -> f64 {
    c * d * ctx.lambda()
}

#[inline]
pub fn map_m(omega: f64, d: f64) -> f64 {
    omega * (d + d * d - 3.0 * d * omega + omega * omega) / (d * d + omega * (1.0 - 2.0 * d))
}

/// Branch constants `(c1, c2)` of the piecewise polynomial map.
#[inline]
pub(crate) fn pm_constants(omega: f64, d: f64, n: u32) -> (f64, f64) {
    let np1 = f64::from(n + 1);
    if omega <= d {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        (sign * np1 / d.powi(n as i32 + 1), d / np1)
    } else {
        (-np1 / (1.0 - d).powi(n as i32 + 1), (d - f64::from(n + 2)) / np1)
    }
}

#[inline]
pub fn map_pm(omega: f64, d: f64, n: u32) -> f64 {
    let (c1, c2) = pm_constants(omega, d, n);
    c1 * (omega - d).powi(n as i32 + 1) * (omega + c2) + d
}

#[inline]
pub fn map_im(omega: f64, d: f64, n: u32, a: f64) -> f64 {
    if omega == d {
        return d;
    }
    let dev = omega - d;
    let dev_n = dev.powi(n as i32);
    d + dev_n * dev * a / (dev_n * a + omega * (1.0 - omega))
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * f64::from(n - i) / f64::from(i + 1))
}

/// Denominator coefficients `a_0 .. a_{m+tau+1}` of the rational map.
pub fn rm_coefficients(d: f64, m: u32, n: u32, tau: u32) -> Result<Vec<f64>, MappingError> {
    if m > n {
        return Err(MappingError::InvalidParameter(format!("RM needs m <= n, got m={m}, n={n}")));
    }
    if tau > 1 {
        return Err(MappingError::InvalidParameter(format!("RM needs tau in {{0, 1}}, got {tau}")));
    }
    let mut a: Vec<f64> = (0..=m)
        .map(|i| binomial(n + 1, i) * (-d).powi((n - i) as i32))
        .collect();
    let head: f64 = a.iter().sum();
    let tail = (1.0 - d).powi(n as i32) - head;
    if tau == 0 {
        a.push(tail);
    } else {
        let weighted: f64 = a.iter().enumerate().map(|(i, ai)| i as f64 * ai).sum();
        let slope = f64::from(n + 1) * (1.0 - d).powi(n as i32 - 1);
        a.push(f64::from(m + 2) * tail + weighted - slope);
        a.push(slope - weighted - f64::from(m + 1) * tail);
    }
    Ok(a)
}

#[inline]
pub(crate) fn polynomial(coeffs: &[f64], omega: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, a| acc * omega + a)
}

const DEGENERATE: f64 = 1e-300;

pub fn map_rm(omega: f64, d: f64, coeffs: &[f64], n: u32) -> Result<f64, MappingError> {
    if omega == d {
        return Ok(d);
    }
    let den = polynomial(coeffs, omega);
    if den.abs() < DEGENERATE {
        return Err(MappingError::DegenerateDenominator { omega, value: den });
    }
    Ok(d + (omega - d).powi(n as i32 + 1) / den)
}

#[inline]
pub fn map_aim(omega: f64, d: f64, n: u32, m: u32, s: f64) -> f64 {
    if omega == d {
        return d;
    }
    let width = (omega * (1.0 - omega)).powi(m as i32);
    rational(omega, d, n, s * width)
}

#[inline]
pub fn map_aim_phi(omega: f64, d: f64, n: u32, s: f64, phi: &LocalOperator) -> f64 {
    if omega == d {
        return d;
    }
    rational(omega, d, n, s * phi.eval(omega))
}

/// `d + (w-d)^{n+1} / ((w-d)^n + extra)`
#[inline(always)]
fn rational(omega: f64, d: f64, n: u32, extra: f64) -> f64 {
    let dev = omega - d;
    let dev_n = dev.powi(n as i32);
    let den = dev_n + extra;
    if den == 0.0 {
        // both terms underflowed
        return d;
    }
    d + dev_n * dev / den
}

#[inline]
pub fn map_apm(omega: f64, d: f64, n: u32, s: f64, phi: &LocalOperator) -> f64 {
    if omega == d {
        return d;
    }
    // d + (w-d)^{n+1} / (1/k + s*phi) with k = c1 (w + c2), arranged so
    // that s = 0 reproduces map_pm bit for bit
    let (c1, c2) = pm_constants(omega, d, n);
    let pm = c1 * (omega - d).powi(n as i32 + 1) * (omega + c2);
    pm / (1.0 + s * phi.eval(omega) * (c1 * (omega + c2))) + d
}

pub fn map_arm(
    omega: f64,
    d: f64,
    coeffs: &[f64],
    n: u32,
    s: f64,
    phi: &LocalOperator,
) -> Result<f64, MappingError> {
    if omega == d {
        return Ok(d);
    }
    let den = polynomial(coeffs, omega) + s * phi.eval(omega);
    if den.abs() < DEGENERATE {
        return Err(MappingError::DegenerateDenominator { omega, value: den });
    }
    Ok(d + (omega - d).powi(n as i32 + 1) / den)
}

#[inline]
pub(crate) fn map_arm_unchecked(omega: f64, d: f64, coeffs: &[f64], n: u32, s: f64, phi: &LocalOperator) -> f64 {
    if omega == d {
        return d;
    }
    let den = polynomial(coeffs, omega) + s * phi.eval(omega);
    d + (omega - d).powi(n as i32 + 1) / den
}

#[inline]
pub(crate) fn map_rm_unchecked(omega: f64, d: f64, coeffs: &[f64], n: u32) -> f64 {
    if omega == d {
        return d;
    }
    d + (omega - d).powi(n as i32 + 1) / polynomial(coeffs, omega)
}
