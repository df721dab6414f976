//! Weight maps: classical (M, PM, IM, RM, AIM) and adaptive (AIMS, AIMA,
//! APMS, APMA, ARMS, ARMA).
//!
//! A [`MappingSpec`] names a map and its parameters. [`WeightMap`] is the
//! validated, precomputed form used inside the solvers: it maps each JS weight
//! with its own optimal weight `d_k` and renormalizes.

mod curve;
mod functions;
mod operator;

use std::fmt;
use std::str::FromStr;

pub use curve::{mapping_curve, write_curve_csv, CURVE_SAMPLES};
pub use functions::{
    adaptive_s_aim, adaptive_s_new, map_aim, map_aim_phi, map_apm, map_arm, map_im, map_m, map_pm,
    map_rm, rm_coefficients, AdaptiveContext,
};
pub use operator::{
    phi_asymmetric, phi_symmetric, validate_local_operator, validate_local_operator_with,
    LocalOperator, OperatorKind, OperatorReport,
};

use crate::error::MappingError;
use crate::reconstruction::{WeightTriple, OPTIMAL_WEIGHTS};
use functions::{map_arm_unchecked, map_rm_unchecked, pm_constants, polynomial};

/// Amplitude scale shared by the adaptive presets.
pub const PRESET_C: f64 = 1e4;
/// Local-operator parameter shared by the adaptive presets.
pub const PRESET_CHI: f64 = 100.0;
pub const PRESET_KAPPA: u32 = 2;

/// The nine schemes compared throughout the benchmarks.
pub const BENCH_SCHEMES: [&str; 9] = [
    "aim", "aims", "aima", "rm260", "arms", "arma", "pm6", "apms", "apma",
];

/// Every accepted scheme name.
pub const ALL_SCHEMES: [&str; 13] = [
    "js", "linear", "m", "im", "aim", "aims", "aima", "rm260", "arms", "arma", "pm6", "apms", "apma",
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MappingSpec {
    /// Unmapped Jiang–Shu weights.
    Js,
    /// Optimal weights everywhere: the linear fifth-order upwind scheme.
    Linear,
    M,
    Pm { n: u32 },
    Im { n: u32, a: f64 },
    Rm { m: u32, n: u32, tau: u32 },
    Aim { n: u32, m: u32, c: f64 },
    AimPhi { n: u32, c: f64, op: LocalOperator },
    Apm { n: u32, c: f64, op: LocalOperator },
    Arm { m: u32, n: u32, tau: u32, c: f64, op: LocalOperator },
}

fn even_positive(n: u32, what: &str) -> Result<(), MappingError> {
    if n >= 2 && n % 2 == 0 {
        Ok(())
    } else {
        Err(MappingError::InvalidParameter(format!("{what} needs a positive even n, got {n}")))
    }
}

fn amplitude(c: f64) -> Result<(), MappingError> {
    if c.is_finite() && c >= 0.0 {
        Ok(())
    } else {
        Err(MappingError::InvalidParameter(format!("amplitude c must be >= 0, got {c}")))
    }
}

fn rm_params(m: u32, n: u32, tau: u32) -> Result<(), MappingError> {
    if m > n || tau > 1 {
        Err(MappingError::InvalidParameter(format!(
            "RM needs m <= n and tau in {{0, 1}}, got ({m}, {n}, {tau})"
        )))
    } else {
        Ok(())
    }
}

impl MappingSpec {
    pub fn validate(&self) -> Result<(), MappingError> {
        match *self {
            MappingSpec::Js | MappingSpec::Linear | MappingSpec::M => Ok(()),
            MappingSpec::Pm { n } => even_positive(n, "PM"),
            MappingSpec::Im { n, a } => {
                even_positive(n, "IM")?;
                if a > 0.0 && a.is_finite() {
                    Ok(())
                } else {
                    Err(MappingError::InvalidParameter(format!("IM needs A > 0, got {a}")))
                }
            }
            MappingSpec::Rm { m, n, tau } => rm_params(m, n, tau),
            MappingSpec::Aim { n, m, c } => {
                even_positive(n, "AIM")?;
                if m < 1 {
                    return Err(MappingError::InvalidParameter("AIM needs m >= 1".into()));
                }
                amplitude(c)
            }
            MappingSpec::AimPhi { n, c, op } | MappingSpec::Apm { n, c, op } => {
                even_positive(n, "adaptive map")?;
                amplitude(c)?;
                LocalOperator::new(op.kind, op.chi, op.kappa).map(|_| ())
            }
            MappingSpec::Arm { m, n, tau, c, op } => {
                rm_params(m, n, tau)?;
                amplitude(c)?;
                LocalOperator::new(op.kind, op.chi, op.kappa).map(|_| ())
            }
        }
    }

    /// Looks up a named preset (case-insensitive).
    pub fn preset(name: &str) -> Result<Self, MappingError> {
        let sym = LocalOperator::symmetric(PRESET_CHI, PRESET_KAPPA)?;
        let asym = LocalOperator::asymmetric(PRESET_CHI, PRESET_KAPPA)?;
        let spec = match name.to_ascii_lowercase().as_str() {
            "js" => MappingSpec::Js,
            "linear" | "upwind" => MappingSpec::Linear,
            "m" => MappingSpec::M,
            "im" => MappingSpec::Im { n: 2, a: 0.1 },
            "pm6" => MappingSpec::Pm { n: 6 },
            "rm260" => MappingSpec::Rm { m: 2, n: 6, tau: 0 },
            "aim" => MappingSpec::Aim { n: 4, m: 2, c: PRESET_C },
            "aims" => MappingSpec::AimPhi { n: 4, c: PRESET_C, op: sym },
            "aima" => MappingSpec::AimPhi { n: 4, c: PRESET_C, op: asym },
            "apms" => MappingSpec::Apm { n: 6, c: PRESET_C, op: sym },
            "apma" => MappingSpec::Apm { n: 6, c: PRESET_C, op: asym },
            "arms" => MappingSpec::Arm { m: 2, n: 6, tau: 0, c: PRESET_C, op: sym },
            "arma" => MappingSpec::Arm { m: 2, n: 6, tau: 0, c: PRESET_C, op: asym },
            _ => return Err(MappingError::UnknownScheme(name.to_string())),
        };
        Ok(spec)
    }

    /// Replaces the local-operator parameter `chi`; a no-op for kinds without one.
    pub fn with_chi(self, chi: f64) -> Result<Self, MappingError> {
        Ok(match self {
            MappingSpec::AimPhi { n, c, op } => MappingSpec::AimPhi { n, c, op: op.with_chi(chi)? },
            MappingSpec::Apm { n, c, op } => MappingSpec::Apm { n, c, op: op.with_chi(chi)? },
            MappingSpec::Arm { m, n, tau, c, op } => MappingSpec::Arm { m, n, tau, c, op: op.with_chi(chi)? },
            other => other,
        })
    }

    /// Replaces the amplitude scale `c`; a no-op for non-adaptive kinds.
    pub fn with_c(self, c: f64) -> Result<Self, MappingError> {
        amplitude(c)?;
        Ok(match self {
            MappingSpec::Aim { n, m, .. } => MappingSpec::Aim { n, m, c },
            MappingSpec::AimPhi { n, op, .. } => MappingSpec::AimPhi { n, c, op },
            MappingSpec::Apm { n, op, .. } => MappingSpec::Apm { n, c, op },
            MappingSpec::Arm { m, n, tau, op, .. } => MappingSpec::Arm { m, n, tau, c, op },
            other => other,
        })
    }

    pub fn is_adaptive(&self) -> bool {
        matches!(
            self,
            MappingSpec::Aim { .. } | MappingSpec::AimPhi { .. } | MappingSpec::Apm { .. } | MappingSpec::Arm { .. }
        )
    }

    /// Exponent `n` governing the contact order `|g(d+h) - d| = O(h^{n+1})`.
    /// `None` for JS and the linear scheme, which have no contact.
    pub fn contact_exponent(&self) -> Option<u32> {
        match *self {
            MappingSpec::Js | MappingSpec::Linear => None,
            MappingSpec::M => Some(2),
            MappingSpec::Pm { n }
            | MappingSpec::Im { n, .. }
            | MappingSpec::Rm { n, .. }
            | MappingSpec::Aim { n, .. }
            | MappingSpec::AimPhi { n, .. }
            | MappingSpec::Apm { n, .. }
            | MappingSpec::Arm { n, .. } => Some(n),
        }
    }

    /// Evaluates `g(omega; d)` with an explicit amplitude `s` (ignored by
    /// non-adaptive kinds).
    pub fn evaluate(&self, omega: f64, d: f64, s: f64) -> Result<f64, MappingError> {
        self.validate()?;
        Ok(match *self {
            MappingSpec::Js | MappingSpec::Linear => omega,
            MappingSpec::M => map_m(omega, d),
            MappingSpec::Pm { n } => map_pm(omega, d, n),
            MappingSpec::Im { n, a } => map_im(omega, d, n, a),
            MappingSpec::Rm { m, n, tau } => map_rm(omega, d, &rm_coefficients(d, m, n, tau)?, n)?,
            MappingSpec::Aim { n, m, .. } => map_aim(omega, d, n, m, s),
            MappingSpec::AimPhi { n, op, .. } => map_aim_phi(omega, d, n, s, &op),
            MappingSpec::Apm { n, op, .. } => map_apm(omega, d, n, s, &op),
            MappingSpec::Arm { m, n, tau, op, .. } => {
                map_arm(omega, d, &rm_coefficients(d, m, n, tau)?, n, s, &op)?
            }
        })
    }

    /// Every map with contact can be written `g = d + (w-d)^{n+1} / D(w)`;
    /// this returns `g - d` through that form, which keeps full relative
    /// precision where `g` itself rounds to `d`. `None` for JS and linear.
    pub fn deviation(&self, omega: f64, d: f64, s: f64) -> Result<Option<f64>, MappingError> {
        self.validate()?;
        let Some(n) = self.contact_exponent() else {
            return Ok(None);
        };
        let dev = omega - d;
        let dev_n = dev.powi(n as i32);
        let pm_den = |n| {
            let (c1, c2) = pm_constants(omega, d, n);
            1.0 / (c1 * (omega + c2))
        };
        let den = match *self {
            MappingSpec::Js | MappingSpec::Linear => unreachable!("no contact"),
            MappingSpec::M => d * d + omega * (1.0 - 2.0 * d),
            MappingSpec::Pm { n } => pm_den(n),
            MappingSpec::Im { a, .. } => dev_n + omega * (1.0 - omega) / a,
            MappingSpec::Rm { m, n, tau } => polynomial(&rm_coefficients(d, m, n, tau)?, omega),
            MappingSpec::Aim { m, .. } => dev_n + s * (omega * (1.0 - omega)).powi(m as i32),
            MappingSpec::AimPhi { op, .. } => dev_n + s * op.eval(omega),
            MappingSpec::Apm { n, op, .. } => pm_den(n) + s * op.eval(omega),
            MappingSpec::Arm { m, n, tau, op, .. } => {
                polynomial(&rm_coefficients(d, m, n, tau)?, omega) + s * op.eval(omega)
            }
        };
        Ok(Some(if dev == 0.0 { 0.0 } else { dev_n * dev / den }))
    }

    /// The adaptive amplitude this kind derives from `ctx` for optimal weight `d`.
    pub fn amplitude(&self, ctx: &AdaptiveContext, d: f64) -> f64 {
        match *self {
            MappingSpec::Aim { c, .. } | MappingSpec::AimPhi { c, .. } => adaptive_s_aim(ctx, d, c),
            MappingSpec::Apm { c, .. } | MappingSpec::Arm { c, .. } => adaptive_s_new(ctx, d, c),
            _ => 0.0,
        }
    }

    /// Short label, matching the preset name when the parameters are the
    /// preset ones.
    pub fn label(&self) -> String {
        let op_tag = |op: &LocalOperator| match op.kind {
            OperatorKind::Symmetric => 's',
            OperatorKind::Asymmetric => 'a',
        };
        match self {
            MappingSpec::Js => "js".into(),
            MappingSpec::Linear => "linear".into(),
            MappingSpec::M => "m".into(),
            MappingSpec::Pm { n } => format!("pm{n}"),
            MappingSpec::Im { n, a } => format!("im({n},{a})"),
            MappingSpec::Rm { m, n, tau } => format!("rm{m}{n}{tau}"),
            MappingSpec::Aim { .. } => "aim".into(),
            MappingSpec::AimPhi { op, .. } => format!("aim{}", op_tag(op)),
            MappingSpec::Apm { op, .. } => format!("apm{}", op_tag(op)),
            MappingSpec::Arm { op, .. } => format!("arm{}", op_tag(op)),
        }
    }
}

impl FromStr for MappingSpec {
    type Err = MappingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MappingSpec::preset(s)
    }
}

impl fmt::Display for MappingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A validated map with per-`d_k` constants precomputed.
#[derive(Debug, Clone)]
pub struct WeightMap {
    spec: MappingSpec,
    rm: Option<[Vec<f64>; 3]>,
}

impl WeightMap {
    pub fn new(spec: MappingSpec) -> Result<Self, MappingError> {
        spec.validate()?;
        let rm = match spec {
            MappingSpec::Rm { m, n, tau } | MappingSpec::Arm { m, n, tau, .. } => Some([
                rm_coefficients(OPTIMAL_WEIGHTS[0], m, n, tau)?,
                rm_coefficients(OPTIMAL_WEIGHTS[1], m, n, tau)?,
                rm_coefficients(OPTIMAL_WEIGHTS[2], m, n, tau)?,
            ]),
            _ => None,
        };
        Ok(Self { spec, rm })
    }

    pub fn spec(&self) -> &MappingSpec {
        &self.spec
    }

    /// False only for the linear scheme, which skips the JS weights entirely.
    #[inline]
    pub fn uses_js_weights(&self) -> bool {
        !matches!(self.spec, MappingSpec::Linear)
    }

    #[inline]
    fn map_component(&self, k: usize, omega: f64, ctx: &AdaptiveContext) -> f64 {
        let d = OPTIMAL_WEIGHTS[k];
        match self.spec {
            MappingSpec::Js => omega,
            MappingSpec::Linear => d,
            MappingSpec::M => map_m(omega, d),
            MappingSpec::Pm { n } => map_pm(omega, d, n),
            MappingSpec::Im { n, a } => map_im(omega, d, n, a),
            MappingSpec::Rm { n, .. } => map_rm_unchecked(omega, d, self.rm_coeffs(k), n),
            MappingSpec::Aim { n, m, c } => map_aim(omega, d, n, m, adaptive_s_aim(ctx, d, c)),
            MappingSpec::AimPhi { n, c, op } => map_aim_phi(omega, d, n, adaptive_s_aim(ctx, d, c), &op),
            MappingSpec::Apm { n, c, op } => map_apm(omega, d, n, adaptive_s_new(ctx, d, c), &op),
            MappingSpec::Arm { n, c, op, .. } => {
                map_arm_unchecked(omega, d, self.rm_coeffs(k), n, adaptive_s_new(ctx, d, c), &op)
            }
        }
    }

    #[inline]
    fn rm_coeffs(&self, k: usize) -> &[f64] {
        match &self.rm {
            Some(table) => &table[k],
            None => &[],
        }
    }

    /// Maps each weight with its own `d_k` and renormalizes.
    #[inline]
    pub fn apply(&self, omega: &WeightTriple, ctx: &AdaptiveContext) -> WeightTriple {
        match self.spec {
            MappingSpec::Js => *omega,
            MappingSpec::Linear => WeightTriple::OPTIMAL,
            _ => WeightTriple::normalized([
                self.map_component(0, omega.0[0], ctx),
                self.map_component(1, omega.0[1], ctx),
                self.map_component(2, omega.0[2], ctx),
            ]),
        }
    }
}

/// One-shot form of [`WeightMap::apply`]. `ctx` is only read by adaptive kinds.
pub fn apply_mapping(
    omega: &WeightTriple,
    spec: &MappingSpec,
    ctx: &AdaptiveContext,
) -> Result<WeightTriple, MappingError> {
    Ok(WeightMap::new(*spec)?.apply(omega, ctx))
}
