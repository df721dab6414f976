//! Five-point WENO reconstruction of an interface flux.
//!
//! A window holds `f[j-2..=j+2]` and yields the left-biased value at
//! `x_{j+1/2}`. The right-biased value is obtained by reversing the window;
//! there is no second coefficient set.

use thiserror::Error;

use crate::mapping::{AdaptiveContext, WeightMap};

/// Linear weights that recover the fifth-order upstream scheme.
pub const OPTIMAL_WEIGHTS: [f64; 3] = [0.1, 0.6, 0.3];

/// Regularization added to each smoothness indicator before squaring.
pub const JS_EPSILON: f64 = 1e-40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("stencil window contains a non-finite value")]
pub struct NonFiniteWindow;

/// Five consecutive point values `(f_{j-2}, ..., f_{j+2})`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StencilWindow([f64; 5]);

impl StencilWindow {
    pub fn new(values: [f64; 5]) -> Result<Self, NonFiniteWindow> {
        if values.iter().all(|v| v.is_finite()) {
            Ok(Self(values))
        } else {
            Err(NonFiniteWindow)
        }
    }

    /// Solver-internal constructor; finiteness is checked on the field instead.
    #[inline(always)]
    pub(crate) fn from_raw(values: [f64; 5]) -> Self {
        Self(values)
    }

    pub fn values(&self) -> &[f64; 5] {
        &self.0
    }

    /// `(f_{j+2}, ..., f_{j-2})`: the window seen by the opposite wind direction.
    pub fn reversed(&self) -> Self {
        let [a, b, c, d, e] = self.0;
        Self([e, d, c, b, a])
    }
}

/// Smoothness indicators `(beta_0, beta_1, beta_2)` of the three substencils.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothnessTriple(pub [f64; 3]);

impl SmoothnessTriple {
    pub fn min(&self) -> f64 {
        self.0[0].min(self.0[1]).min(self.0[2])
    }

    pub fn max(&self) -> f64 {
        self.0[0].max(self.0[1]).max(self.0[2])
    }
}

/// Convex weights over the three substencils.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WeightTriple(pub [f64; 3]);

impl WeightTriple {
    pub const OPTIMAL: WeightTriple = WeightTriple(OPTIMAL_WEIGHTS);

    /// Rescales nonnegative entries to sum to one.
    pub fn normalized(raw: [f64; 3]) -> Self {
        let sum = raw[0] + raw[1] + raw[2];
        Self([raw[0] / sum, raw[1] / sum, raw[2] / sum])
    }

    pub fn sum(&self) -> f64 {
        self.0[0] + self.0[1] + self.0[2]
    }

    /// Sum within `1e-12` of one and every entry in `[0, 1]`.
    pub fn is_convex(&self) -> bool {
        (self.sum() - 1.0).abs() <= 1e-12 && self.0.iter().all(|w| (0.0..=1.0).contains(w))
    }
}

/// Third-order candidate values `(q_0, q_1, q_2)` at `x_{j+1/2}`.
#[inline]
pub fn candidate_fluxes(w: &StencilWindow) -> [f64; 3] {
    let [fm2, fm1, f0, fp1, fp2] = w.0;
    [
        (2.0 * fm2 - 7.0 * fm1 + 11.0 * f0) / 6.0,
        (-fm1 + 5.0 * f0 + 2.0 * fp1) / 6.0,
        (2.0 * f0 + 5.0 * fp1 - fp2) / 6.0,
    ]
}

#[inline]
pub fn smoothness_indicators(w: &StencilWindow) -> SmoothnessTriple {
    let [fm2, fm1, f0, fp1, fp2] = w.0;
    let c = 13.0 / 12.0;
    // Written in first differences so a constant window gives exact zeros and
    // b0/b2 are exact mirror images (reversing the window swaps them).
    let (dl1, dl2) = (f0 - fm1, fm1 - fm2);
    let (dr1, dr2) = (f0 - fp1, fp1 - fp2);
    let b0 = c * (dl1 - dl2).powi(2) + 0.25 * (3.0 * dl1 - dl2).powi(2);
    let b1 = c * ((fm1 + fp1) - 2.0 * f0).powi(2) + 0.25 * (fm1 - fp1).powi(2);
    let b2 = c * (dr1 - dr2).powi(2) + 0.25 * (3.0 * dr1 - dr2).powi(2);
    SmoothnessTriple([b0, b1, b2])
}

/// Jiang–Shu weights `alpha_k = d_k / (beta_k + eps)^2`, normalized.
#[inline]
pub fn js_weights(beta: &SmoothnessTriple, eps: f64) -> WeightTriple {
    let alpha = [
        OPTIMAL_WEIGHTS[0] / (beta.0[0] + eps).powi(2),
        OPTIMAL_WEIGHTS[1] / (beta.0[1] + eps).powi(2),
        OPTIMAL_WEIGHTS[2] / (beta.0[2] + eps).powi(2),
    ];
    WeightTriple::normalized(alpha)
}

#[inline]
pub fn reconstruct_interface(w: &StencilWindow, omega: &WeightTriple) -> f64 {
    let q = candidate_fluxes(w);
    omega.0[0] * q[0] + omega.0[1] * q[1] + omega.0[2] * q[2]
}

/// Full left-biased WENO value for one window: indicators, JS weights, the
/// configured weight map, and the convex combination.
#[inline]
pub fn weno5(w: &StencilWindow, map: &WeightMap, dx: f64) -> f64 {
    let beta = smoothness_indicators(w);
    let omega = if map.uses_js_weights() {
        let js = js_weights(&beta, JS_EPSILON);
        let ctx = AdaptiveContext::from_indicators(&beta, dx);
        map.apply(&js, &ctx)
    } else {
        WeightTriple::OPTIMAL
    };
    reconstruct_interface(w, &omega)
}
