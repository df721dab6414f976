//! Ideal-gas Euler relations and the characteristic-wise, Lax–Friedrichs-split
//! WENO flux along one grid line.
//!
//! States are `[rho, rho*u, rho*v, E]` with `u` the velocity along the line.
//! The 1D solver embeds its states with `rho*v = 0`; the 2D y-sweep swaps the
//! two momenta before calling in, so every direction runs the same code.
//! Every formula is written so that flipping the sign of `u` flips signs of
//! products exactly; mirrored data therefore gives bitwise mirrored fluxes.

use crate::error::SolverError;
use crate::mapping::WeightMap;
use crate::reconstruction::{weno5, StencilWindow};

pub const GAMMA: f64 = 1.4;

pub type State = [f64; 4];

#[inline]
pub fn pressure(q: &State, gamma: f64) -> f64 {
    let kinetic = 0.5 * (q[1] * q[1] + q[2] * q[2]) / q[0];
    (gamma - 1.0) * (q[3] - kinetic)
}

#[inline]
pub fn sound_speed(rho: f64, p: f64, gamma: f64) -> f64 {
    (gamma * p / rho).sqrt()
}

/// Conservative state from `(rho, u, v, p)`.
#[inline]
pub fn conservative(rho: f64, u: f64, v: f64, p: f64, gamma: f64) -> State {
    [rho, rho * u, rho * v, p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v)]
}

/// `(rho, u, v, p)` from a conservative state.
#[inline]
pub fn primitive(q: &State, gamma: f64) -> [f64; 4] {
    [q[0], q[1] / q[0], q[2] / q[0], pressure(q, gamma)]
}

/// Flux along the line direction.
#[inline]
pub fn flux(q: &State, gamma: f64) -> State {
    let u = q[1] / q[0];
    let p = pressure(q, gamma);
    [q[1], q[1] * u + p, q[2] * u, u * (q[3] + p)]
}

/// `|u| + c` along the line direction.
#[inline]
pub fn wave_speed(q: &State, gamma: f64) -> f64 {
    (q[1] / q[0]).abs() + sound_speed(q[0], pressure(q, gamma), gamma)
}

/// Errors unless `rho > 0` and `p > 0` (NaN fails both).
#[inline]
pub fn check_admissible(q: &State, gamma: f64, cell: usize) -> Result<(), SolverError> {
    let p = pressure(q, gamma);
    if q[0] > 0.0 && p > 0.0 {
        Ok(())
    } else if q.iter().any(|v| !v.is_finite()) {
        let component = q.iter().position(|v| !v.is_finite()).unwrap_or(0);
        Err(SolverError::NonFinite { component, cell, step: 0 })
    } else {
        Err(SolverError::Positivity { cell, rho: q[0], pressure: p, step: 0 })
    }
}

/// Left (rows) and right (columns) eigenvectors of the flux Jacobian.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSystem {
    pub left: [[f64; 4]; 4],
    pub right: [[f64; 4]; 4],
}

impl EigenSystem {
    /// Eigenvectors at velocity `(u, v)`, enthalpy `h` and sound speed `c`.
    pub fn new(u: f64, v: f64, h: f64, c: f64, gamma: f64) -> Self {
        let q2 = u * u + v * v;
        let b1 = (gamma - 1.0) / (c * c);
        let b2 = 0.5 * b1 * q2;
        let uc = u / c;
        let ic = 1.0 / c;
        let b1u = b1 * u;
        let b1v = b1 * v;
        let hu = u * c;
        let left = [
            [0.5 * (b2 + uc), -0.5 * (b1u + ic), -0.5 * b1v, 0.5 * b1],
            [1.0 - b2, b1u, b1v, -b1],
            [-v, 0.0, 1.0, 0.0],
            [0.5 * (b2 - uc), -0.5 * (b1u - ic), -0.5 * b1v, 0.5 * b1],
        ];
        // columns: u-c, u (entropy), u (shear), u+c
        let right = [
            [1.0, 1.0, 0.0, 1.0],
            [u - c, u, 0.0, u + c],
            [v, v, 1.0, v],
            [h - hu, 0.5 * q2, v, h + hu],
        ];
        Self { left, right }
    }

    /// Roe-averaged system between two admissible states.
    pub fn roe(a: &State, b: &State, gamma: f64) -> Self {
        let ra = a[0].sqrt();
        let rb = b[0].sqrt();
        let w = ra + rb;
        let u = (a[1] / ra + b[1] / rb) / w;
        let v = (a[2] / ra + b[2] / rb) / w;
        let ha = (a[3] + pressure(a, gamma)) / ra;
        let hb = (b[3] + pressure(b, gamma)) / rb;
        let h = (ha + hb) / w;
        let c2 = (gamma - 1.0) * (h - 0.5 * (u * u + v * v));
        Self::new(u, v, h, c2.sqrt(), gamma)
    }
}

#[inline(always)]
fn dot(row: &[f64; 4], x: &State) -> f64 {
    row[0] * x[0] + row[1] * x[1] + row[2] * x[2] + row[3] * x[3]
}

/// Scratch buffers reused across lines.
#[derive(Debug, Default, Clone)]
pub struct LineScratch {
    fp: Vec<State>,
    fm: Vec<State>,
    iface: Vec<State>,
}

/// Largest `|u| + c` over `states`.
pub fn max_wave_speed<'a, I: IntoIterator<Item = &'a State>>(states: I, gamma: f64) -> f64 {
    states.into_iter().fold(0.0, |m, q| m.max(wave_speed(q, gamma)))
}

/// Flux-difference increment `-(F_{i+1/2} - F_{i-1/2}) / dx` for the
/// interior cells of one padded line (`ghost` cells on each side).
///
/// `alpha` is the global splitting speed; `out` receives `line.len() - 2*ghost`
/// increments.
pub fn line_rhs(
    line: &[State],
    ghost: usize,
    gamma: f64,
    alpha: f64,
    map: &WeightMap,
    dx: f64,
    scratch: &mut LineScratch,
    out: &mut [State],
) {
    let len = line.len();
    let n = len - 2 * ghost;
    debug_assert!(ghost >= 3 && out.len() == n);

    scratch.fp.clear();
    scratch.fm.clear();
    for q in line {
        let f = flux(q, gamma);
        let mut p = [0.0; 4];
        let mut m = [0.0; 4];
        for c in 0..4 {
            let aq = alpha * q[c];
            p[c] = 0.5 * (f[c] + aq);
            m[c] = 0.5 * (f[c] - aq);
        }
        scratch.fp.push(p);
        scratch.fm.push(m);
    }

    // interface k sits between cells ghost-1+k and ghost+k
    scratch.iface.clear();
    for k in 0..=n {
        let j = ghost - 1 + k;
        let eig = EigenSystem::roe(&line[j], &line[j + 1], gamma);
        let mut hat = [0.0; 4];
        for (f, row) in eig.left.iter().enumerate() {
            let wp = [
                dot(row, &scratch.fp[j - 2]),
                dot(row, &scratch.fp[j - 1]),
                dot(row, &scratch.fp[j]),
                dot(row, &scratch.fp[j + 1]),
                dot(row, &scratch.fp[j + 2]),
            ];
            let wm = [
                dot(row, &scratch.fm[j + 3]),
                dot(row, &scratch.fm[j + 2]),
                dot(row, &scratch.fm[j + 1]),
                dot(row, &scratch.fm[j]),
                dot(row, &scratch.fm[j - 1]),
            ];
            hat[f] = weno5(&StencilWindow::from_raw(wp), map, dx)
                + weno5(&StencilWindow::from_raw(wm), map, dx);
        }
        let r = &eig.right;
        scratch.iface.push([dot(&r[0], &hat), dot(&r[1], &hat), dot(&r[2], &hat), dot(&r[3], &hat)]);
    }

    for (i, o) in out.iter_mut().enumerate() {
        let (a, b) = (&scratch.iface[i], &scratch.iface[i + 1]);
        for c in 0..4 {
            o[c] = -(b[c] - a[c]) / dx;
        }
    }
}
