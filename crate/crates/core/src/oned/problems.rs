use std::f64::consts::PI;
use std::str::FromStr;

use super::grid::{Boundary1D, Field1D, Grid1D};
use crate::error::SolverError;

/// Half-width of the narrow Gaussian/ellipse triplets in case 5.
pub const CASE5_DELTA: f64 = 0.0005;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Problem1D {
    /// `sin(pi x)` on `[-1, 1]`.
    Case1,
    /// `sin(pi x - sin(pi x)/pi)` on `[-1, 1]`.
    Case2,
    /// Step: 1 on `[-1, 0)`, 0 on `[0, 1]`.
    Case3,
    /// `-sin(pi x) - x^3/2` with a unit jump at 0.
    Case4,
    /// Gaussian, square, triangle and ellipse pulses.
    Case5 { delta: f64 },
    Sod,
    /// Shock/entropy-wave interaction. `quiet_right` swaps the usual
    /// sinusoidal right state for the quiescent `(0.125, 0, 0.1)`.
    ShuOsher { quiet_right: bool },
}

impl FromStr for Problem1D {
    type Err = SolverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "1" | "case1" => Problem1D::Case1,
            "2" | "case2" => Problem1D::Case2,
            "3" | "case3" => Problem1D::Case3,
            "4" | "case4" => Problem1D::Case4,
            "5" | "case5" => Problem1D::Case5 { delta: CASE5_DELTA },
            "sod" => Problem1D::Sod,
            "shu-osher" | "shuosher" | "shu_osher" => Problem1D::ShuOsher { quiet_right: false },
            _ => return Err(SolverError::UnknownProblem(s.to_string())),
        })
    }
}

fn gauss(x: f64, beta: f64, z: f64) -> f64 {
    (-beta * (x - z) * (x - z)).exp()
}

fn ellipse(x: f64, alpha: f64, a: f64) -> f64 {
    (1.0 - alpha * alpha * (x - a) * (x - a)).max(0.0).sqrt()
}

/// Case 5 profile with triplet half-width `delta`.
pub fn case5_profile(x: f64, delta: f64) -> f64 {
    let z = -0.7;
    let beta = std::f64::consts::LN_2 / (36.0 * delta * delta);
    let (a, alpha) = (0.5, 10.0);
    if (-0.8..-0.6).contains(&x) {
        (gauss(x, beta, z - delta) + gauss(x, beta, z + delta) + 4.0 * gauss(x, beta, z)) / 6.0
    } else if (-0.4..-0.2).contains(&x) {
        1.0
    } else if (0.0..0.2).contains(&x) {
        1.0 - (10.0 * (x - 0.1)).abs()
    } else if (0.4..0.6).contains(&x) {
        (ellipse(x, alpha, a - delta) + ellipse(x, alpha, a + delta) + 4.0 * ellipse(x, alpha, a)) / 6.0
    } else {
        0.0
    }
}

impl Problem1D {
    pub fn is_euler(&self) -> bool {
        matches!(self, Problem1D::Sod | Problem1D::ShuOsher { .. })
    }

    pub fn domain(&self) -> (f64, f64) {
        match self {
            Problem1D::Sod => (0.0, 1.0),
            Problem1D::ShuOsher { .. } => (-5.0, 5.0),
            _ => (-1.0, 1.0),
        }
    }

    pub fn boundary(&self) -> Boundary1D {
        if self.is_euler() {
            Boundary1D::Transmissive
        } else {
            Boundary1D::Periodic
        }
    }

    pub fn default_end_time(&self) -> f64 {
        match self {
            Problem1D::Sod => 0.14,
            Problem1D::ShuOsher { .. } => 1.8,
            _ => 2.0,
        }
    }

    pub fn component_names(&self) -> &'static [&'static str] {
        if self.is_euler() {
            &["rho", "u", "p"]
        } else {
            &["u"]
        }
    }

    /// Scalar initial profile for the advection cases.
    pub fn advection_profile(&self, x: f64) -> Option<f64> {
        Some(match *self {
            Problem1D::Case1 => (PI * x).sin(),
            Problem1D::Case2 => (PI * x - (PI * x).sin() / PI).sin(),
            Problem1D::Case3 => {
                if x < 0.0 {
                    1.0
                } else {
                    0.0
                }
            }
            Problem1D::Case4 => {
                let base = -(PI * x).sin() - 0.5 * x * x * x;
                if x <= 0.0 {
                    base
                } else {
                    base + 1.0
                }
            }
            Problem1D::Case5 { delta } => case5_profile(x, delta),
            _ => return None,
        })
    }

    /// Primitive `(rho, u, p)` initial state for the Euler problems.
    pub fn euler_profile(&self, x: f64) -> Option<[f64; 3]> {
        Some(match *self {
            Problem1D::Sod => {
                if x <= 0.5 {
                    [0.125, 0.0, 0.1]
                } else {
                    [1.0, 0.0, 1.0]
                }
            }
            Problem1D::ShuOsher { quiet_right } => {
                if x < -4.0 {
                    [3.857143, 2.629369, 10.33333]
                } else if quiet_right {
                    [0.125, 0.0, 0.1]
                } else {
                    [1.0 + 0.2 * (5.0 * x).sin(), 0.0, 1.0]
                }
            }
            _ => return None,
        })
    }

    pub fn grid(&self, n_cells: usize) -> Result<Grid1D, SolverError> {
        let (a, b) = self.domain();
        Grid1D::new(n_cells, a, b)
    }

    /// Samples the initial condition at cell centres; Euler fields hold
    /// `(rho, rho*u, E)`.
    pub fn init(&self, grid: &Grid1D, gamma: f64) -> Field1D {
        let xs = grid.centres();
        if self.is_euler() {
            let mut comps = vec![Vec::with_capacity(xs.len()); 3];
            for &x in &xs {
                let [r, u, p] = self.euler_profile(x).expect("euler problem");
                comps[0].push(r);
                comps[1].push(r * u);
                comps[2].push(p / (gamma - 1.0) + 0.5 * r * u * u);
            }
            Field1D::from_interior(&comps)
        } else {
            Field1D::from_interior(&[xs.iter().map(|&x| self.advection_profile(x).unwrap()).collect()])
        }
    }

    /// Exact advection solution: the initial profile translated by `t` with
    /// periodic wrap. `None` for Euler problems.
    pub fn exact(&self, grid: &Grid1D, t: f64) -> Option<Vec<f64>> {
        if self.is_euler() {
            return None;
        }
        let len = grid.length();
        Some(
            grid.centres()
                .iter()
                .map(|&x| {
                    let shifted = (x - t - grid.x_min).rem_euclid(len) + grid.x_min;
                    self.advection_profile(shifted).unwrap()
                })
                .collect(),
        )
    }
}
