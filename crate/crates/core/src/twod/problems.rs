use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use super::boundary::{BoundarySet, Edge, DMR_POST, DMR_PRE, DMR_X0};
use super::grid::{Field2D, Grid2D};
use crate::error::SolverError;
use crate::euler::{conservative, State};

/// Vortex strength.
pub const VORTEX_BETA: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Problem2D {
    /// Isentropic vortex advected diagonally on a periodic square.
    Vortex,
    /// Four-quadrant Riemann problem. `jet_corner` selects the
    /// upper-right state `(1, 0.1, 1, 0.1)`; otherwise `(1, 0.1, 0.1, 1)`.
    Riemann { jet_corner: bool },
    /// Diamond of low-pressure gas in a reflecting box.
    Implosion,
    /// Mach 10 shock hitting a 30-degree wedge (as a straight wall).
    DoubleMach,
}

impl Problem2D {
    pub fn domain(&self) -> ((f64, f64), (f64, f64)) {
        match self {
            Problem2D::Vortex => ((0.0, 10.0), (0.0, 10.0)),
            Problem2D::Riemann { .. } => ((0.0, 1.0), (0.0, 1.0)),
            Problem2D::Implosion => ((-0.3, 0.3), (-0.3, 0.3)),
            Problem2D::DoubleMach => ((0.0, 4.0), (0.0, 1.0)),
        }
    }

    pub fn boundary(&self) -> BoundarySet {
        match self {
            Problem2D::Vortex => BoundarySet::uniform(Edge::Periodic),
            Problem2D::Riemann { .. } => BoundarySet::uniform(Edge::Extrapolation),
            Problem2D::Implosion => BoundarySet::uniform(Edge::Reflective),
            Problem2D::DoubleMach => BoundarySet {
                left: Edge::Inflow(DMR_POST),
                right: Edge::Extrapolation,
                bottom: Edge::DmrBottom,
                top: Edge::DmrTop,
            },
        }
    }

    pub fn default_end_time(&self) -> f64 {
        match self {
            Problem2D::Vortex => 100.0,
            Problem2D::Riemann { .. } => 0.8,
            Problem2D::Implosion => 2.5,
            Problem2D::DoubleMach => 0.2,
        }
    }

    /// Default resolution `(nx, ny)`.
    pub fn default_cells(&self) -> (usize, usize) {
        match self {
            Problem2D::Vortex => (100, 100),
            Problem2D::Riemann { .. } | Problem2D::Implosion => (400, 400),
            Problem2D::DoubleMach => (960, 240),
        }
    }

    pub fn grid(&self, nx: usize, ny: usize) -> Result<Grid2D, SolverError> {
        let (x, y) = self.domain();
        Grid2D::new(nx, ny, x, y)
    }

    /// Conservative initial state at a point.
    pub fn state_at(&self, x: f64, y: f64, gamma: f64) -> State {
        match *self {
            Problem2D::Vortex => {
                let [r, u, v, p] = vortex_primitive(x, y, gamma);
                conservative(r, u, v, p, gamma)
            }
            Problem2D::Riemann { jet_corner } => {
                let [r, u, v, p] = match (x >= 0.6, y >= 0.6) {
                    (true, true) if jet_corner => [1.0, 0.1, 1.0, 0.1],
                    (true, true) => [1.0, 0.1, 0.1, 1.0],
                    (false, true) => [0.5313, 0.8276, 0.0, 0.4],
                    (false, false) => [0.8, 0.1, 0.0, 0.4],
                    (true, false) => [0.5313, 0.1, 0.7276, 0.4],
                };
                conservative(r, u, v, p, gamma)
            }
            Problem2D::Implosion => {
                if x.abs() + y.abs() < 0.15 {
                    conservative(0.125, 0.0, 0.0, 0.14, gamma)
                } else {
                    conservative(1.0, 0.0, 0.0, 1.0, gamma)
                }
            }
            // Post-shock gas lies left of (above) the incident shock line,
            // consistent with the inflow and moving-shock boundaries.
            Problem2D::DoubleMach => {
                if y >= 3f64.sqrt() * (x - DMR_X0) {
                    DMR_POST
                } else {
                    DMR_PRE
                }
            }
        }
    }

    /// Samples the initial state at cell centres (ghosts left zero).
    pub fn init(&self, grid: &Grid2D, gamma: f64) -> Field2D {
        let mut q = Field2D::zeros(grid);
        for j in 0..grid.ny {
            for i in 0..grid.nx {
                q.set_cell(i, j, self.state_at(grid.x(i as isize), grid.y(j as isize), gamma));
            }
        }
        q
    }
}

/// Primitive `(rho, u, v, p)` of the vortex centred at `(5, 5)` on a unit
/// mean flow along the diagonal.
pub fn vortex_primitive(x: f64, y: f64, gamma: f64) -> [f64; 4] {
    let (xb, yb) = (x - 5.0, y - 5.0);
    let r2 = xb * xb + yb * yb;
    let b = VORTEX_BETA;
    let rho = (1.0 - (gamma - 1.0) * b * b / (8.0 * gamma * PI * PI) * (1.0 - r2).exp()).powf(1.0 / (gamma - 1.0));
    let swirl = b / (2.0 * PI) * ((1.0 - r2) / 2.0).exp();
    [rho, 1.0 - swirl * yb, 1.0 + swirl * xb, rho.powf(gamma)]
}

impl FromStr for Problem2D {
    type Err = SolverError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "vortex" => Ok(Problem2D::Vortex),
            "riemann" | "riemann2d" => Ok(Problem2D::Riemann { jet_corner: true }),
            "implosion" => Ok(Problem2D::Implosion),
            "dmr" | "double-mach" => Ok(Problem2D::DoubleMach),
            _ => Err(SolverError::UnknownProblem(s.to_string())),
        }
    }
}

impl fmt::Display for Problem2D {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem2D::Vortex => "vortex",
            Problem2D::Riemann { .. } => "riemann2d",
            Problem2D::Implosion => "implosion",
            Problem2D::DoubleMach => "dmr",
        })
    }
}
