use super::grid::{Field2D, Grid2D};
use crate::error::SolverError;
use crate::euler::State;
use crate::oned::GHOST;

/// Post-shock state of the Mach 10 double Mach reflection, conservative.
pub const DMR_POST: State = [8.0, 57.1597, -33.0012, 563.544];
/// Quiescent pre-shock gas, conservative (`p = 1` at `gamma = 1.4`).
pub const DMR_PRE: State = [1.4, 0.0, 0.0, 2.5];
/// Foot of the incident shock on the bottom wall.
pub const DMR_X0: f64 = 1.0 / 6.0;

/// Shock position along the top edge `y = 1` at time `t`.
pub fn dmr_shock_x(t: f64) -> f64 {
    DMR_X0 + (1.0 + 20.0 * t) / 3f64.sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Edge {
    Periodic,
    /// Mirror with the normal momentum negated.
    Reflective,
    /// Zero-order extrapolation.
    Extrapolation,
    /// Fixed conservative state.
    Inflow(State),
    /// Post-shock state for `x < 1/6`, reflective wall beyond.
    DmrBottom,
    /// Post-shock state left of the moving shock, pre-shock to the right.
    DmrTop,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundarySet {
    pub left: Edge,
    pub right: Edge,
    pub bottom: Edge,
    pub top: Edge,
}

impl BoundarySet {
    pub fn uniform(edge: Edge) -> Self {
        Self { left: edge, right: edge, bottom: edge, top: edge }
    }

    pub fn validate(&self) -> Result<(), SolverError> {
        let pair = |a: Edge, b: Edge| (a == Edge::Periodic) == (b == Edge::Periodic);
        if !pair(self.left, self.right) || !pair(self.bottom, self.top) {
            return Err(SolverError::InvalidConfig("periodic edges must come in opposing pairs".into()));
        }
        let misplaced = [self.left, self.right].iter().any(|e| matches!(e, Edge::DmrBottom | Edge::DmrTop))
            || matches!(self.bottom, Edge::DmrTop)
            || matches!(self.top, Edge::DmrBottom);
        if misplaced {
            return Err(SolverError::InvalidConfig("double Mach edges only apply at the bottom and top".into()));
        }
        Ok(())
    }
}

/// Which edge a ghost layer belongs to; `Low` is left/bottom.
#[derive(Clone, Copy)]
enum Side {
    Low,
    High,
}

/// Fills every ghost cell. Bottom/top layers are filled over the interior
/// columns first, then left/right layers over all rows, so corner cells take
/// the x-direction rule applied to the already-filled y ghosts.
pub fn apply_boundaries(q: &mut Field2D, grid: &Grid2D, bset: &BoundarySet, t: f64) {
    let (nx, ny) = (q.nx(), q.ny());
    for i in GHOST..GHOST + nx {
        for g in 0..GHOST {
            for (side, edge) in [(Side::Low, bset.bottom), (Side::High, bset.top)] {
                let (ghost, mirror, wrap, nearest) = match side {
                    Side::Low => (GHOST - 1 - g, GHOST + g, ny + GHOST - 1 - g, GHOST),
                    Side::High => (GHOST + ny + g, GHOST + ny - 1 - g, GHOST + g, GHOST + ny - 1),
                };
                let x = grid.x(i as isize - GHOST as isize);
                let value = match edge {
                    Edge::Periodic => q.get(i, wrap),
                    Edge::Reflective => flip_v(q.get(i, mirror)),
                    Edge::Extrapolation => q.get(i, nearest),
                    Edge::Inflow(s) => s,
                    Edge::DmrBottom if x < DMR_X0 => DMR_POST,
                    Edge::DmrBottom => flip_v(q.get(i, mirror)),
                    Edge::DmrTop if x < dmr_shock_x(t) => DMR_POST,
                    Edge::DmrTop => DMR_PRE,
                };
                q.set(i, ghost, value);
            }
        }
    }
    for j in 0..q.py() {
        for g in 0..GHOST {
            for (side, edge) in [(Side::Low, bset.left), (Side::High, bset.right)] {
                let (ghost, mirror, wrap, nearest) = match side {
                    Side::Low => (GHOST - 1 - g, GHOST + g, nx + GHOST - 1 - g, GHOST),
                    Side::High => (GHOST + nx + g, GHOST + nx - 1 - g, GHOST + g, GHOST + nx - 1),
                };
                let value = match edge {
                    Edge::Periodic => q.get(wrap, j),
                    Edge::Reflective => flip_u(q.get(mirror, j)),
                    Edge::Extrapolation => q.get(nearest, j),
                    Edge::Inflow(s) => s,
                    // rejected by validate
                    Edge::DmrBottom | Edge::DmrTop => q.get(nearest, j),
                };
                q.set(ghost, j, value);
            }
        }
    }
}

fn flip_u(q: State) -> State {
    [q[0], -q[1], q[2], q[3]]
}

fn flip_v(q: State) -> State {
    [q[0], q[1], -q[2], q[3]]
}
