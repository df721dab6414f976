use super::grid::{Field1D, Grid1D, GHOST};
use crate::error::SolverError;
use crate::euler::{self, LineScratch, State};
use crate::mapping::WeightMap;
use crate::reconstruction::{weno5, StencilWindow};

fn check_interior_finite(field: &Field1D) -> Result<(), SolverError> {
    for k in 0..field.ncomp() {
        if let Some(cell) = field.interior(k).iter().position(|v| !v.is_finite()) {
            return Err(SolverError::NonFinite { component: k, cell, step: 0 });
        }
    }
    Ok(())
}

/// Semi-discrete operator of `u_t + u_x = 0` (unit wind, upwind-biased
/// reconstruction only). Ghost cells must already be filled; `out` gets the
/// increment on interior cells and zero on ghosts.
pub fn advection_rhs(u: &Field1D, grid: &Grid1D, map: &WeightMap, out: &mut Field1D) -> Result<(), SolverError> {
    check_interior_finite(u)?;
    let a = u.comp(0);
    let n = grid.n_cells;
    let dx = grid.dx;
    let o = out.comp_mut(0);
    // flux at the left face of interior cell 0
    let mut left = weno5(&StencilWindow::from_raw([a[0], a[1], a[2], a[3], a[4]]), map, dx);
    for i in 0..n {
        let j = GHOST + i;
        let right = weno5(
            &StencilWindow::from_raw([a[j - 2], a[j - 1], a[j], a[j + 1], a[j + 2]]),
            map,
            dx,
        );
        o[j] = -(right - left) / dx;
        left = right;
    }
    for g in 0..GHOST {
        o[g] = 0.0;
        o[GHOST + n + g] = 0.0;
    }
    Ok(())
}

/// Packs the `(rho, rho*u, E)` field into line states with zero transverse
/// momentum.
fn line_states(q: &Field1D) -> Vec<State> {
    let (r, m, e) = (q.comp(0), q.comp(1), q.comp(2));
    (0..r.len()).map(|i| [r[i], m[i], 0.0, e[i]]).collect()
}

/// Checks `rho > 0`, `p > 0` on interior cells.
pub fn check_euler_state(q: &Field1D, gamma: f64) -> Result<(), SolverError> {
    let (r, m, e) = (q.interior(0), q.interior(1), q.interior(2));
    for i in 0..r.len() {
        euler::check_admissible(&[r[i], m[i], 0.0, e[i]], gamma, i)?;
    }
    Ok(())
}

/// Largest `|u| + c` over the interior.
pub fn max_speed_1d(q: &Field1D, gamma: f64) -> f64 {
    let (r, m, e) = (q.interior(0), q.interior(1), q.interior(2));
    (0..r.len()).fold(0.0, |acc, i| acc.max(euler::wave_speed(&[r[i], m[i], 0.0, e[i]], gamma)))
}

/// Semi-discrete 1D Euler operator: global Lax–Friedrichs splitting with
/// characteristic-wise WENO reconstruction in the Roe-averaged eigenbasis.
pub fn euler1d_rhs(
    q: &Field1D,
    grid: &Grid1D,
    map: &WeightMap,
    gamma: f64,
    out: &mut Field1D,
) -> Result<(), SolverError> {
    check_euler_state(q, gamma)?;
    let line = line_states(q);
    let alpha = max_speed_1d(q, gamma);
    let mut inc = vec![[0.0; 4]; grid.n_cells];
    euler::line_rhs(&line, GHOST, gamma, alpha, map, grid.dx, &mut LineScratch::default(), &mut inc);
    for (k, c) in [(0, 0), (1, 1), (2, 3)] {
        let o = out.comp_mut(k);
        o.iter_mut().for_each(|v| *v = 0.0);
        for (i, d) in inc.iter().enumerate() {
            o[GHOST + i] = d[c];
        }
    }
    Ok(())
}

/// `cfl * dx / max(|u| + c)`.
pub fn euler_timestep(q: &Field1D, grid: &Grid1D, cfl: f64, gamma: f64) -> f64 {
    cfl * grid.dx / max_speed_1d(q, gamma)
}
