//! Three-stage TVD Runge–Kutta time marching.

use crate::error::SolverError;

/// A state that can be combined linearly as one flat array of values.
pub trait FlatState: Clone {
    fn values(&self) -> &[f64];
    fn values_mut(&mut self) -> &mut [f64];

    /// Maps a flat index to `(component, cell)` for diagnostics.
    fn locate(&self, index: usize) -> (usize, usize) {
        (0, index)
    }
}

impl FlatState for Vec<f64> {
    fn values(&self) -> &[f64] {
        self
    }
    fn values_mut(&mut self) -> &mut [f64] {
        self
    }
}

/// `out = u + dt * sum(w_k * l_k)`, elementwise.
fn increment(out: &mut [f64], u: &[f64], dt: f64, terms: &[(f64, &[f64])]) {
    for (i, (o, &u)) in out.iter_mut().zip(u).enumerate() {
        let du: f64 = terms.iter().map(|(w, l)| w * l[i]).sum();
        *o = u + dt * du;
    }
}

/// Returns the first non-finite entry as an error.
pub fn check_finite<S: FlatState>(state: &S) -> Result<(), SolverError> {
    match state.values().iter().position(|v| !v.is_finite()) {
        None => Ok(()),
        Some(i) => {
            let (component, cell) = state.locate(i);
            Err(SolverError::NonFinite { component, cell, step: 0 })
        }
    }
}

/// One step from `t` to `t + dt`.
///
/// `rhs(stage, t_stage, out)` evaluates the spatial operator; it may modify
/// the stage state (e.g. fill ghost cells) before reading it. Stage times are
/// `t`, `t + dt` and `t + dt/2`.
pub fn rk3_step<S, F>(u: &mut S, t: f64, dt: f64, mut rhs: F) -> Result<(), SolverError>
where
    S: FlatState,
    F: FnMut(&mut S, f64, &mut S) -> Result<(), SolverError>,
{
    // Increment form of the Shu-Osher scheme. The convex-combination form
    // rounds every stage at the size of |u|, and that bias accumulates over
    // long runs.
    let mut l0 = u.clone();
    rhs(u, t, &mut l0)?;

    let mut stage = u.clone();
    increment(stage.values_mut(), u.values(), dt, &[(1.0, l0.values())]);
    let mut l1 = u.clone();
    rhs(&mut stage, t + dt, &mut l1)?;

    increment(stage.values_mut(), u.values(), dt, &[(0.25, l0.values()), (0.25, l1.values())]);
    let mut l2 = l1.clone();
    rhs(&mut stage, t + 0.5 * dt, &mut l2)?;

    let base = u.clone();
    let terms = [(1.0 / 6.0, l0.values()), (1.0 / 6.0, l1.values()), (2.0 / 3.0, l2.values())];
    increment(u.values_mut(), base.values(), dt, &terms);
    check_finite(u)
}
