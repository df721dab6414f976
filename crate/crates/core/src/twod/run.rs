use std::io::{self, Write};
use std::time::Instant;

use super::boundary::{apply_boundaries, BoundarySet};
use super::grid::{Field2D, Grid2D};
use super::problems::Problem2D;
use super::solver::{euler2d_rhs, timestep_2d};
use crate::error::SolverError;
use crate::euler::{primitive, GAMMA};
use crate::mapping::{MappingSpec, WeightMap};
use crate::time::rk3_step;

#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec2D {
    pub problem: Problem2D,
    pub nx: usize,
    pub ny: usize,
    pub t_end: f64,
    pub cfl: f64,
    pub scheme: MappingSpec,
    pub gamma: f64,
}

impl ProblemSpec2D {
    /// Problem defaults for end time and gamma, CFL 0.5.
    pub fn new(problem: Problem2D, nx: usize, ny: usize, scheme: MappingSpec) -> Self {
        Self { problem, nx, ny, t_end: problem.default_end_time(), cfl: 0.5, scheme, gamma: GAMMA }
    }

    pub fn with_end_time(mut self, t_end: f64) -> Self {
        self.t_end = t_end;
        self
    }

    pub fn with_cfl(mut self, cfl: f64) -> Self {
        self.cfl = cfl;
        self
    }
}

#[derive(Debug, Clone)]
pub struct RunResult2D {
    pub grid: Grid2D,
    pub field: Field2D,
    pub steps: usize,
    pub wall_time: f64,
}

/// One RK3 step with boundaries refreshed before every stage evaluation.
pub fn step_2d(
    q: &mut Field2D,
    grid: &Grid2D,
    bset: &BoundarySet,
    map: &WeightMap,
    gamma: f64,
    t: f64,
    dt: f64,
) -> Result<(), SolverError> {
    rk3_step(q, t, dt, |stage, ts, out| {
        apply_boundaries(stage, grid, bset, ts);
        euler2d_rhs(stage, grid, map, gamma, out)
    })
}

/// Advances to `t_end` with the directional CFL step, clipping the last
/// step to land on `t_end`.
pub fn run_problem_2d(spec: &ProblemSpec2D) -> Result<RunResult2D, SolverError> {
    if !(spec.t_end >= 0.0) || !spec.t_end.is_finite() {
        return Err(SolverError::InvalidConfig(format!("end time must be >= 0, got {}", spec.t_end)));
    }
    if !(spec.cfl > 0.0 && spec.cfl <= 1.0) {
        return Err(SolverError::InvalidConfig(format!("CFL must lie in (0, 1], got {}", spec.cfl)));
    }
    let grid = spec.problem.grid(spec.nx, spec.ny)?;
    let map = WeightMap::new(spec.scheme)?;
    let bset = spec.problem.boundary();
    bset.validate()?;
    let gamma = spec.gamma;
    let mut q = spec.problem.init(&grid, gamma);
    apply_boundaries(&mut q, &grid, &bset, 0.0);

    let start = Instant::now();
    let (mut t, mut steps) = (0.0, 0);
    while t < spec.t_end {
        let mut dt = timestep_2d(&q, &grid, spec.cfl, gamma);
        let last = t + dt >= spec.t_end * (1.0 - 1e-14);
        if last {
            dt = spec.t_end - t;
        }
        step_2d(&mut q, &grid, &bset, &map, gamma, t, dt).map_err(|e| e.at_step(steps))?;
        steps += 1;
        t = if last { spec.t_end } else { t + dt };
    }
    apply_boundaries(&mut q, &grid, &bset, t);
    Ok(RunResult2D { grid, field: q, steps, wall_time: start.elapsed().as_secs_f64() })
}

/// Row-major dump `x,y,rho,u,v,p` (`x` fastest).
pub fn write_field_csv<W: Write>(mut out: W, grid: &Grid2D, q: &Field2D, gamma: f64) -> io::Result<()> {
    writeln!(out, "x,y,rho,u,v,p")?;
    for j in 0..grid.ny {
        for i in 0..grid.nx {
            let [r, u, v, p] = primitive(&q.cell(i, j), gamma);
            writeln!(out, "{:.8},{:.8},{r:.12e},{u:.12e},{v:.12e},{p:.12e}", grid.x(i as isize), grid.y(j as isize))?;
        }
    }
    Ok(())
}

/// Row of cells whose centre is nearest to `y`.
pub fn nearest_row(grid: &Grid2D, y: f64) -> usize {
    let j = ((y - grid.y_min) / grid.dy - 0.5).round();
    j.clamp(0.0, (grid.ny - 1) as f64) as usize
}

/// Slice `x,rho,u,v,p` along the row nearest to `y`.
pub fn write_slice_csv<W: Write>(mut out: W, grid: &Grid2D, q: &Field2D, gamma: f64, y: f64) -> io::Result<()> {
    let j = nearest_row(grid, y);
    writeln!(out, "x,rho,u,v,p")?;
    for i in 0..grid.nx {
        let [r, u, v, p] = primitive(&q.cell(i, j), gamma);
        writeln!(out, "{:.8},{r:.12e},{u:.12e},{v:.12e},{p:.12e}", grid.x(i as isize))?;
    }
    Ok(())
}
