//! Dimension-by-dimension solver for the 2D Euler equations.

mod boundary;
mod grid;
mod problems;
mod run;
mod solver;

pub use boundary::{apply_boundaries, dmr_shock_x, BoundarySet, Edge, DMR_POST, DMR_PRE, DMR_X0};
pub use grid::{Field2D, Grid2D};
pub use problems::{vortex_primitive, Problem2D, VORTEX_BETA};
pub use run::{nearest_row, run_problem_2d, step_2d, write_field_csv, write_slice_csv, ProblemSpec2D, RunResult2D};
pub use solver::{check_euler_state_2d, euler2d_rhs, max_speeds_2d, timestep_2d};
