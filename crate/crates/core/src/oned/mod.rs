//! Finite-difference solvers for 1D linear advection and the 1D Euler
//! equations.

mod grid;
mod problems;
mod run;
mod solver;

pub use grid::{fill_ghosts, Boundary1D, Field1D, Grid1D, GHOST};
pub use problems::{case5_profile, Problem1D, CASE5_DELTA};
pub use run::{default_dt_rule, run_problem_1d, write_snapshot_csv, DtRule, ProblemSpec1D, RunResult1D, Snapshot1D};
pub use solver::{advection_rhs, check_euler_state, euler1d_rhs, euler_timestep, max_speed_1d};
