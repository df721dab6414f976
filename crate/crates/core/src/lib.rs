//! Fifth-order finite-difference WENO with classical and adaptive mapped
//! weights, 1D/2D Euler and advection solvers, and accuracy/spectral analysis.

pub mod analysis;
pub mod error;
pub mod euler;
pub mod format;
pub mod mapping;
pub mod oned;
pub mod reconstruction;
pub mod time;
pub mod twod;

pub use error::{AnalysisError, MappingError, SolverError};
pub use mapping::{apply_mapping, LocalOperator, MappingSpec, WeightMap};
pub use reconstruction::{StencilWindow, WeightTriple, OPTIMAL_WEIGHTS};
