use thiserror::Error;

/// Invalid parameters for a weight map or local operator.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MappingError {
    #[error("invalid mapping parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown scheme name `{0}`")]
    UnknownScheme(String),
    #[error("non-finite operator sample at omega = {omega}")]
    NonFiniteSample { omega: f64 },
    #[error("degenerate rational-map denominator {value:e} at omega = {omega}")]
    DegenerateDenominator { omega: f64, value: f64 },
}

/// Failures raised while setting up or advancing a solver run.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error(transparent)]
    Mapping(#[from] MappingError),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("unknown problem tag `{0}`")]
    UnknownProblem(String),
    #[error("non-finite value in component {component} at cell {cell} (step {step})")]
    NonFinite {
        component: usize,
        cell: usize,
        step: usize,
    },
    #[error("loss of positivity at cell {cell}: rho = {rho:e}, p = {pressure:e} (step {step})")]
    Positivity {
        cell: usize,
        rho: f64,
        pressure: f64,
        step: usize,
    },
}

impl SolverError {
    /// Tags a run-time abort with the step index at which it happened.
    pub fn at_step(self, index: usize) -> Self {
        match self {
            SolverError::NonFinite {
                component, cell, ..
            } => SolverError::NonFinite {
                component,
                cell,
                step: index,
            },
            SolverError::Positivity {
                cell,
                rho,
                pressure,
                ..
            } => SolverError::Positivity {
                cell,
                rho,
                pressure,
                step: index,
            },
            other => other,
        }
    }
}

/// Failures in error norms, convergence orders, and spectral analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Mapping(#[from] MappingError),
    #[error("length mismatch: numeric has {numeric} entries, exact has {exact}")]
    LengthMismatch { numeric: usize, exact: usize },
    #[error("errors must be positive to form an order, got {coarse:e} and {fine:e}")]
    NonPositiveError { coarse: f64, fine: f64 },
    #[error("degenerate Fourier coefficient for wavenumber index {k}")]
    DegenerateCoefficient { k: usize },
    #[error("invalid analysis parameter: {0}")]
    InvalidParameter(String),
}
