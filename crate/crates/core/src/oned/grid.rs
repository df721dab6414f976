use crate::error::SolverError;
use crate::time::FlatState;

/// Ghost layers on each side: the reach of a five-point stencil plus the
/// mirrored window of the split flux.
pub const GHOST: usize = 3;

/// Uniform cell-centred grid on `[x_min, x_max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    pub n_cells: usize,
    pub x_min: f64,
    pub x_max: f64,
    pub dx: f64,
}

impl Grid1D {
    pub fn new(n_cells: usize, x_min: f64, x_max: f64) -> Result<Self, SolverError> {
        if n_cells < 10 {
            return Err(SolverError::InvalidConfig(format!("need at least 10 cells, got {n_cells}")));
        }
        if !(x_max > x_min) || !x_min.is_finite() || !x_max.is_finite() {
            return Err(SolverError::InvalidConfig(format!("empty domain [{x_min}, {x_max}]")));
        }
        Ok(Self { n_cells, x_min, x_max, dx: (x_max - x_min) / n_cells as f64 })
    }

    /// Centre of interior cell `i`.
    #[inline]
    pub fn x(&self, i: usize) -> f64 {
        self.x_min + (i as f64 + 0.5) * self.dx
    }

    pub fn centres(&self) -> Vec<f64> {
        (0..self.n_cells).map(|i| self.x(i)).collect()
    }

    pub fn padded_len(&self) -> usize {
        self.n_cells + 2 * GHOST
    }

    pub fn length(&self) -> f64 {
        self.x_max - self.x_min
    }
}

/// Component-major padded storage: component `k`, padded index `i` lives at
/// `k * len + i`.
#[derive(Debug, Clone, PartialEq)]
pub struct Field1D {
    ncomp: usize,
    len: usize,
    data: Vec<f64>,
}

impl Field1D {
    pub fn zeros(ncomp: usize, grid: &Grid1D) -> Self {
        let len = grid.padded_len();
        Self { ncomp, len, data: vec![0.0; ncomp * len] }
    }

    /// Builds a field from interior values, one `Vec` per component.
    pub fn from_interior(components: &[Vec<f64>]) -> Self {
        let n = components[0].len();
        let len = n + 2 * GHOST;
        let mut data = vec![0.0; components.len() * len];
        for (k, c) in components.iter().enumerate() {
            assert_eq!(c.len(), n, "components differ in length");
            data[k * len + GHOST..k * len + GHOST + n].copy_from_slice(c);
        }
        Self { ncomp: components.len(), len, data }
    }

    pub fn ncomp(&self) -> usize {
        self.ncomp
    }

    pub fn n_cells(&self) -> usize {
        self.len - 2 * GHOST
    }

    /// Padded component array.
    pub fn comp(&self, k: usize) -> &[f64] {
        &self.data[k * self.len..(k + 1) * self.len]
    }

    pub fn comp_mut(&mut self, k: usize) -> &mut [f64] {
        &mut self.data[k * self.len..(k + 1) * self.len]
    }

    pub fn interior(&self, k: usize) -> &[f64] {
        &self.comp(k)[GHOST..self.len - GHOST]
    }

    pub fn interior_mut(&mut self, k: usize) -> &mut [f64] {
        let len = self.len;
        &mut self.comp_mut(k)[GHOST..len - GHOST]
    }
}

impl FlatState for Field1D {
    fn values(&self) -> &[f64] {
        &self.data
    }
    fn values_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }
    fn locate(&self, index: usize) -> (usize, usize) {
        (index / self.len, (index % self.len).saturating_sub(GHOST))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary1D {
    Periodic,
    /// Zero-order extrapolation.
    Transmissive,
}

pub fn fill_ghosts(field: &mut Field1D, bc: Boundary1D) {
    let n = field.n_cells();
    for k in 0..field.ncomp() {
        let a = field.comp_mut(k);
        for g in 0..GHOST {
            match bc {
                Boundary1D::Periodic => {
                    a[g] = a[n + g];
                    a[GHOST + n + g] = a[GHOST + g];
                }
                Boundary1D::Transmissive => {
                    a[g] = a[GHOST];
                    a[GHOST + n + g] = a[GHOST + n - 1];
                }
            }
        }
    }
}
