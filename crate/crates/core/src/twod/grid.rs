use crate::error::SolverError;
use crate::euler::State;
use crate::oned::GHOST;
use crate::time::FlatState;

/// Uniform cell-centred grid on `[x_min, x_max] x [y_min, y_max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid2D {
    pub nx: usize,
    pub ny: usize,
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
    pub dx: f64,
    pub dy: f64,
}

impl Grid2D {
    pub fn new(nx: usize, ny: usize, x: (f64, f64), y: (f64, f64)) -> Result<Self, SolverError> {
        if nx < 10 || ny < 10 {
            return Err(SolverError::InvalidConfig(format!("need at least 10x10 cells, got {nx}x{ny}")));
        }
        for (lo, hi) in [x, y] {
            if !(hi > lo) || !lo.is_finite() || !hi.is_finite() {
                return Err(SolverError::InvalidConfig(format!("empty domain [{lo}, {hi}]")));
            }
        }
        Ok(Self {
            nx,
            ny,
            x_min: x.0,
            x_max: x.1,
            y_min: y.0,
            y_max: y.1,
            dx: (x.1 - x.0) / nx as f64,
            dy: (y.1 - y.0) / ny as f64,
        })
    }

    /// Centre abscissa of column `i`; negative or `>= nx` indices address
    /// ghost columns.
    #[inline]
    pub fn x(&self, i: isize) -> f64 {
        self.x_min + (i as f64 + 0.5) * self.dx
    }

    #[inline]
    pub fn y(&self, j: isize) -> f64 {
        self.y_min + (j as f64 + 0.5) * self.dy
    }

    pub fn px(&self) -> usize {
        self.nx + 2 * GHOST
    }

    pub fn py(&self) -> usize {
        self.ny + 2 * GHOST
    }
}

/// Conserved variables `(rho, rho*u, rho*v, E)`, component-major over the
/// padded grid; padded cell `(i, j)` sits at `i + j * px`.
#[derive(Debug, Clone, PartialEq)]
pub struct Field2D {
    px: usize,
    py: usize,
    data: Vec<f64>,
}

impl Field2D {
    pub fn zeros(grid: &Grid2D) -> Self {
        let (px, py) = (grid.px(), grid.py());
        Self { px, py, data: vec![0.0; 4 * px * py] }
    }

    pub fn px(&self) -> usize {
        self.px
    }

    pub fn py(&self) -> usize {
        self.py
    }

    pub fn nx(&self) -> usize {
        self.px - 2 * GHOST
    }

    pub fn ny(&self) -> usize {
        self.py - 2 * GHOST
    }

    #[inline]
    fn plane(&self) -> usize {
        self.px * self.py
    }

    /// Padded component array.
    pub fn comp(&self, k: usize) -> &[f64] {
        let n = self.plane();
        &self.data[k * n..(k + 1) * n]
    }

    pub fn comp_mut(&mut self, k: usize) -> &mut [f64] {
        let n = self.plane();
        &mut self.data[k * n..(k + 1) * n]
    }

    /// State at padded indices.
    #[inline]
    pub fn get(&self, i: usize, j: usize) -> State {
        let (n, c) = (self.plane(), i + j * self.px);
        [self.data[c], self.data[n + c], self.data[2 * n + c], self.data[3 * n + c]]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, q: State) {
        let (n, c) = (self.plane(), i + j * self.px);
        for (k, v) in q.into_iter().enumerate() {
            self.data[k * n + c] = v;
        }
    }

    /// State of interior cell `(i, j)`.
    #[inline]
    pub fn cell(&self, i: usize, j: usize) -> State {
        self.get(i + GHOST, j + GHOST)
    }

    #[inline]
    pub fn set_cell(&mut self, i: usize, j: usize, q: State) {
        self.set(i + GHOST, j + GHOST, q)
    }

    /// Interior values of component `k`, row-major (`i` fastest).
    pub fn interior(&self, k: usize) -> Vec<f64> {
        let c = self.comp(k);
        (GHOST..self.py - GHOST)
            .flat_map(|j| c[j * self.px + GHOST..(j + 1) * self.px - GHOST].iter().copied())
            .collect()
    }

    /// Swaps the axes: cell `(i, j)` moves to `(j, i)` and the two momenta
    /// trade places.
    pub fn transposed(&self) -> Self {
        let mut t = Self { px: self.py, py: self.px, data: vec![0.0; self.data.len()] };
        for j in 0..self.py {
            for i in 0..self.px {
                let q = self.get(i, j);
                t.set(j, i, [q[0], q[2], q[1], q[3]]);
            }
        }
        t
    }
}

impl FlatState for Field2D {
    fn values(&self) -> &[f64] {
        &self.data
    }
    fn values_mut(&mut self) -> &mut [f64] {
        &mut self.data
    }
    /// `(component, padded cell index)`.
    fn locate(&self, index: usize) -> (usize, usize) {
        (index / self.plane(), index % self.plane())
    }
}
