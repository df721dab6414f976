#![allow(dead_code)]

use mapweno::euler::State;
use mapweno::mapping::AdaptiveContext;
use mapweno::twod::{Field2D, Grid2D};
use mapweno::MappingSpec;

pub const D_VALUES: [f64; 3] = [0.1, 0.6, 0.3];

pub fn preset(name: &str) -> MappingSpec {
    MappingSpec::preset(name).unwrap()
}

/// Context of a smooth stencil: comparable indicators, so `lambda` is near 1.
pub fn smooth_ctx() -> AdaptiveContext {
    AdaptiveContext::new(0.9, 1.0, 1e-2).unwrap()
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let n = lx.len() as f64;
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    sxy / sxx
}

pub fn filled(grid: &Grid2D, f: impl Fn(f64, f64) -> State) -> Field2D {
    let mut q = Field2D::zeros(grid);
    for j in 0..grid.ny {
        for i in 0..grid.nx {
            q.set_cell(i, j, f(grid.x(i as isize), grid.y(j as isize)));
        }
    }
    q
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}
