mod support;

use mapweno::analysis::convergence_study;
use mapweno::euler::GAMMA;
use mapweno::mapping::{ALL_SCHEMES, BENCH_SCHEMES};
use mapweno::oned::{
    advection_rhs, check_euler_state, euler1d_rhs, fill_ghosts, run_problem_1d, Boundary1D, DtRule, Field1D,
    Grid1D, Problem1D, ProblemSpec1D,
};
use mapweno::WeightMap;
use proptest::prelude::*;
use support::{max_abs_diff, preset};

fn map(name: &str) -> WeightMap {
    WeightMap::new(preset(name)).unwrap()
}

#[test]
fn constant_advection_is_preserved() {
    let grid = Grid1D::new(40, -1.0, 1.0).unwrap();
    for name in ALL_SCHEMES {
        let mut u = Field1D::from_interior(&[vec![0.37; 40]]);
        fill_ghosts(&mut u, Boundary1D::Periodic);
        let mut out = Field1D::zeros(1, &grid);
        advection_rhs(&u, &grid, &map(name), &mut out).unwrap();
        assert!(out.comp(0).iter().all(|v| v.abs() < 1e-13), "{name}");
    }
}

#[test]
fn uniform_flow_is_preserved() {
    let grid = Grid1D::new(50, 0.0, 1.0).unwrap();
    let (r, u, p) = (0.9, -0.35, 1.7);
    let e = p / (GAMMA - 1.0) + 0.5 * r * u * u;
    for name in BENCH_SCHEMES {
        let mut q = Field1D::from_interior(&[vec![r; 50], vec![r * u; 50], vec![e; 50]]);
        fill_ghosts(&mut q, Boundary1D::Transmissive);
        let mut out = Field1D::zeros(3, &grid);
        euler1d_rhs(&q, &grid, &map(name), GAMMA, &mut out).unwrap();
        for k in 0..3 {
            assert!(out.interior(k).iter().all(|v| v.abs() < 1e-13), "{name} comp {k}");
        }
    }
}

#[test]
fn periodic_advection_conserves_mass() {
    let problem = Problem1D::Case5 { delta: mapweno::oned::CASE5_DELTA };
    for name in ["aims", "apma", "arma", "js"] {
        let spec = ProblemSpec1D::new(problem, 200, preset(name)).with_end_time(0.5);
        let r = run_problem_1d(&spec).unwrap();
        let before: f64 = problem.init(&r.grid, GAMMA).interior(0).iter().sum();
        let after: f64 = r.interior(0).iter().sum();
        assert!((after - before).abs() <= 1e-10 * before.abs(), "{name}: {before} -> {after}");
    }
}

#[test]
fn smooth_advection_converges_at_fifth_order() {
    for name in ["aim", "aims", "arma", "pm6"] {
        let rows = convergence_study(Problem1D::Case1, preset(name), &[40, 80, 160], 2.0, DtRule::Accuracy { sigma: 0.5 })
            .unwrap();
        for r in &rows[1..] {
            let order = r.order.unwrap();
            assert!(order > 4.6 && order < 5.4, "{name} N={}: order {order}", r.n);
        }
    }
}

#[test]
fn step_stays_nearly_bounded() {
    for name in BENCH_SCHEMES {
        let r = run_problem_1d(&ProblemSpec1D::new(Problem1D::Case3, 200, preset(name))).unwrap();
        let (lo, hi) = r.interior(0).iter().fold((f64::MAX, f64::MIN), |(a, b), &v| (a.min(v), b.max(v)));
        assert!(lo > -0.05 && hi < 1.05, "{name}: [{lo}, {hi}]");
    }
}

#[test]
fn zero_time_returns_exact_profile() {
    let r = run_problem_1d(&ProblemSpec1D::new(Problem1D::Case4, 64, preset("aima")).with_end_time(0.0)).unwrap();
    assert_eq!(r.interior(0), Problem1D::Case4.exact(&r.grid, 0.0).unwrap().as_slice());
}

#[test]
fn sod_conserves_and_stays_admissible() {
    for name in BENCH_SCHEMES {
        let r = run_problem_1d(&ProblemSpec1D::new(Problem1D::Sod, 200, preset(name))).unwrap();
        check_euler_state(&r.field, GAMMA).unwrap();
        let init = Problem1D::Sod.init(&r.grid, GAMMA);
        // waves have not reached the ends, so boundary fluxes vanish
        for k in [0, 2] {
            let (a, b): (f64, f64) = (init.interior(k).iter().sum(), r.interior(k).iter().sum());
            assert!((a - b).abs() <= 1e-12 * a, "{name} comp {k}: {a} vs {b}");
        }
    }
}

#[test]
fn shu_osher_stays_admissible() {
    for name in ["aim", "aims", "arma"] {
        let r = run_problem_1d(&ProblemSpec1D::new(Problem1D::ShuOsher { quiet_right: false }, 200, preset(name)))
            .unwrap();
        check_euler_state(&r.field, GAMMA).unwrap();
    }
}

#[test]
fn periodic_operator_commutes_with_shifts() {
    let grid = Grid1D::new(80, -1.0, 1.0).unwrap();
    let xs = grid.centres();
    let u0: Vec<f64> = xs.iter().map(|x| (std::f64::consts::PI * x).sin()).collect();
    let mut u = Field1D::from_interior(&[u0.clone()]);
    fill_ghosts(&mut u, Boundary1D::Periodic);
    let mut shifted = Field1D::from_interior(&[u0.iter().cycle().skip(5).take(80).copied().collect()]);
    fill_ghosts(&mut shifted, Boundary1D::Periodic);
    let (mut a, mut b) = (Field1D::zeros(1, &grid), Field1D::zeros(1, &grid));
    for name in ["aims", "aima", "apms"] {
        advection_rhs(&u, &grid, &map(name), &mut a).unwrap();
        advection_rhs(&shifted, &grid, &map(name), &mut b).unwrap();
        let rolled: Vec<f64> = a.interior(0).iter().cycle().skip(5).take(80).copied().collect();
        assert!(max_abs_diff(&rolled, b.interior(0)) < 1e-12, "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn advection_operator_has_zero_sum(values in prop::collection::vec(-2.0f64..2.0, 30)) {
        let grid = Grid1D::new(30, 0.0, 1.0).unwrap();
        let mut u = Field1D::from_interior(&[values]);
        fill_ghosts(&mut u, Boundary1D::Periodic);
        let mut out = Field1D::zeros(1, &grid);
        for name in ["aims", "arma", "m", "js"] {
            advection_rhs(&u, &grid, &map(name), &mut out).unwrap();
            let s: f64 = out.interior(0).iter().sum();
            let scale: f64 = out.interior(0).iter().map(|v| v.abs()).sum::<f64>() + 1.0;
            prop_assert!(s.abs() < 1e-12 * scale, "{} {}", name, s);
        }
    }
}
