use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use mapweno::analysis::{
    adr_spectrum, chi_sweep, convergence_study, l1_error, upwind5_curve, write_chi_table_csv, write_convergence_csv,
    write_spectrum_csv, ChiSweepConfig, CHI_FAMILIES,
};
use mapweno::euler::GAMMA;
use mapweno::format::sci5;
use mapweno::mapping::{mapping_curve, write_curve_csv};
use mapweno::oned::{run_problem_1d, write_snapshot_csv, DtRule, Problem1D, ProblemSpec1D};
use mapweno::twod::{run_problem_2d, write_field_csv, write_slice_csv, Problem2D, ProblemSpec2D};
use mapweno::MappingSpec;
use rayon::prelude::*;

use crate::cli::{AdrArgs, AdvectArgs, ChiSweepArgs, Common, ConvergenceArgs, EulerArgs, MapDumpArgs};

#[derive(Debug)]
pub enum Failure {
    /// Bad input, reported before any computation (exit code 2).
    Usage(String),
    /// A run aborted or output could not be written (exit code 1).
    Run(String),
}

impl Failure {
    fn run(e: impl std::fmt::Display) -> Self {
        Failure::Run(e.to_string())
    }
}

type Res<T> = Result<T, Failure>;

/// A scheme after `--chi`/`--c` overrides, with a file-name label.
struct Variant {
    label: String,
    spec: MappingSpec,
}

/// Resolves every scheme name against the override lists; one variant per
/// (scheme, chi, c) combination.
fn variants(names: &[String], common: &Common) -> Res<Vec<Variant>> {
    let chis: Vec<Option<f64>> = if common.chi.is_empty() { vec![None] } else { common.chi.iter().map(|&c| Some(c)).collect() };
    let cs: Vec<Option<f64>> = if common.c.is_empty() { vec![None] } else { common.c.iter().map(|&c| Some(c)).collect() };
    let mut out = Vec::new();
    for raw in names {
        let name = raw.trim().to_ascii_lowercase();
        let base: MappingSpec = name.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
        for chi in &chis {
            for c in &cs {
                let mut spec = base;
                let mut label = name.clone();
                if let Some(chi) = chi {
                    spec = spec.with_chi(*chi).map_err(|e| Failure::Usage(e.to_string()))?;
                    label += &format!("_chi{chi}");
                }
                if let Some(c) = c {
                    spec = spec.with_c(*c).map_err(|e| Failure::Usage(e.to_string()))?;
                    label += &format!("_c{c}");
                }
                out.push(Variant { label, spec });
            }
        }
    }
    if out.is_empty() {
        return Err(Failure::Usage("no scheme given".into()));
    }
    Ok(out)
}

fn create(dir: &Path, name: &str) -> Res<(PathBuf, BufWriter<File>)> {
    fs::create_dir_all(dir).map_err(|e| Failure::Run(format!("cannot create {}: {e}", dir.display())))?;
    let path = dir.join(name);
    let f = File::create(&path).map_err(|e| Failure::Run(format!("cannot write {}: {e}", path.display())))?;
    Ok((path, BufWriter::new(f)))
}

fn finish(path: &Path, mut w: BufWriter<File>) -> Res<()> {
    w.flush().map_err(Failure::run)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn check_cfl(v: f64) -> Res<()> {
    if v > 0.0 && v <= 1.0 {
        Ok(())
    } else {
        Err(Failure::Usage(format!("--cfl must lie in (0, 1], got {v}")))
    }
}

pub fn convergence(a: &ConvergenceArgs) -> Res<()> {
    let problem = match a.case.as_str() {
        "1" | "case1" => Problem1D::Case1,
        "2" | "case2" => Problem1D::Case2,
        other => return Err(Failure::Usage(format!("convergence needs case 1 or 2, got `{other}`"))),
    };
    let vs = variants(&a.scheme, &a.common)?;
    check_cfl(a.cfl)?;
    if a.cells.is_empty() || a.cells.iter().any(|&n| n < 10) {
        return Err(Failure::Usage("--cells needs sizes of at least 10".into()));
    }
    let rule = if a.coarse_dt { DtRule::AccuracyCoarse } else { DtRule::Accuracy { sigma: a.cfl } };
    let results: Vec<_> = vs
        .par_iter()
        .map(|v| convergence_study(problem, v.spec, &a.cells, a.tfinal, rule).map_err(Failure::run))
        .collect::<Res<_>>()?;
    for (v, rows) in vs.iter().zip(results) {
        for r in &rows {
            let order = r.order.map_or("-".to_string(), |o| format!("{o:.2}"));
            println!("{} N={}: {} order {order}", v.label, r.n, sci5(r.l1));
        }
        let (path, mut w) = create(&a.common.out, &format!("convergence_case{}_{}.csv", a.case.trim_start_matches("case"), v.label))?;
        write_convergence_csv(&mut w, &rows).map_err(Failure::run)?;
        finish(&path, w)?;
    }
    Ok(())
}

pub fn advect(a: &AdvectArgs) -> Res<()> {
    let problem: Problem1D = match a.case.as_str() {
        c @ ("3" | "4" | "5" | "case3" | "case4" | "case5") => c.parse().map_err(|e| Failure::Usage(format!("{e}")))?,
        other => return Err(Failure::Usage(format!("advect needs case 3, 4 or 5, got `{other}`"))),
    };
    let vs = variants(&a.scheme, &a.common)?;
    check_cfl(a.cfl)?;
    let runs: Vec<_> = vs
        .par_iter()
        .map(|v| {
            let spec = ProblemSpec1D::new(problem, a.cells, v.spec)
                .with_end_time(a.tfinal)
                .with_dt_rule(DtRule::Fixed { sigma: a.cfl });
            run_problem_1d(&spec).map_err(Failure::run)
        })
        .collect::<Res<_>>()?;
    for (v, r) in vs.iter().zip(runs) {
        let exact = problem.exact(&r.grid, a.tfinal).expect("advection case");
        let l1 = l1_error(r.interior(0), &exact).map_err(Failure::run)?;
        println!("{} case {} N={} t={}: L1 {}", v.label, a.case, a.cells, a.tfinal, sci5(l1));
        let (path, mut w) = create(&a.common.out, &format!("advect_case{}_{}.csv", a.case.trim_start_matches("case"), v.label))?;
        let io = (|| {
            writeln!(w, "x,u_numeric,u_exact")?;
            for (i, (u, e)) in r.interior(0).iter().zip(&exact).enumerate() {
                writeln!(w, "{:.8},{u:.12e},{e:.12e}", r.grid.x(i))?;
            }
            Ok::<(), std::io::Error>(())
        })();
        io.map_err(Failure::run)?;
        finish(&path, w)?;
    }
    Ok(())
}

enum EulerProblem {
    One(Problem1D),
    Two(Problem2D),
}

fn euler_problem(tag: &str, alt: bool) -> Res<EulerProblem> {
    let tag = tag.to_ascii_lowercase();
    if let Ok(p) = tag.parse::<Problem2D>() {
        return Ok(EulerProblem::Two(match p {
            Problem2D::Riemann { .. } => Problem2D::Riemann { jet_corner: !alt },
            other => other,
        }));
    }
    match tag.parse::<Problem1D>() {
        Ok(Problem1D::ShuOsher { .. }) => Ok(EulerProblem::One(Problem1D::ShuOsher { quiet_right: alt })),
        Ok(p) if p.is_euler() => Ok(EulerProblem::One(p)),
        _ => Err(Failure::Usage(format!(
            "unknown problem `{tag}`; expected sod, shu-osher, vortex, riemann2d, implosion or dmr"
        ))),
    }
}

fn parse_grid(s: &str) -> Res<(usize, usize)> {
    let bad = || Failure::Usage(format!("--grid expects NXxNY, got `{s}`"));
    match s.split_once(['x', 'X']) {
        Some((a, b)) => Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?)),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            Ok((n, n))
        }
    }
}

/// L1 density error of the vortex against its exact translation.
fn vortex_error(r: &mapweno::twod::RunResult2D, t: f64) -> f64 {
    let g = &r.grid;
    let mut sum = 0.0;
    for j in 0..g.ny {
        for i in 0..g.nx {
            let x = (g.x(i as isize) - t).rem_euclid(10.0);
            let y = (g.y(j as isize) - t).rem_euclid(10.0);
            let exact = Problem2D::Vortex.state_at(x, y, GAMMA)[0];
            sum += (r.field.cell(i, j)[0] - exact).abs();
        }
    }
    sum / (g.nx * g.ny) as f64
}

pub fn euler(a: &EulerArgs) -> Res<()> {
    let problem = euler_problem(&a.problem, a.alt_ic)?;
    let vs = variants(&a.scheme, &a.common)?;
    check_cfl(a.cfl)?;
    match problem {
        EulerProblem::One(p) => {
            if a.grid.is_some() {
                return Err(Failure::Usage(format!("{} is one-dimensional; use --cells", a.problem)));
            }
            let n = a.cells.unwrap_or(200);
            let t = a.tfinal.unwrap_or(p.default_end_time());
            // (variant, cells, reference?)
            let mut sizes = vec![(n, false)];
            if a.reference {
                sizes.push((1000, true));
            }
            let jobs: Vec<(usize, usize, bool)> =
                (0..vs.len()).flat_map(|k| sizes.iter().map(move |&(n, r)| (k, n, r))).collect();
            let runs: Vec<_> = jobs
                .par_iter()
                .map(|&(k, n, _)| {
                    let spec = ProblemSpec1D::new(p, n, vs[k].spec)
                        .with_end_time(t)
                        .with_dt_rule(DtRule::EulerCfl { cfl: a.cfl });
                    run_problem_1d(&spec).map_err(|e| Failure::Run(format!("{} N={n}: {e}", vs[k].label)))
                })
                .collect::<Res<_>>()?;
            for (&(k, n, reference), r) in jobs.iter().zip(runs) {
                let suffix = if reference { "_ref" } else { "" };
                let tag = a.problem.to_ascii_lowercase();
                let (path, mut w) = create(&a.common.out, &format!("euler_{tag}_{}_N{n}{suffix}.csv", vs[k].label))?;
                write_snapshot_csv(&mut w, &p, &r.grid, &r.field, GAMMA).map_err(Failure::run)?;
                println!("{} N={n} t={t}: {} steps, {:.2} s", vs[k].label, r.steps, r.wall_time);
                finish(&path, w)?;
            }
        }
        EulerProblem::Two(p) => {
            let (nx, ny) = match (&a.grid, a.cells) {
                (Some(g), _) => parse_grid(g)?,
                (None, Some(n)) => (n, n),
                (None, None) => p.default_cells(),
            };
            let t = a.tfinal.unwrap_or(p.default_end_time());
            for v in &vs {
                let spec = ProblemSpec2D::new(p, nx, ny, v.spec).with_end_time(t).with_cfl(a.cfl);
                let r = run_problem_2d(&spec).map_err(|e| Failure::Run(format!("{}: {e}", v.label)))?;
                print!("{} {nx}x{ny} t={t}: {} steps, {:.2} s", v.label, r.steps, r.wall_time);
                if p == Problem2D::Vortex {
                    print!(", L1(rho) {}", sci5(vortex_error(&r, t)));
                }
                println!();
                let stem = format!("euler_{p}_{}_{nx}x{ny}", v.label);
                let (path, mut w) = create(&a.common.out, &format!("{stem}.csv"))?;
                write_field_csv(&mut w, &r.grid, &r.field, GAMMA).map_err(Failure::run)?;
                finish(&path, w)?;
                if let Some(y) = a.slice_y {
                    let (path, mut w) = create(&a.common.out, &format!("{stem}_y{y}.csv"))?;
                    write_slice_csv(&mut w, &r.grid, &r.field, GAMMA, y).map_err(Failure::run)?;
                    finish(&path, w)?;
                }
            }
        }
    }
    Ok(())
}

pub fn adr(a: &AdrArgs) -> Res<()> {
    let vs = variants(&a.scheme, &a.common)?;
    if a.points < 16 || a.points % 2 != 0 {
        return Err(Failure::Usage(format!("--points must be even and >= 16, got {}", a.points)));
    }
    let curves: Vec<_> = vs.par_iter().map(|v| adr_spectrum(&v.spec, a.points).map_err(Failure::run)).collect::<Res<_>>()?;
    let (path, mut w) = create(&a.common.out, "adr_upwind5.csv")?;
    write_spectrum_csv(&mut w, &upwind5_curve(a.points)).map_err(Failure::run)?;
    finish(&path, w)?;
    for (v, c) in vs.iter().zip(curves) {
        let (path, mut w) = create(&a.common.out, &format!("adr_{}.csv", v.label))?;
        write_spectrum_csv(&mut w, &c).map_err(Failure::run)?;
        finish(&path, w)?;
    }
    Ok(())
}

pub fn chi(a: &ChiSweepArgs) -> Res<()> {
    if !a.common.c.is_empty() {
        return Err(Failure::Usage("chi-sweep does not take --c".into()));
    }
    check_cfl(a.cfl)?;
    let mut configs = Vec::new();
    for raw in &a.scheme {
        let family = raw.trim().to_ascii_lowercase();
        if !CHI_FAMILIES.contains(&family.as_str()) {
            let _: MappingSpec = family.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
            return Err(Failure::Usage(format!("`{family}` has no chi parameter; use one of {}", CHI_FAMILIES.join(", "))));
        }
        let mut cfg = ChiSweepConfig::new(&family);
        if !a.common.chi.is_empty() {
            cfg.chis = a.common.chi.clone();
        }
        cfg.times = a.times.clone();
        cfg.n_cells = a.cells;
        cfg.sigma = a.cfl;
        configs.push(cfg);
    }
    let tables: Vec<_> = configs.par_iter().map(|c| chi_sweep(c).map_err(Failure::run)).collect::<Res<_>>()?;
    for t in tables {
        for r in &t.rows {
            let cells: Vec<String> = r.errors.iter().map(|e| sci5(*e)).collect();
            println!("{} {}: {}", t.family, r.label, cells.join(" "));
        }
        let (path, mut w) = create(&a.common.out, &format!("chi_{}.csv", t.family))?;
        write_chi_table_csv(&mut w, &t).map_err(Failure::run)?;
        finish(&path, w)?;
    }
    Ok(())
}

pub fn map_dump(a: &MapDumpArgs) -> Res<()> {
    let vs = variants(&a.scheme, &a.common)?;
    if a.d.iter().any(|d| !(*d > 0.0 && *d < 1.0)) {
        return Err(Failure::Usage("--d values must lie in (0, 1)".into()));
    }
    for v in &vs {
        for &d in &a.d {
            let curve = mapping_curve(&v.spec, d, a.s, a.samples).map_err(|e| Failure::Usage(e.to_string()))?;
            let (path, mut w) = create(&a.common.out, &format!("map_{}_d{d}.csv", v.label))?;
            write_curve_csv(&mut w, &curve).map_err(Failure::run)?;
            finish(&path, w)?;
        }
    }
    Ok(())
}
