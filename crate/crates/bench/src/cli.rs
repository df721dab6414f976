use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "mapweno-bench", version, about = "Mapped WENO benchmark runs with CSV output")]
pub struct Cli {
    /// Plain `key = value` file; keys are long flag names. Flags win.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// L1 errors and orders for the smooth advection cases.
    Convergence(ConvergenceArgs),
    /// Profile of a discontinuous advection case.
    Advect(AdvectArgs),
    /// 1D or 2D Euler run; writes the final state.
    Euler(EulerArgs),
    /// Dispersion and dissipation spectra.
    Adr(AdrArgs),
    /// Case 5 errors over the local-operator parameter.
    ChiSweep(ChiSweepArgs),
    /// Sampled mapping curves.
    MapDump(MapDumpArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Output directory.
    #[arg(long, env = "WENO_OUT_DIR", default_value = "out")]
    pub out: PathBuf,

    /// Worker threads for independent runs.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,

    /// Override the local-operator parameter of adaptive schemes.
    #[arg(long, value_delimiter = ',')]
    pub chi: Vec<f64>,

    /// Override the amplitude scale of adaptive schemes.
    #[arg(long, value_delimiter = ',')]
    pub c: Vec<f64>,
}

#[derive(Args, Debug)]
pub struct ConvergenceArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_delimiter = ',', default_value = "aim")]
    pub scheme: Vec<String>,
    /// 1 or 2.
    #[arg(long, visible_alias = "problem", default_value = "1")]
    pub case: String,
    #[arg(long, value_delimiter = ',', default_values_t = [50, 100, 200, 400, 800])]
    pub cells: Vec<usize>,
    #[arg(long, default_value_t = 2.0)]
    pub tfinal: f64,
    /// `sigma` in `dt = sigma dx^{5/3}`.
    #[arg(long, default_value_t = 0.5)]
    pub cfl: f64,
    /// Use `dt = dx^{5/4}` instead.
    #[arg(long)]
    pub coarse_dt: bool,
}

#[derive(Args, Debug)]
pub struct AdvectArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_delimiter = ',', default_value = "aims")]
    pub scheme: Vec<String>,
    /// 3, 4 or 5.
    #[arg(long, visible_alias = "problem", default_value = "3")]
    pub case: String,
    #[arg(long, default_value_t = 200)]
    pub cells: usize,
    #[arg(long, default_value_t = 2.0)]
    pub tfinal: f64,
    /// `sigma` in `dt = sigma dx`.
    #[arg(long, default_value_t = 0.6)]
    pub cfl: f64,
}

#[derive(Args, Debug)]
pub struct EulerArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_delimiter = ',', default_value = "aims")]
    pub scheme: Vec<String>,
    /// sod, shu-osher, vortex, riemann2d, implosion or dmr.
    #[arg(long, visible_alias = "case", default_value = "sod")]
    pub problem: String,
    /// Cells of a 1D run.
    #[arg(long)]
    pub cells: Option<usize>,
    /// `NXxNY` of a 2D run.
    #[arg(long)]
    pub grid: Option<String>,
    #[arg(long)]
    pub tfinal: Option<f64>,
    #[arg(long, default_value_t = 0.5)]
    pub cfl: f64,
    /// Alternative initial state: quiescent Shu–Osher right state, or the
    /// `(1, 0.1, 0.1, 1)` upper-right quadrant of the 2D Riemann problem.
    #[arg(long)]
    pub alt_ic: bool,
    /// Also run 1D problems on 1000 cells with the same scheme.
    #[arg(long)]
    pub reference: bool,
    /// Also write the slice nearest to this `y` for 2D runs.
    #[arg(long)]
    pub slice_y: Option<f64>,
}

#[derive(Args, Debug)]
pub struct AdrArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_delimiter = ',', default_value = "aims")]
    pub scheme: Vec<String>,
    /// Grid size; wavenumbers are `2 pi k / points`.
    #[arg(long, default_value_t = 128)]
    pub points: usize,
}

#[derive(Args, Debug)]
pub struct ChiSweepArgs {
    #[command(flatten)]
    pub common: Common,
    /// Adaptive families to sweep.
    #[arg(long, value_delimiter = ',', default_value = "aims,aima,arms,arma,apms,apma")]
    pub scheme: Vec<String>,
    #[arg(long, value_delimiter = ',', default_value = "2")]
    pub times: Vec<f64>,
    #[arg(long, default_value_t = 200)]
    pub cells: usize,
    #[arg(long, default_value_t = 0.5)]
    pub cfl: f64,
}

#[derive(Args, Debug)]
pub struct MapDumpArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_delimiter = ',', default_value = "m,pm6,rm260,aim,aims,aima,apms,apma,arms,arma")]
    pub scheme: Vec<String>,
    /// Optimal weights to map around.
    #[arg(long, value_delimiter = ',', default_values_t = [0.1, 0.6, 0.3])]
    pub d: Vec<f64>,
    /// Amplitude `s` of the adaptive maps.
    #[arg(long, default_value_t = 0.0)]
    pub s: f64,
    #[arg(long, default_value_t = 1001)]
    pub samples: usize,
}
