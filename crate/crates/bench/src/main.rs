mod cli;
mod commands;
mod config;

use std::process::ExitCode;

use clap::Parser;

use cli::{Cli, Command};
use commands::Failure;

fn main() -> ExitCode {
    let args = match config::load_and_merge(std::env::args().collect()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    // clap exits with status 2 on usage errors
    let cli = Cli::parse_from(args);
    let jobs = match &cli.command {
        Command::Convergence(a) => a.common.jobs,
        Command::Advect(a) => a.common.jobs,
        Command::Euler(a) => a.common.jobs,
        Command::Adr(a) => a.common.jobs,
        Command::ChiSweep(a) => a.common.jobs,
        Command::MapDump(a) => a.common.jobs,
    };
    if jobs == 0 {
        eprintln!("error: --jobs must be at least 1");
        return ExitCode::from(2);
    }
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
        eprintln!("error: {e}");
        return ExitCode::FAILURE;
    }
    let result = match &cli.command {
        Command::Convergence(a) => commands::convergence(a),
        Command::Advect(a) => commands::advect(a),
        Command::Euler(a) => commands::euler(a),
        Command::Adr(a) => commands::adr(a),
        Command::ChiSweep(a) => commands::chi(a),
        Command::MapDump(a) => commands::map_dump(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("run failed: {msg}");
            ExitCode::FAILURE
        }
    }
}
