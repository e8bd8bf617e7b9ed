use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use haar_burgers::cli::{cmd_converge, cmd_solve, cmd_table, emit, RunFile};

#[derive(Parser)]
#[command(version, about = "Haar wavelet solver for the generalized Burgers' equation")]
struct Args {
    #[command(subcommand)]
    command: Command,
    /// Write CSV here instead of the run file's `output` (or stdout).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one run file and write solution profiles.
    Solve { runfile: PathBuf },
    /// Recompute a published error table (1-4).
    Table {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=4))]
        n: u8,
    },
    /// Convergence study over the run file's `J_list`.
    Converge { runfile: PathBuf },
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let args = Args::parse();
    let result = match &args.command {
        Command::Solve { runfile } => RunFile::load(runfile).and_then(|rf| {
            let csv = cmd_solve(&rf)?;
            emit(&csv, args.out.as_deref().or(rf.output.as_deref()))
        }),
        Command::Table { n } => cmd_table(*n).and_then(|csv| emit(&csv, args.out.as_deref())),
        Command::Converge { runfile } => RunFile::load(runfile).and_then(|rf| {
            let csv = cmd_converge(&rf)?;
            emit(&csv, args.out.as_deref().or(rf.output.as_deref()))
        }),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
