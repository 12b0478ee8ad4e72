//! `gtopx`: inspect, evaluate and sample the trajectory benchmarks.
//!
//! Exit codes: 0 success, 2 usage or parse error, 3 evaluation failure.

mod commands;
mod error;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use error::CliError;

#[derive(Parser)]
#[command(name = "gtopx", version, about = "Interplanetary trajectory benchmark suite")]
struct Cli {
    /// Worker threads for parallel commands.
    #[arg(long, global = true, env = "GTOPX_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the instances, or describe one in full.
    Info {
        id: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate one or more decision vectors.
    Eval {
        id: u32,
        /// Inline vector, comma or space separated.
        #[arg(long, conflicts_with = "file", allow_hyphen_values = true)]
        x: Option<String>,
        /// File with one vector per line; `#` starts a comment.
        #[arg(long, required_unless_present = "x")]
        file: Option<PathBuf>,
    },
    /// Local random sampling around a center point.
    Sample {
        id: u32,
        /// File holding the center vector.
        #[arg(long)]
        center: PathBuf,
        #[arg(long)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Full 1001 x 1001 grid over two variables (1-based indices).
    Grid {
        id: u32,
        /// File holding the base vector; other variables stay at its values.
        #[arg(long)]
        base: PathBuf,
        i: usize,
        j: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Evaluation throughput on uniform random points.
    Bench {
        id: u32,
        #[arg(long, default_value_t = 100_000)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let pool = commands::pool(cli.threads)?;
    pool.install(|| match cli.command {
        Command::Info { id, json } => commands::info(id, json),
        Command::Eval { id, x, file } => commands::eval(id, x.as_deref(), file.as_deref()),
        Command::Sample { id, center, count, seed, out } => commands::sample(id, &center, count, seed, &out),
        Command::Grid { id, base, i, j, out } => commands::grid(id, &base, i, j, &out),
        Command::Bench { id, count, seed } => commands::bench(id, count, seed, pool.current_num_threads()),
    })
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors by itself.
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
