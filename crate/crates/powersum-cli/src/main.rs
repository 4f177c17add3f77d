//! Command-line surface: kernel evaluation, Gram export, prior sampling,
//! verification suites, and per-class figure data.

mod commands;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use powersum::Error;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "powersum",
    version,
    about = "Power-sum kernels and Gaussian processes on symmetric groups"
)]
struct Cli {
    /// Size of the worker thread pool (defaults to the number of cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the kernel at a pair of permutations.
    Kernel {
        /// Group degree.
        #[arg(long)]
        n: usize,
        /// Kernel vector z: comma-separated nonnegative values, fractions
        /// like 2/3 allowed.
        #[arg(long)]
        z: String,
        /// First permutation in one-line notation, e.g. "2 1 3".
        #[arg(long)]
        g: String,
        /// Second permutation; defaults to the identity.
        #[arg(long)]
        h: Option<String>,
        /// Divide z by its l1 norm first.
        #[arg(long)]
        normalize: bool,
    },
    /// Write a dense Gram matrix as CSV plus a JSON sidecar.
    Gram {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        z: String,
        /// Output CSV path; the sidecar lands at <out>.json.
        #[arg(long)]
        out: String,
        /// File with one permutation per line; defaults to the whole group.
        #[arg(long)]
        points: Option<String>,
        #[arg(long)]
        normalize: bool,
        /// Recorded in the sidecar (a Gram build itself is deterministic).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Draw prior samples and write them as CSV rows.
    Sample {
        /// exact | features | truncated
        #[arg(long)]
        mode: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        z: String,
        /// Number of draws.
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Features per draw (features and truncated modes).
        #[arg(long, default_value_t = 1000)]
        l: usize,
        /// Retained representations (truncated mode); defaults to all with
        /// positive weight.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: String,
        #[arg(long)]
        points: Option<String>,
        #[arg(long)]
        normalize: bool,
    },
    /// Run a verification suite; exits nonzero when a check fails.
    Verify {
        /// frobenius | characters | ginibre | plancherel | monotonic | psd | all
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Monte Carlo sample count where the suite uses one.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Kernel vector for the suites that need one.
        #[arg(long)]
        z: Option<String>,
    },
    /// Per-class kernel values and the conjugacy-class quotient graph.
    FigureData {
        #[arg(long)]
        n: usize,
        /// Repeatable; defaults to the four vectors
        /// 1/2,1/2  2/3,1/3  3/4,1/4  4/5,1/5.
        #[arg(long)]
        z: Vec<String>,
        /// Output prefix: writes <prefix>_<i>.csv per z, <prefix>.dot and
        /// <prefix>.json.
        #[arg(long)]
        out_prefix: String,
    },
    /// Dump the character table as CSV (degree at most 8).
    CharTable {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // ignore failure: the global pool may already be initialized
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    let outcome = match cli.command {
        Command::Kernel {
            n,
            z,
            g,
            h,
            normalize,
        } => commands::kernel(n, &z, &g, h.as_deref(), normalize),
        Command::Gram {
            n,
            z,
            out,
            points,
            normalize,
            seed,
        } => commands::gram(n, &z, &out, points.as_deref(), normalize, seed),
        Command::Sample {
            mode,
            n,
            z,
            count,
            l,
            r,
            seed,
            out,
            points,
            normalize,
        } => commands::sample(
            &mode,
            n,
            &z,
            count,
            l,
            r,
            seed,
            &out,
            points.as_deref(),
            normalize,
        ),
        Command::Verify {
            suite,
            n,
            m,
            count,
            seed,
            z,
        } => verify::run(&suite, n, m, count, seed, z.as_deref()),
        Command::FigureData { n, z, out_prefix } => commands::figure_data(n, &z, &out_prefix),
        Command::CharTable { n, out } => commands::char_table(n, &out),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1), // a verification-style check failed
        Err(CliError::Lib(e)) => {
            eprintln!("error: {}", e);
            match e {
                Error::CapExceeded { .. } | Error::ExplosionGuard { .. } => ExitCode::from(3),
                Error::Indefinite { .. } => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
        Err(CliError::Io(path, e)) => {
            eprintln!("error: {}: {}", path, e);
            ExitCode::from(2)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

/// CLI-level error: library errors keep their exit-code mapping, I/O and
/// flag problems are usage errors.
pub enum CliError {
    Lib(Error),
    Io(String, std::io::Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

pub type CliResult = Result<bool, CliError>;
