//! Command-line front end, instance/result file formats and benchmarks.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or contract
//! error, 3 parse error.

mod bench;
mod commands;
mod format;
pub mod generate;
mod record;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;

pub use commands::{run_algorithm, select_algorithm, Instance};
pub use format::{CoordKind, Header, InstanceFile, Kind, Meta, Payload};
pub use record::{value_json, ResultRecord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse(_) | Error::Io(_) => EXIT_PARSE,
        _ => EXIT_USAGE,
    }
}

#[derive(Debug, Parser)]
#[command(name = "onecenter", version, about = "Discrete 1-center, 1-median and diameter solvers")]
pub struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve one instance file and print a JSON result record.
    Solve(SolveArgs),
    /// Generate an instance file.
    Gen(GenArgs),
    /// Cross-check an algorithm against the brute-force oracle.
    Verify(VerifyArgs),
    /// Time solvers and print CSV.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Auto,
    L1Fast,
    LinfFast,
    UlamApprox,
    Brute,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Auto => "auto",
            Algo::L1Fast => "l1-fast",
            Algo::LinfFast => "linf-fast",
            Algo::UlamApprox => "ulam-approx",
            Algo::Brute => "brute",
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SolveOpts {
    /// Overrides the metric in the file header (l1, l2, l0/hamming, linf,
    /// ulam, ulam-moves, edit).
    #[arg(long)]
    pub metric: Option<String>,
    /// center, median or diameter.
    #[arg(long, default_value = "center")]
    pub objective: String,
    #[arg(long, value_enum, default_value = "auto")]
    pub algo: Algo,
    /// Approximation slack; with `--algo auto` it selects ulam-approx.
    #[arg(long)]
    pub eps: Option<f64>,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub opts: SolveOpts,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
    #[command(flatten)]
    pub opts: SolveOpts,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Gadget {
    /// Hitting-set instance.
    Hsc,
    /// Hitting-set instance embedded as 0/1 points.
    HscLp,
    /// Bit vectors as permutations.
    Ham2ulam,
    /// Bit vectors as strings under a random block code.
    Ham2edit,
    /// Random facility and client strings, padded into one string set.
    PadEdit,
    RandomPoints,
    RandomPerms,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HscMode {
    Random,
    Yes,
    No,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub gadget: Gadget,
    /// Number of items (sets per side for hsc).
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    /// Dimension, permutation length or bit-vector length.
    #[arg(long, default_value_t = 8)]
    pub dim: usize,
    /// Universe size (hsc) or string length (pad-edit).
    #[arg(long, default_value_t = 6)]
    pub m: usize,
    #[arg(long, value_enum, default_value = "random")]
    pub mode: HscMode,
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    #[arg(long, default_value = "l1")]
    pub metric: String,
    /// Explicit bit vectors such as `0110` (ham2ulam, ham2edit).
    #[arg(long, value_delimiter = ',')]
    pub bits: Vec<String>,
    /// Random character moves from the identity (random-perms).
    #[arg(long)]
    pub moves: Option<usize>,
    /// Coordinates are drawn from `[-range, range]` (random-points).
    #[arg(long, default_value_t = 1_000_000)]
    pub range: i64,
    /// Real instead of integer coordinates (random-points).
    #[arg(long)]
    pub real: bool,
    #[arg(long, default_value_t = 2)]
    pub n_facilities: usize,
    #[arg(long, default_value_t = 2)]
    pub n_clients: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Output file (default: standard output).
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    L1Scaling,
    UlamPairs,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub suite: Suite,
    /// Dimension or permutation length (default: 8 for l1-scaling, 256 for
    /// ulam-pairs).
    #[arg(long)]
    pub dim: Option<usize>,
    /// Point counts (l1-scaling).
    #[arg(long, value_delimiter = ',', default_value = "16384,32768,65536,131072")]
    pub sizes: Vec<usize>,
    /// Point counts also timed with brute force (l1-scaling).
    #[arg(long, value_delimiter = ',')]
    pub brute_sizes: Vec<usize>,
    /// Permutations per instance (ulam-pairs).
    #[arg(long, default_value_t = 64)]
    pub n: usize,
    /// Moves per permutation (ulam-pairs; default: a low-regime amount).
    #[arg(long)]
    pub moves: Option<usize>,
    #[arg(long, default_value_t = 3)]
    pub reps: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Parses `args` and runs the command, writing to `out` and `err`.
/// Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        if t == 0 {
            let _ = writeln!(err, "error: --threads must be positive");
            return EXIT_USAGE;
        }
        builder = builder.num_threads(t);
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = pool.install(|| match &cli.command {
        Command::Solve(a) => commands::solve(a, out),
        Command::Gen(a) => commands::generate(a, out),
        Command::Verify(a) => commands::verify(a, out),
        Command::Bench(a) => bench::bench(a, out, err),
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
