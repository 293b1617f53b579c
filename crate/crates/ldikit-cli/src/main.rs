use clap::{Parser, Subcommand};
use ldikit_cli::commands::{self, BoundArgs, CliError, RandomArgs};
use std::path::PathBuf;

/// Qudit stabilizer codes in local-dimension-invariant form: build,
/// certify, and probe code files.
///
/// Exit codes: 0 success, 2 validation failure, 3 search budget exhausted,
/// 4 parse error. `LDIKIT_SEARCH_BUDGET` overrides the global search
/// budget.
#[derive(Parser)]
#[command(name = "ldikit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print parameters, CSS status, and (for integer forms) the
    /// certification report of a code file.
    Inspect { file: PathBuf },

    /// Certify a mod-q code file into local-dimension-invariant form.
    Ldi {
        file: PathBuf,
        /// Construction method: prescriptive | signs.
        #[arg(long, default_value = "prescriptive")]
        method: String,
        /// Output code file (mod inf).
        #[arg(long)]
        out: PathBuf,
        /// Residue system for integer lifts: symmetric | nonnegative.
        #[arg(long, default_value = "symmetric")]
        residues: String,
    },

    /// Exact distance of a code at a prime local dimension.
    Distance {
        file: PathBuf,
        /// Prime local dimension.
        #[arg(short, long)]
        prime: u64,
        /// Cap on the enumerated error weight (default: n).
        #[arg(long)]
        wmax: Option<usize>,
        /// Use the block-wise CSS search.
        #[arg(long)]
        css: bool,
    },

    /// Bound calculators: packing bound, promise cutoffs, entry bound.
    Bounds {
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        k: Option<u64>,
        #[arg(long)]
        d: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
        /// Largest absolute entry of the integer form.
        #[arg(long = "B")]
        max_entry: Option<u64>,
    },

    /// Emit a quantum Hamming family member [[2^N−1, 2^N−1−2N, 3]].
    Hamming {
        /// Number of parity bits N (≥ 3).
        #[arg(long = "N")]
        bits: usize,
        /// Emit the certified B = 1 integer form instead of the mod-2 code.
        #[arg(long)]
        ldi: bool,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Distance sweep of a CSS LDI file across primes; CSV on stdout.
    Sweep {
        file: PathBuf,
        /// Comma-separated primes, e.g. 2,3,5,7. An empty list gives a
        /// header-only report.
        #[arg(long, default_value = "")]
        primes: String,
        /// Cap on the enumerated error weight (default: n).
        #[arg(long)]
        wmax: Option<usize>,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },

    /// Seeded rejection sampling of a code with the given parameters.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Refuse parameter sets that violate the packing bound.
        #[arg(long)]
        strict_gqhb: bool,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Inspect { file } => commands::inspect(&file),
        Command::Ldi {
            file,
            method,
            out,
            residues,
        } => {
            let residues = commands::parse_residues(&residues)?;
            commands::ldi(&file, &method, &out, residues)
        }
        Command::Distance {
            file,
            prime,
            wmax,
            css,
        } => commands::distance(&file, prime, wmax, css),
        Command::Bounds {
            n,
            k,
            d,
            q,
            max_entry,
        } => commands::bounds(BoundArgs {
            n,
            k,
            d,
            q,
            max_entry,
        }),
        Command::Hamming { bits, ldi, out } => commands::hamming_cmd(bits, ldi, out.as_deref()),
        Command::Sweep {
            file,
            primes,
            wmax,
            out,
        } => {
            let primes = commands::parse_primes(&primes)?;
            commands::sweep(&file, &primes, wmax, out.as_deref())
        }
        Command::Random {
            n,
            k,
            d,
            q,
            trials,
            seed,
            strict_gqhb,
            out,
        } => commands::random(
            RandomArgs {
                n,
                k,
                d,
                q,
                trials,
                seed,
                strict_gqhb,
            },
            out.as_deref(),
        ),
    }
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {}", err.message);
        std::process::exit(err.code);
    }
}
