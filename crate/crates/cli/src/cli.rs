use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

/// Seed used by the randomized commands when `--seed` is not given.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Parser)]
#[command(name = "skewbrace", version, about = "Construct, verify and analyze skew braces")]
pub struct Cli {
    /// Largest brace order accepted by lattice and automorphism searches.
    #[arg(long, global = true, env = "BRACE_MAX_ORDER")]
    pub max_order: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a brace file.
    Verify { file: PathBuf },
    /// Socle, centre, series, supersolubility and the Dedekind property.
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exit 0 if every sub-skew brace is an ideal, else 1 with a witness.
    Dedekind { file: PathBuf },
    /// Build a member of a named family.
    Construct(ConstructArgs),
    /// Enumerate skew braces of a given order.
    Enumerate(EnumerateArgs),
    /// Exit 0 with an isomorphism if the two braces are isomorphic, else 1.
    Iso { first: PathBuf, second: PathBuf },
    /// Set-theoretic solutions of the Yang-Baxter equation.
    #[command(subcommand)]
    Ybe(YbeCommand),
    /// Sample checks on the rational families.
    Rational(RationalArgs),
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// two_power, odd_p_cyclic, odd_p_nonabelian, trivial or almost_trivial.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub n: Option<u32>,
    /// Group file for the trivial and almost_trivial families.
    #[arg(long)]
    pub group: Option<PathBuf>,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub order: usize,
    /// `cyclic`, `elab` or a catalog index; all additive groups if absent.
    #[arg(long)]
    pub additive: Option<String>,
    /// One file per isomorphism class instead of one per labeled brace.
    #[arg(long)]
    pub up_to_iso: bool,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum YbeCommand {
    /// Write `r_B` for a brace file.
    FromBrace {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate a solution file and report its properties.
    Check { file: PathBuf },
    /// Apply the retraction `steps` times.
    Retract {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Multipermutation level; exit 1 if the retractions stall above size 1.
    Level {
        file: PathBuf,
        #[arg(long)]
        max_steps: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct RationalArgs {
    /// a2a, a2b, c1 or c2.
    #[arg(long)]
    pub variant: String,
    /// Comma-separated forbidden primes.
    #[arg(long, value_delimiter = ',', required = true)]
    pub forbidden: Vec<u64>,
    #[arg(long)]
    pub m1: Option<i64>,
    #[arg(long)]
    pub m2: Option<i64>,
    /// Distinguished element of the c1/c2 families, as `a` or `a/b`.
    #[arg(long)]
    pub x: Option<String>,
    #[arg(long, default_value_t = 1000)]
    pub sample: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Prime for the sub-brace that is not an ideal (a2b only).
    #[arg(long)]
    pub witness_prime: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}
