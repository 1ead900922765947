use clap::{Args, Parser, Subcommand};

/// Exact LOCC and two-qubit catalysis decisions for four-level bipartite pure states.
///
/// Rationals may be written as `n/d`, integers, or decimals (`0.45`, `1e-3`).
/// Vectors are comma separated: `--source 0.4,0.4,0.1,0.1`.
#[derive(Debug, Parser)]
#[command(name = "entcat", version)]
pub struct Cli {
    /// Read a JSON request document from standard input. Flags override its fields.
    #[arg(long, global = true)]
    pub stdin: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Nielsen's criterion: is source -> target possible by LOCC alone?
    CheckLocc(PairArgs),
    /// Full catalysis report: verdict, epsilons, m, M and the feasible intervals.
    Analyze(PairArgs),
    /// Check one catalyst against both the theorem and the brute-force oracle.
    Validate(ValidateArgs),
    /// Oracle verdicts over a grid of two-qubit catalyst weights, as CSV.
    Sweep(SweepArgs),
    /// Build a pair whose catalyst bounds are exactly m0 and M0.
    Construct(ConstructArgs),
    /// Lorenz curve points of one or more spectra, as CSV blocks.
    Lorenz(LorenzArgs),
}

#[derive(Debug, Args)]
pub struct PairArgs {
    /// Source Schmidt coefficients (four values)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub source: Option<Vec<String>>,

    /// Target Schmidt coefficients (four values)
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub target: Option<Vec<String>>,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub pair: PairArgs,

    /// Catalyst Schmidt coefficients (any length)
    #[arg(long, value_delimiter = ',', conflicts_with = "p", allow_hyphen_values = true)]
    pub catalyst: Option<Vec<String>>,

    /// Two-qubit catalyst weight, shorthand for --catalyst p,1-p
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[command(flatten)]
    pub pair: PairArgs,

    /// Grid denominator d: probes every k/d in [1/2, 1] [default: 1000]
    #[arg(long)]
    pub denominator: Option<u32>,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Prescribed lower bound m0 > 0
    #[arg(long, allow_hyphen_values = true)]
    pub m0: Option<String>,

    /// Prescribed upper bound 0 < M0 < 1
    #[arg(long = "M0", allow_hyphen_values = true)]
    pub big_m0: Option<String>,

    /// Use this mu instead of choosing one automatically
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
}

#[derive(Debug, Args)]
pub struct LorenzArgs {
    /// A comma-separated spectrum; repeat for several curves
    #[arg(long = "spectrum", allow_hyphen_values = true)]
    pub spectra: Vec<String>,
}
