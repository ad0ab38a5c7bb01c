use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "hyperzeta", version, about = "Multiple polylogarithms, multiple zeta values and hypergeometric identities")]
pub struct Cli {
    /// Certified absolute error target (at least 1e-14).
    #[arg(long, global = true, env = "HYPERZETA_PRECISION")]
    pub precision: Option<f64>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    JsonLines,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a polylogarithm, a zeta value or the hypergeometric function.
    #[command(subcommand)]
    Eval(EvalCommand),
    /// Expand F(-l3, l1; 1-l2-l3; z) in the lambdas through profile sums.
    Expand(ExpandArgs),
    /// Apply a sequence transform to a {1,2,3}-sequence.
    Transform(TransformArgs),
    /// Verify one or more identities.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum EvalCommand {
    /// Li(k; z) for an index, or the regularized Li(w; z) for a word.
    Li(LiArgs),
    /// zeta(k) for an admissible index.
    Zeta(ZetaArgs),
    /// The Gauss hypergeometric function F(alpha, beta; gamma; z).
    F(FArgs),
}

#[derive(Debug, Args)]
pub struct LiArgs {
    /// Multi-index such as 2,1.
    #[arg(long, conflicts_with = "word", required_unless_present = "word")]
    pub index: Option<String>,
    /// Word over {x, y} such as yx.
    #[arg(long)]
    pub word: Option<String>,
    #[arg(long, allow_negative_numbers = true)]
    pub z: f64,
}

#[derive(Debug, Args)]
pub struct ZetaArgs {
    /// Admissible multi-index such as 3 or 3,1.
    #[arg(long)]
    pub index: String,
}

#[derive(Debug, Args)]
pub struct FArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub gamma: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub z: f64,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[arg(long)]
    pub z: f64,
    /// Truncation degree in the lambdas.
    #[arg(long, default_value_t = 3)]
    pub degree: u32,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    /// One of t0, t0prime, t1, tinf.
    #[arg(long)]
    pub which: String,
    /// Sequence such as 1,3,2.
    #[arg(long)]
    pub mu: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Identity to check; may be repeated or comma separated.
    #[arg(long, value_delimiter = ',', required_unless_present = "all")]
    pub identity: Vec<String>,
    /// Check every identity.
    #[arg(long, conflicts_with = "identity")]
    pub all: bool,
    /// Quick profile: weight <= 6, degree <= 4, precision 1e-9.
    #[arg(long, conflicts_with = "full")]
    pub quick: bool,
    /// Full profile (default): weight <= 8, degree <= 5, precision 1e-11.
    #[arg(long)]
    pub full: bool,
    #[arg(long)]
    pub max_weight: Option<usize>,
    #[arg(long)]
    pub degree: Option<u32>,
    /// Sample points, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub z: Option<Vec<f64>>,
    /// Worker threads (0 = one per core).
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
    /// Seed for randomized sweeps.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}
