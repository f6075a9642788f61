use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "antichain",
    version,
    about = "Identify a hidden antichain with superset queries",
    propagate_version = true
)]
pub struct Cli {
    /// Seed for randomized hidden antichains.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Pretty-print output with this many spaces per level (compact when absent).
    #[arg(long, global = true, value_name = "SPACES")]
    pub json_indent: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One-shot query families.
    #[command(subcommand)]
    Nonadaptive(Nonadaptive),
    /// Adaptive solvers and the exact referee.
    #[command(subcommand)]
    Adaptive(Adaptive),
    /// Lower-bound adversaries and certificates.
    #[command(subcommand)]
    Adversary(Adversary),
    /// Counting referees.
    #[command(subcommand)]
    Comb(Comb),
}

#[derive(Debug, Args)]
pub struct NK {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct HiddenSource {
    /// Hidden antichain as JSON, e.g. '{"n":4,"sets":[[1,2],[3]]}'.
    #[arg(long)]
    pub hidden: Option<String>,
    /// Draw the hidden antichain from --seed.
    #[arg(long)]
    pub random: bool,
}

#[derive(Debug, Subcommand)]
pub enum Nonadaptive {
    /// Print the optimal family for (n, k).
    Build(NK),
    /// Check that a family identifies every k-antichain (n <= 6).
    Verify {
        #[command(flatten)]
        nk: NK,
        /// Family JSON; defaults to the built family.
        #[arg(long)]
        family: Option<String>,
    },
    /// Decode an answer vector over the built family.
    Decode {
        #[command(flatten)]
        nk: NK,
        /// Answers as a JSON boolean array aligned with the built family.
        #[arg(long, conflicts_with_all = ["hidden", "random"])]
        answers: Option<String>,
        #[arg(long)]
        hidden: Option<String>,
        #[arg(long)]
        random: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum Adaptive {
    /// Run the minimal-cover solver against a truthful oracle.
    Solve {
        #[command(flatten)]
        nk: NK,
        #[command(flatten)]
        source: HiddenSource,
    },
    /// Run the 2n-query pair solver against a truthful oracle.
    SolveK2 {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        source: HiddenSource,
    },
    /// Exact worst-case adaptive query count by minimax (n <= 4).
    ExactF {
        #[command(flatten)]
        nk: NK,
        #[arg(long, default_value_t = 5_000_000)]
        node_budget: u64,
        /// Merge states equal up to relabelling.
        #[arg(long)]
        symmetry: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PlayStrategy {
    /// Partition adversary, played against the minimal-cover solver.
    Theorem5,
    /// Majority-count adversary, played against the pair solver.
    K2Counting,
}

#[derive(Debug, Subcommand)]
pub enum Adversary {
    /// Solver against adversary.
    Play {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, value_enum, default_value_t = PlayStrategy::Theorem5)]
        strategy: PlayStrategy,
    },
    /// Find two k-antichains a family cannot tell apart (n <= 5).
    Confusion {
        #[command(flatten)]
        nk: NK,
        /// Family JSON; defaults to the built family.
        #[arg(long)]
        family: Option<String>,
        /// Remove this set (JSON element list) from the family first.
        #[arg(long)]
        drop: Option<String>,
    },
    /// First-query counting certificate for pairs.
    CertificateK2 {
        #[arg(long)]
        n: usize,
        /// Size of the first query.
        #[arg(long)]
        size: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Comb {
    /// g(n, m) by brute force and by formula.
    G {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Minimal covers of a family.
    Mc {
        /// Family JSON.
        #[arg(long)]
        family: String,
    },
    /// A(n), the number of 2-antichains.
    CountAntichains {
        #[arg(long)]
        n: usize,
    },
    /// Smallest identifying family by exhaustive search (n <= 4).
    ExactH(NK),
}
