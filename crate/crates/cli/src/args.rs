//! Command-line argument definitions.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use lapsim::{CostModel, PolicyKind};

#[derive(Debug, Parser)]
#[command(
    name = "lapsim",
    version,
    about = "List accessing simulator: MTF/TRANS/FC policies, generated request sequences, and exact closed-form cost checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Serve a request sequence under one policy and print the total cost
    Simulate(SimulateArgs),
    /// Print the closed-form MTF cost for a generated sequence
    Predict(PredictArgs),
    /// Cross-check closed-form predictions against simulation over a sweep
    Verify(VerifyArgs),
    /// Emit the C1/C2 cost series behind the comparison curves as CSV
    Sweep(SweepArgs),
    /// Serve the same sequence under all three policies and report each total
    Compare(CompareArgs),
}

/// Flags that select a generated sequence.
#[derive(Debug, Args)]
pub struct SequenceSelection {
    /// List size n; the list starts as (1, ..., n)
    #[arg(long)]
    pub n: Option<usize>,

    /// How many times the block is repeated
    #[arg(long)]
    pub k: Option<usize>,

    /// Which sequence type to generate
    #[arg(long = "type", value_enum)]
    pub seq_type: Option<TypeArg>,

    /// Permutation block for --type t3, as comma-separated item ids
    #[arg(long, value_delimiter = ',')]
    pub perm: Option<Vec<u32>>,

    /// Subsequence block for --type t4, as comma-separated distinct item ids
    #[arg(long, value_delimiter = ',')]
    pub subseq: Option<Vec<u32>>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub seq: SequenceSelection,

    /// Read `n` and the sequence from a file instead of generating them
    #[arg(long)]
    pub seq_file: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "mtf")]
    pub algo: AlgoArg,

    #[arg(long, value_enum, default_value = "full")]
    pub model: ModelArg,

    /// Print one CSV line per request (j,item,position,cost) before the total
    #[arg(long)]
    pub trace: bool,
}

#[derive(Debug, Args)]
pub struct PredictArgs {
    #[command(flatten)]
    pub seq: SequenceSelection,

    #[arg(long, value_enum, default_value = "full")]
    pub model: ModelArg,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest list size in the sweep
    #[arg(long)]
    pub max_n: usize,

    /// Largest repetition count in the sweep
    #[arg(long)]
    pub max_k: usize,

    /// Random t3/t4 instances per (n, k) cell
    #[arg(long, default_value_t = 5)]
    pub samples: usize,

    /// Base seed for the random instances
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Flip one predicted value to prove a mismatch is caught (exit 2)
    #[arg(long)]
    pub self_test_corrupt: bool,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Which data series to emit: 2 (sweep n), 3 (sweep k), or 4 (n = k = t)
    #[arg(long)]
    pub figure: u8,

    /// Inclusive range for the swept variable, e.g. 1..8
    #[arg(long)]
    pub range: String,

    /// Write the CSV here instead of standard output
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Fixed k for --figure 2 (default 5)
    #[arg(long)]
    pub k: Option<usize>,

    /// Fixed n for --figure 3 (default 3)
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub seq: SequenceSelection,

    /// Read `n` and the sequence from a file instead of generating them
    #[arg(long)]
    pub seq_file: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "full")]
    pub model: ModelArg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TypeArg {
    T1,
    T2,
    T3,
    T4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Mtf,
    Trans,
    Fc,
}

impl From<AlgoArg> for PolicyKind {
    fn from(arg: AlgoArg) -> Self {
        match arg {
            AlgoArg::Mtf => PolicyKind::Mtf,
            AlgoArg::Trans => PolicyKind::Trans,
            AlgoArg::Fc => PolicyKind::Fc,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Full,
    Partial,
}

impl From<ModelArg> for CostModel {
    fn from(arg: ModelArg) -> Self {
        match arg {
            ModelArg::Full => CostModel::Full,
            ModelArg::Partial => CostModel::Partial,
        }
    }
}
