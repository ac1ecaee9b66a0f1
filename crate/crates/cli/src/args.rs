use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "hookcsp", version, about = "Promotion and cyclic sieving on tableaux of shape (m, n^b)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stream every tableau of a family, one JSON object per line.
    Enumerate(FamilyArgs),
    /// Apply promotion `power` times.
    Promote {
        #[command(flatten)]
        input: TableauInput,
        #[arg(long, default_value_t = 1)]
        power: u64,
    },
    /// The cycle of a tableau under promote^step.
    Orbit {
        #[command(flatten)]
        input: TableauInput,
        #[arg(long, default_value_t = 1)]
        step: u64,
    },
    /// Charge and cocharge of a tableau's reading word, or of a word.
    Cocharge {
        /// Comma-separated word, used instead of a tableau.
        #[arg(long, value_delimiter = ',', conflicts_with_all = ["tableau", "file"])]
        word: Option<Vec<u32>>,
        #[command(flatten)]
        input: TableauInput,
    },
    /// Kostka-Foulkes polynomial of a family.
    Kostka {
        #[command(flatten)]
        family: FamilyArgs,
        /// Use cocharge instead of charge.
        #[arg(long)]
        modified: bool,
    },
    /// Free-entry multiset of a tableau of shape (m, n^b).
    Phi {
        #[command(flatten)]
        input: TableauInput,
    },
    /// Rebuild the tableau with a given free-entry multiset.
    PhiInverse {
        #[command(flatten)]
        family: HookFamilyArgs,
        /// Comma-separated letters from {2, ..., b+2}; empty for the empty multiset.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        multiset: Vec<u32>,
    },
    /// Check cyclic sieving on one family.
    CspVerify {
        #[command(flatten)]
        family: HookFamilyArgs,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Check cyclic sieving on every family within bounds.
    Sweep(SweepArgs),
    /// Recompute the worked examples and check them.
    SeedExamples,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Table,
    Both,
}

/// A tableau from `--tableau`, `--file`, or stdin.
#[derive(Debug, Args)]
pub struct TableauInput {
    /// Tableau JSON: {"alphabet": k, "rows": [[...], ...]}.
    #[arg(long)]
    pub tableau: Option<String>,
    /// File holding tableau JSON ("-" for stdin).
    #[arg(long, conflicts_with = "tableau")]
    pub file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct HookFamilyArgs {
    #[arg(long)]
    pub m: u32,
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub b: u32,
    /// Content, comma-separated multiplicities of 1, 2, ...
    #[arg(long, value_delimiter = ',', required = true)]
    pub mu: Vec<u32>,
}

/// A family given either as `--shape` or as `--m --n --b`.
#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Partition shape, comma-separated.
    #[arg(long, value_delimiter = ',', conflicts_with_all = ["m", "n", "b"])]
    pub shape: Option<Vec<u32>>,
    #[arg(long, requires_all = ["n", "b"])]
    pub m: Option<u32>,
    #[arg(long, requires_all = ["m", "b"])]
    pub n: Option<u32>,
    #[arg(long, requires_all = ["m", "n"])]
    pub b: Option<u32>,
    #[arg(long, value_delimiter = ',', required = true)]
    pub mu: Vec<u32>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Largest number of cells m + nb.
    #[arg(long, default_value_t = 14)]
    pub max_cells: u32,
    /// Range of m as `lo:hi` or a single value.
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub b: Option<String>,
    /// Include contents with zero parts.
    #[arg(long)]
    pub allow_zero_parts: bool,
    /// Write NDJSON here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, env = "HOOKCSP_JOBS")]
    pub jobs: Option<usize>,
}
