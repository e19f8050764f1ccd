use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use psl2cov_core::covering::DEFAULT_TMAX;

#[derive(Debug, Clone, Parser)]
#[command(
    name = "psl2cov",
    version,
    about = "Character tables and covering numbers of PSL2(q)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Omit the timestamp from JSON output.
    #[arg(long)]
    pub reproducible: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Print the character table.
    Table {
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Decompose a power of an irreducible character.
    Decompose {
        #[arg(long)]
        q: u64,
        /// One of triv, st, pp:k, dd:j, half+:1, half+:2, half-:1, half-:2.
        #[arg(long = "char")]
        character: String,
        #[arg(long, default_value_t = 1)]
        power: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Covering exponents of every nontrivial character.
    Covering {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = DEFAULT_TMAX)]
        tmax: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Table validity, root-sum closed forms, stated inner products and
    /// optionally the explicit-group cross check.
    Verify {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Covering numbers for every prime power in a range.
    Sweep {
        #[arg(long)]
        q_min: u64,
        #[arg(long)]
        q_max: u64,
        #[arg(long, default_value_t = DEFAULT_TMAX)]
        tmax: u32,
        /// Also write the CSV rows to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; defaults to the available parallelism.
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}
