mod cache;
mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

/// Exact mean connected-induced-subgraph orders of block graphs.
#[derive(Debug, Parser)]
#[command(name = "blockmean", version)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Worker threads for sweeps and scans (output does not depend on it).
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    /// Seed for random constructions.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Raise order caps to the long-running limits.
    #[arg(long, global = true)]
    pub long_run: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// CIS polynomial, N, W, M and per-vertex local means of one graph.
    Compute {
        #[arg(long)]
        input: PathBuf,
    },
    /// Run the lemma checks over every block graph up to an order.
    Verify {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Restrict to one statement (for example `mu` or `local-weight`).
        #[arg(long)]
        statement: Option<String>,
    },
    /// Exhaustive extremal scan of mean CIS order.
    Search {
        #[arg(long, value_enum, default_value_t = SearchFamily::Block)]
        family: SearchFamily,
        /// An order or an inclusive range such as `3..8`.
        #[arg(long, default_value = "3..8")]
        n: String,
    },
    /// Sub-k-tree mean of a given or seeded random k-tree.
    Ktree {
        #[arg(long)]
        k: usize,
        /// Edge-list file of the k-tree; without it a random one is built.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Order of the random k-tree.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Build and check one gluing or stretching family.
    Family {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Edge-list file of the host graph H.
        #[arg(long)]
        input: PathBuf,
        /// Anchor vertex of H; two comma-separated vertices for edge gluing.
        #[arg(long)]
        at: String,
        #[arg(long)]
        n: usize,
    },
    /// Apply mean-decreasing moves until the path is reached.
    Improve {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SearchFamily {
    Block,
    Connected,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FamilyArg {
    VertexGluing,
    EdgeGluing,
    Stretching,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.common.workers {
        if w == 0 {
            eprintln!("error: --workers must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build_global()
            .expect("thread pool is configured once");
    }
    let c = &cli.common;
    let result = match cli.command {
        Command::Compute { input } => commands::compute(c, &input),
        Command::Verify { max_n, statement } => commands::verify(c, max_n, statement.as_deref()),
        Command::Search { family, n } => {
            let family = match family {
                SearchFamily::Block => blockmean_core::Family::Block,
                SearchFamily::Connected => blockmean_core::Family::Connected,
            };
            commands::search(c, family, &n)
        }
        Command::Ktree { k, input, n } => commands::ktree(c, k, input.as_deref(), n),
        Command::Family {
            family,
            input,
            at,
            n,
        } => commands::family(c, family, &input, &at, n),
        Command::Improve { input } => commands::improve(c, &input),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
