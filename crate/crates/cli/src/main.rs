//! `ginv`: enumerate and count G-invariant codes from a JSON problem file.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "ginv", version, about = "G-invariant linear codes over finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Problem file (JSON)
    pub problem: PathBuf,
    /// Seed for randomized idempotent splitting; overrides the problem file
    #[arg(long)]
    pub seed: Option<u64>,
    /// Scan cap (vectors per component), or the space cap for `oracle`
    #[arg(long)]
    pub cap: Option<u128>,
    /// Upper bound on the group order
    #[arg(long)]
    pub max_order: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Analyze homogeneous components on separate threads
    #[arg(long)]
    pub parallel: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Emit {
    Generators,
    Basis,
    Both,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Central primitive idempotents and homogeneous components
    Components(Common),
    /// Simple submodules of each component
    Simples(Common),
    /// Index sets produced by the sum-of-simples pass, per component
    Sums(Common),
    /// Every invariant code, one record per line
    Enumerate {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Emit::Generators)]
        emit: Emit,
        /// Compute minimum weights for codes up to this dimension
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Number of invariant codes
    Count(Common),
    /// Number of nonzero one-generator codes
    #[command(name = "count-1gen")]
    CountOneGen(Common),
    /// Bases from primitive idempotents, for one record or all of them
    Basis {
        #[command(flatten)]
        common: Common,
        /// Position of the record in enumeration order
        #[arg(long)]
        record: Option<usize>,
    },
    /// Check a monomial matrix as a weight-preserving isomorphism onto F[G]^t
    IsoCheck {
        #[command(flatten)]
        common: Common,
        /// Matrix file: a list of rows or {"matrix": rows}
        matrix: PathBuf,
    },
    /// Search for a weight-preserving isomorphism onto F[G]^t
    IsoSearch {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1_000_000)]
        budget: u64,
    },
    /// All submodules by brute force (tiny instances only)
    Oracle(Common),
    /// Check the idempotents listed in the problem file
    VerifyIdempotents(Common),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    let result = match cli.command {
        Command::Components(c) => commands::components(&c, &mut out),
        Command::Simples(c) => commands::simples(&c, &mut out),
        Command::Sums(c) => commands::sums(&c, &mut out),
        Command::Enumerate { common, emit, max_dim } => commands::enumerate(&common, emit, max_dim, &mut out),
        Command::Count(c) => commands::count(&c, false, &mut out),
        Command::CountOneGen(c) => commands::count(&c, true, &mut out),
        Command::Basis { common, record } => commands::basis(&common, record, &mut out),
        Command::IsoCheck { common, matrix } => commands::iso_check(&common, &matrix, &mut out),
        Command::IsoSearch { common, budget } => commands::iso_search(&common, budget, &mut out),
        Command::Oracle(c) => commands::oracle(&c, &mut out),
        Command::VerifyIdempotents(c) => commands::verify_idempotents(&c, &mut out),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) if is_broken_pipe(&err) => ExitCode::SUCCESS,
        Err(err) => {
            let core = err.chain().find_map(|e| e.downcast_ref::<ginv_core::Error>());
            match core {
                Some(e) => eprintln!("error[{}]: {err:#}", e.code()),
                None => eprintln!("error: {err:#}"),
            }
            if core.is_some_and(|e| e.is_resource_cap()) {
                ExitCode::from(3)
            } else {
                ExitCode::from(2)
            }
        }
    }
}

/// `ginv enumerate ... | head` closes stdout early; that is not a failure.
fn is_broken_pipe(err: &anyhow::Error) -> bool {
    err.chain().filter_map(|e| e.downcast_ref::<std::io::Error>()).any(|e| e.kind() == std::io::ErrorKind::BrokenPipe)
}
