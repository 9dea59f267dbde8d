//! `racks` command-line tool.
//!
//! Exit status: 0 success or positive verdict, 1 negative verdict, 2 usage
//! or parse error, 3 resource cap exceeded.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use racks::enumerate::Engine;
use racks::Kind;

/// Hard ceilings for the cap overrides.
const BRUTE_CAP_LIMIT: usize = racks::enumerate::BRUTE_HARD_LIMIT;
const DEGREE_CAP_LIMIT: usize = 7;

#[derive(Parser, Debug)]
#[command(name = "racks", version, about = "Finite racks, quandles and kei")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format: plain text, or a single JSON document.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the output (text or document) to this file instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Worker threads for the search engines (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    /// Largest order accepted by the brute-force engine.
    #[arg(long, default_value_t = racks::enumerate::DEFAULT_BRUTE_CAP, global = true)]
    pub brute_cap: usize,

    /// Largest degree for subgroup-class enumeration.
    #[arg(long, default_value_t = racks::subgroups::DEFAULT_DEGREE_CAP, global = true)]
    pub degree_cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Doc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Rack,
    Quandle,
    Kei,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Rack => Kind::Rack,
            KindArg::Quandle => Kind::Quandle,
            KindArg::Kei => Kind::Kei,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Brute,
    Structured,
    Both,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Brute => Engine::Brute,
            EngineArg::Structured => Engine::Structured,
            EngineArg::Both => Engine::Both,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a table as not_rack, rack, quandle or kei.
    Validate { file: PathBuf },
    /// Print the canonical form of a rack.
    Canon { file: PathBuf },
    /// Test two racks for isomorphism.
    Iso { a: PathBuf, b: PathBuf },
    /// Build a rack from a blueprint file.
    Construct { file: PathBuf },
    /// Write the blueprint of a rack.
    Decompose { file: PathBuf },
    /// Build the kei X_E from an E-matrix file.
    Xe {
        #[arg(long)]
        n: usize,
        file: PathBuf,
    },
    /// Count isomorphism classes of a given order.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Rack)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = EngineArg::Structured)]
        engine: EngineArg,
        /// Write the canonical representatives to this file.
        #[arg(long)]
        emit_tables: Option<PathBuf>,
    },
    /// Exponent constants, lower-bound arithmetic and observed counts.
    Report {
        /// Single order (same as --from N --to N).
        #[arg(long, conflicts_with_all = ["from", "to"])]
        n: Option<usize>,
        #[arg(long, requires = "to")]
        from: Option<usize>,
        #[arg(long, requires = "from")]
        to: Option<usize>,
        #[arg(long, value_enum, default_value_t = EngineArg::Structured)]
        engine: EngineArg,
    },
    /// Golden X_E table check and dual-engine agreement for n <= 3.
    Selftest,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.brute_cap > BRUTE_CAP_LIMIT {
        eprintln!("error: --brute-cap {} exceeds the hard limit {BRUTE_CAP_LIMIT}", cli.brute_cap);
        return ExitCode::from(2);
    }
    if cli.degree_cap > DEGREE_CAP_LIMIT {
        eprintln!("error: --degree-cap {} exceeds the hard limit {DEGREE_CAP_LIMIT}", cli.degree_cap);
        return ExitCode::from(2);
    }
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        pool = pool.num_threads(j);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    };
    let code = pool.install(|| commands::run(&cli));
    ExitCode::from(code)
}
