//! `quandles`: batch front end for quandle construction, tangle colorings
//! and admissibility checks.
//!
//! Exit status: 0 success, 1 failed validation, 2 non-admissible,
//! 64 usage error, 65 unreadable or malformed input, 70 internal error.

mod commands;
mod error;
mod inputs;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use error::{CliError, Status};

#[derive(Debug, Parser)]
#[command(name = "quandles", version, about = "Finite quandles, tangle colorings and admissibility criteria")]
struct Cli {
    /// Worker threads for parallel searches (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Where to write results; `-` is standard output.
    #[arg(long, short, global = true, default_value = "-")]
    output: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a table or tangle file and report the first violation.
    Validate {
        kind: ValidateKind,
        /// Input file, or `-` for standard input.
        file: String,
    },
    /// Build a quandle table or a built-in tangle file.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Count, list or decide colorings of a tangle by a quandle.
    Color(ColorArgs),
    /// Decide a closed-form admissibility criterion.
    Check {
        kind: CheckKind,
        #[arg(long)]
        quandle: String,
    },
    /// Print a generator/relation presentation.
    Present {
        #[command(subcommand)]
        kind: PresentKind,
    },
    /// Tabulate generalized Alexander quandles over the group catalog.
    Census {
        #[arg(long)]
        max_order: usize,
        /// Keep only isomorphism-class representatives.
        #[arg(long)]
        dedup: bool,
    },
    /// List catalog groups, or the index to label map of one group or named quandle.
    Catalog { name: Option<String> },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ValidateKind {
    Quandle,
    Group,
    Tangle,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum CheckKind {
    Hopf,
    Trefoil,
}

#[derive(Debug, Subcommand)]
pub enum ConstructKind {
    /// Conjugation quandle of a group.
    Conj {
        /// Catalog name (e.g. `quaternion8`) or group table file.
        #[arg(long)]
        group: String,
    },
    /// Generalized Alexander quandle `x ◁ y = σ(x y⁻¹) y`.
    Galex {
        #[arg(long)]
        group: String,
        /// Index into the sorted automorphism list (see `catalog`).
        #[arg(long, conflicts_with = "aut_map")]
        aut: Option<usize>,
        /// Explicit images of elements 0..n, comma separated.
        #[arg(long)]
        aut_map: Option<String>,
    },
    /// Quandle on G × N for a normal subgroup N.
    HopfExt {
        #[arg(long)]
        group: String,
        /// `center`, `whole`, `trivial`, `index:<k>` or `elements:<a>,<b>,...`.
        #[arg(long)]
        normal: String,
    },
    /// A named quandle: `trivial:<n>`, `dihedral:<n>` or `galex-q8-ijk`.
    CatalogQuandle {
        #[arg(long)]
        name: String,
    },
    /// A built-in tangle: `hopf`, `trefoil` or `unknot`.
    Tangle {
        #[arg(long)]
        name: String,
    },
}

#[derive(Debug, Args)]
struct ColorArgs {
    /// Tangle file or `builtin:<name>`.
    #[arg(long)]
    tangle: String,
    #[arg(long)]
    quandle: String,
    #[command(flatten)]
    mode: ColorModeFlags,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct ColorModeFlags {
    #[arg(long)]
    count: bool,
    /// List colorings, capped by QUANDLE_OUTPUT_CAP.
    #[arg(long)]
    list: bool,
    #[arg(long)]
    admissible: bool,
}

#[derive(Debug, Clone, Copy)]
pub enum ColorMode {
    Count,
    List,
    Admissible,
}

impl ColorModeFlags {
    fn mode(&self) -> ColorMode {
        if self.count {
            ColorMode::Count
        } else if self.list {
            ColorMode::List
        } else {
            ColorMode::Admissible
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum PresentKind {
    /// Associated group of a quandle.
    As {
        #[arg(long)]
        quandle: String,
    },
    /// Fundamental quandle of a tangle.
    Fundamental {
        #[arg(long)]
        tangle: String,
    },
}

fn run(cli: Cli) -> Result<Status, CliError> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(CliError::usage("--jobs must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(CliError::internal)?;
    }
    let mut out = inputs::open_output(&cli.output)?;
    let status = match &cli.command {
        Command::Validate { kind, file } => commands::validate(*kind, file, &mut out)?,
        Command::Construct { kind } => commands::construct(kind, &mut out)?,
        Command::Color(args) => commands::color(&args.tangle, &args.quandle, args.mode.mode(), &mut out)?,
        Command::Check { kind, quandle } => commands::check(*kind, quandle, &mut out)?,
        Command::Present { kind } => commands::present(kind, &mut out)?,
        Command::Census { max_order, dedup } => commands::census(*max_order, *dedup, &mut out)?,
        Command::Catalog { name } => commands::catalog(name.as_deref(), &mut out)?,
    };
    out.flush().map_err(|e| CliError::input(format!("write failed: {e}")))?;
    Ok(status)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(status) => status.into(),
        Err(e) => {
            eprintln!("quandles: {e}");
            e.exit_code()
        }
    }
}
