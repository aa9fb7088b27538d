//! Command-line front end.
//!
//! Exit codes: 0 success, 2 usage or input error, 3 no rainbow copy, 4 no
//! formula value, 5 no known construction, 6 construction failed its check,
//! 7 inconclusive (budget or skipped verification), 8 verification
//! mismatch, 1 i/o failure.

mod commands;
mod dsl;
mod io;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

pub use dsl::{parse_pattern, render_pattern};
pub use io::{parse_coloring, read_coloring, serialize_coloring, write_coloring, HEADER};

use crate::formulas::CycleMode;

pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const NO_RAINBOW: i32 = 3;
    pub const NO_VALUE: i32 = 4;
    pub const NOT_CONSTRUCTIBLE: i32 = 5;
    pub const CONSTRUCTION_FAILED: i32 = 6;
    pub const INCONCLUSIVE: i32 = 7;
    pub const MISMATCH: i32 = 8;
}

#[derive(Debug, Parser)]
#[command(
    name = "antiramsey",
    version,
    about = "Anti-Ramsey numbers of small graphs"
)]
struct Cli {
    /// Output format for standard output.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CycleArg {
    AsPrinted,
    OracleCorrected,
}

impl From<CycleArg> for CycleMode {
    fn from(a: CycleArg) -> Self {
        match a {
            CycleArg::AsPrinted => CycleMode::AsPrinted,
            CycleArg::OracleCorrected => CycleMode::OracleCorrected,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Matching,
    Kp4tp2,
    Kp3tp2,
    P5tp2,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate the closed-form value of AR(n, pattern).
    Formula {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = CycleArg::OracleCorrected)]
        cycle_mode: CycleArg,
    },
    /// Write an extremal coloring and check it with the detector.
    Construct {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: std::path::PathBuf,
        /// Verify only when n is at most this.
        #[arg(long, default_value_t = crate::construct::DEFAULT_VERIFY_BOUND)]
        verify_bound: usize,
        /// Exit 0 even when verification was skipped.
        #[arg(long)]
        allow_skip: bool,
        /// Use the two-extra-color construction for spanning matchings.
        #[arg(long)]
        spanning_two_colors: bool,
    },
    /// Look for a rainbow copy of a pattern in a coloring file.
    Detect {
        #[arg(long)]
        coloring: std::path::PathBuf,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Compute AR(n, pattern) exactly by exhaustive search.
    Search {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        /// Only decide whether AR(n, pattern) >= m.
        #[arg(long)]
        at_least: Option<usize>,
        #[arg(long, default_value_t = 1)]
        tasks: usize,
        #[arg(long)]
        budget: Option<u64>,
        /// Write the witness coloring here.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Compare formula, search and construction.
    Verify {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = CycleArg::AsPrinted)]
        cycle_mode: CycleArg,
        #[arg(long, default_value_t = 1)]
        tasks: usize,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Print formula values for a family of patterns.
    Table {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        max_n: u64,
    },
}

/// Runs the command line `args` (program name first) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let json = cli.format == Format::Json;
    let mut ctx = commands::Ctx { out, err, json };
    let result = match cli.command {
        Command::Formula {
            pattern,
            n,
            cycle_mode,
        } => commands::formula(&mut ctx, &pattern, n, cycle_mode.into()),
        Command::Construct {
            pattern,
            n,
            out,
            verify_bound,
            allow_skip,
            spanning_two_colors,
        } => commands::construct(
            &mut ctx,
            &pattern,
            n,
            &out,
            crate::construct::ExtremalOptions {
                verify_bound,
                spanning_two_colors,
            },
            allow_skip,
        ),
        Command::Detect {
            coloring,
            pattern,
            budget,
        } => commands::detect(&mut ctx, &coloring, &pattern, budget),
        Command::Search {
            pattern,
            n,
            at_least,
            tasks,
            budget,
            out,
        } => commands::search(
            &mut ctx,
            &pattern,
            n,
            at_least,
            tasks,
            budget,
            out.as_deref(),
        ),
        Command::Verify {
            pattern,
            n,
            cycle_mode,
            tasks,
            budget,
        } => commands::verify(&mut ctx, &pattern, n, cycle_mode.into(), tasks, budget),
        Command::Table { family, max_n } => commands::table(&mut ctx, family, max_n),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            match e {
                crate::Error::Io(_) => exit::IO,
                _ => exit::USAGE,
            }
        }
    }
}
