//! Command-line front end for `birack-core`.
//!
//! [`run`] takes the arguments and output streams explicitly so the binary
//! and the tests share one code path.

pub mod commands;
pub mod file;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use birack_core::enumerate::{Bounds, Enumerator, BOUND_ENV_VAR};
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::file::ParseError;

#[derive(Debug, Parser)]
#[command(name = "birack", version, about = "Finite biracks, cycle sets and their retractions")]
pub struct Cli {
    /// Report style.
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    /// One `key: value` pair per line.
    Machine,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the axioms of a structure file and classify it.
    Check { path: PathBuf },
    /// Compute the retraction of a birack.
    Retract {
        path: PathBuf,
        /// Iterate the retraction.
        #[arg(long)]
        tower: bool,
        /// Maximum number of retraction steps (default: the size).
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Convert between cycle sets and involutive biracks.
    Convert {
        path: PathBuf,
        #[arg(long, value_enum)]
        to: Target,
        /// Write biracks as tables rather than translations.
        #[arg(long)]
        tables: bool,
    },
    /// Enumerate all structures of one size.
    Enumerate(EnumerateArgs),
    /// Run the property suite on all sizes up to `n`.
    Props {
        n: usize,
        /// Run only this property.
        #[arg(long)]
        property: Option<String>,
        #[command(flatten)]
        jobs: Jobs,
    },
    /// Print a named structure.
    Builtin {
        /// Structure name; omit to list the names.
        name: Option<String>,
        /// Print with this index base instead of the default.
        #[arg(long)]
        base: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Birack,
    Cycleset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumKind {
    Birack,
    LeftQuasigroup,
    Cycleset,
    Mode,
}

#[derive(Debug, Args)]
pub struct Jobs {
    /// Worker threads (0: one per core).
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    pub n: usize,
    #[arg(long, value_enum, default_value_t = EnumKind::Birack)]
    pub kind: EnumKind,
    #[arg(long)]
    pub involutive: bool,
    #[arg(long)]
    pub square_free: bool,
    /// `∖∘` is right cyclic.
    #[arg(long)]
    pub right_cyclic: bool,
    /// `∘` is a mode.
    #[arg(long)]
    pub mode: bool,
    /// Keep one birack per isomorphism class.
    #[arg(long)]
    pub up_to_iso: bool,
    #[arg(long)]
    pub count_only: bool,
    #[command(flatten)]
    pub jobs: Jobs,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] birack_core::Error),
    /// A structure failed a check; the report has already been printed.
    #[error("{0}")]
    Semantic(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use birack_core::Error as E;
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Usage(_) => 2,
            CliError::Core(E::BoundExceeded { .. } | E::UnknownBuiltin(_) | E::UnknownProperty(_)) => 2,
            CliError::Core(_) | CliError::Semantic(_) => 1,
        }
    }
}

fn bounds_from_env() -> Result<Bounds, CliError> {
    match std::env::var(BOUND_ENV_VAR) {
        Err(_) => Ok(Bounds::default()),
        Ok(v) => v
            .trim()
            .parse()
            .map(Bounds::uniform)
            .map_err(|_| CliError::Usage(format!("{BOUND_ENV_VAR}={v} is not a size"))),
    }
}

pub fn enumerator(jobs: usize) -> Result<Enumerator, CliError> {
    Ok(Enumerator::new(bounds_from_env()?, jobs))
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit status: 0 success, 1 a structure failed a check, 2 bad input.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{text}");
            } else {
                let _ = write!(err, "{text}");
            }
            return code;
        }
    };
    match commands::dispatch(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
