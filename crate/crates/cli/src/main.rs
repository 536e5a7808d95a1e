//! Command-line front end: key generation, sequence generation, basin
//! permutations, statistical analysis, plotting, and the permutation
//! cipher, all over plain-text file formats.

mod commands;
mod io;
mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

/// Exit code for missing or unparseable files.
pub const EXIT_FILE: u8 = 2;
/// Exit code for validation failures.
pub const EXIT_VALIDATION: u8 = 3;
/// Exit code for integer overflow in the key transform.
pub const EXIT_OVERFLOW: u8 = 4;

/// Largest digit count the CLI accepts; 3^12 keeps sequence buffers at a
/// few megabytes. The library itself has no such cap.
pub const MAX_CLI_DIGITS: u32 = 12;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn file(path: &Path, err: &dyn std::fmt::Display) -> Self {
        Self {
            code: EXIT_FILE,
            message: format!("{}: {err}", path.display()),
        }
    }

    pub fn invalid_file(path: &Path, what: &str) -> Self {
        Self {
            code: EXIT_FILE,
            message: format!("{}: {what}", path.display()),
        }
    }

    pub fn validation(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_VALIDATION,
            message: message.into(),
        }
    }
}

impl From<tsf_core::Error> for CliError {
    fn from(err: tsf_core::Error) -> Self {
        Self {
            code: if err.is_overflow() {
                EXIT_OVERFLOW
            } else {
                EXIT_VALIDATION
            },
            message: err.to_string(),
        }
    }
}

/// Message file encoding for the cipher commands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    /// A-Z and space as characters (3-digit alphabet only).
    #[default]
    Text,
    /// Comma-separated decimal symbols, newline-free.
    Symbols,
}

#[derive(Parser)]
#[command(name = "tsf", version, about = "Ternary sign-flow subkey toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a reproducible random key file.
    Keygen {
        /// SplitMix64 seed; identical seeds give identical key files.
        #[arg(long)]
        seed: u64,
        /// Matrix dimension k (2..=12).
        #[arg(long)]
        digits: u32,
        /// Inclusive lower entry bound.
        #[arg(long, default_value_t = -9, allow_negative_numbers = true)]
        lo: i64,
        /// Exclusive upper entry bound.
        #[arg(long, default_value_t = 10, allow_negative_numbers = true)]
        hi: i64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Generate the subkey sequence r as single-column CSV.
    Gen {
        #[arg(long)]
        key: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Derive the basin permutation and write it as JSON.
    Perm {
        #[arg(long)]
        key: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also write the order as a single-column CSV, for plotting.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Run the statistical battery over a sequence CSV.
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        /// Symbol alphabet size N; values must lie in [0, N).
        #[arg(long)]
        alphabet_size: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Emit an SVG scatter of consecutive pairs, plus the pair CSV.
    Plot {
        #[arg(long = "in")]
        input: PathBuf,
        /// SVG output path; the pair CSV lands alongside with a .csv extension.
        #[arg(long)]
        out: PathBuf,
    },
    /// Encrypt a message file with the basin subkey of a key.
    Encrypt {
        #[arg(long)]
        key: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Skip characters outside the alphabet instead of failing.
        #[arg(long)]
        lenient: bool,
    },
    /// Decrypt a message file.
    Decrypt {
        #[arg(long)]
        key: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print every intermediate of the built-in 3x3 worked example.
    Demo,
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Keygen {
            seed,
            digits,
            lo,
            hi,
            out,
        } => commands::keygen(seed, digits, lo, hi, &out),
        Command::Gen { key, out } => commands::gen(&key, &out),
        Command::Perm { key, out, csv } => commands::perm(&key, &out, csv.as_deref()),
        Command::Analyze {
            input,
            alphabet_size,
            out,
        } => commands::analyze(&input, alphabet_size, &out),
        Command::Plot { input, out } => commands::plot(&input, &out),
        Command::Encrypt {
            key,
            input,
            out,
            format,
            lenient,
        } => commands::encrypt(&key, &input, &out, format, lenient),
        Command::Decrypt {
            key,
            input,
            out,
            format,
        } => commands::decrypt(&key, &input, &out, format),
        Command::Demo => commands::demo(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            if std::env::var_os("TSF_NO_COLOR").is_some() {
                eprintln!("error: {}", err.message);
            } else {
                eprintln!("\x1b[31merror:\x1b[0m {}", err.message);
            }
            ExitCode::from(err.code)
        }
    }
}
