//! `lielevel`: batch front end for the stable-rationality certifiers.

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use lielevel_core::orbits::DEFAULT_ORBIT_BOUND;
use lielevel_core::Error;

mod commands;
mod golden;
mod render;

use render::Outcome;

const EXIT_DOMAIN: u8 = 1;
const EXIT_FAILED: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "lielevel", version, about = "Dimensions, branching laws and stable-rationality level certificates")]
struct Cli {
    /// Emit JSON (same as `--format json`).
    #[arg(long, global = true)]
    json: bool,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum GroupArg {
    Sl,
    Sp,
    So,
    O,
    G2,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum LabelArg {
    Plus,
    Minus,
    Empty,
}

/// A group and a highest weight.
#[derive(Args, Debug, Clone)]
pub struct Target {
    #[arg(long, value_enum)]
    pub group: GroupArg,

    /// `n` for SL_n and Sp_2n, `N` for SO_N and O_N; omitted for G2.
    #[arg(long)]
    pub n: Option<u32>,

    /// Comma-separated integers; G2 takes fundamental-weight coordinates `m1,m2`.
    #[arg(long, allow_hyphen_values = true)]
    pub weight: String,

    /// Extension label for O_N.
    #[arg(long, value_enum)]
    pub label: Option<LabelArg>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dimension of an irreducible representation.
    Dim(Target),
    /// Restriction to the next smaller group of the same family (G2 to SL3).
    Branch(Target),
    /// Graded pieces under the stabilizer of a generic standard vector (SL and Sp).
    Filtration(Target),
    /// E/R classification.
    Classify(Target),
    /// Certificate for the level of stable rationality.
    Level(Target),
    /// Weyl group orbit data for a weight of O_2n in ε-coordinates.
    Orbit(OrbitArgs),
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Headline level table and the table of least orbit contributions.
    Table,
    /// Runs every printed example and reports mismatches.
    Selftest,
}

#[derive(Args, Debug)]
pub struct OrbitArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub weight: String,

    /// Sign-change size; all of 1..=n when omitted.
    #[arg(long)]
    pub k: Option<usize>,

    /// Print every orbit element.
    #[arg(long)]
    pub list: bool,

    /// Largest rank for explicit enumeration.
    #[arg(long, env = "LIE_LEVEL_ORBIT_BOUND", default_value_t = DEFAULT_ORBIT_BOUND)]
    pub bound: usize,
}

#[derive(Subcommand, Debug)]
enum VerifyCommand {
    /// Trivial generic stabilizers of both O_2n extensions with λ_n = 0.
    AppendixA(SweepArgs),
    /// Kernel and stabilizer facts for Λ^3 C^8 and Λ^4 C^8.
    Harmonic,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 2)]
    pub n_min: usize,

    #[arg(long, default_value_t = 6)]
    pub n_max: usize,

    #[arg(long, default_value_t = 3)]
    pub max_entry: i64,

    /// Check a single weight of O_{2n} instead of sweeping; needs `--n`.
    #[arg(long, allow_hyphen_values = true, requires = "n")]
    pub weight: Option<String>,

    /// Rank `n` for `--weight`.
    #[arg(long)]
    pub n: Option<usize>,
}

/// Errors before any library call.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CertificationFailed(_) | Error::VerificationFailed(_) => EXIT_FAILED,
        _ => EXIT_DOMAIN,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Domain(_) => "domain",
        Error::NotApplicable(_) => "not_applicable",
        Error::OutOfRange(_) => "out_of_range",
        Error::Unsupported(_) => "unsupported",
        Error::CertificationFailed(_) => "certification_failed",
        Error::VerificationFailed(_) => "verification_failed",
        Error::Resource(_) => "resource",
        Error::Overflow => "overflow",
    }
}

fn dispatch(cmd: &Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Dim(t) => commands::dim(t),
        Command::Branch(t) => commands::branch(t),
        Command::Filtration(t) => commands::filtration(t),
        Command::Classify(t) => commands::classify(t),
        Command::Level(t) => commands::level(t),
        Command::Orbit(a) => commands::orbit(a),
        Command::Verify(VerifyCommand::AppendixA(a)) => commands::verify_appendix_a(a),
        Command::Verify(VerifyCommand::Harmonic) => commands::verify_harmonic(),
        Command::Table => commands::level_table(),
        Command::Selftest => golden::selftest(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let json = cli.json || cli.format == Format::Json;
    let mut out = std::io::stdout().lock();
    match dispatch(&cli.command) {
        Ok(o) => {
            let body = if json { render::json_string(&o.json) } else { o.text };
            let _ = writeln!(out, "{}", body.trim_end());
            ExitCode::from(o.code)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Lib(e)) => {
            if json {
                let v = serde_json::json!({ "error": error_kind(&e), "message": e.to_string() });
                let _ = writeln!(out, "{}", render::json_string(&v));
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
