//! Command-line front end for `tourney-codes`.
//!
//! [`run`] does all the work and returns the rendered report with an exit
//! status, so the binary is a thin wrapper and tests can drive it in process.

mod commands;
mod input;
mod report;
mod verify;

use clap::{Parser, Subcommand, ValueEnum};
use tourney_codes::{Error, Tolerances};

pub use commands::recheck_embedding;
pub use report::Report;
pub use verify::{run_checks, CheckOutcome, Level};

/// Stable exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    VerificationFailure = 1,
    InputError = 2,
    Inconsistency = 3,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

impl From<&Error> for Status {
    fn from(e: &Error) -> Self {
        match e {
            Error::Input(_) | Error::Parse { .. } => Status::InputError,
            Error::Inconsistency(_) => Status::Inconsistency,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Parser)]
#[command(name = "tourney-codes", version, about = "Minimum complex spherical 2-code embeddings of tournaments")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    pub format: Format,
    /// Relative gap below which sorted eigenvalues are merged.
    #[arg(long, env = "TOURNEY_CODES_EIG_TOL", global = true)]
    pub eig_tol: Option<f64>,
    /// Main angles below this count as zero.
    #[arg(long, env = "TOURNEY_CODES_BETA_TOL", global = true)]
    pub beta_tol: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectrum, type, minimum dimension and optimal angle.
    Analyze {
        /// A tournament line such as `3:101`, a file with one per line, or `-` for stdin.
        input: String,
    },
    /// Minimum-dimension embeddings with their verification.
    Embed {
        input: String,
        /// Re-verify the embeddings as written to the report.
        #[arg(long)]
        check: bool,
    },
    /// All isomorphism classes of one order, one canonical line each.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Isomorphism classes in the switching class of one tournament.
    SwitchingClass { input: String },
    /// Number of tight 2-codes in dimension `d`.
    CountTight {
        #[arg(long)]
        d: usize,
        /// Doubly regular tournaments of the required order, one per line.
        #[arg(long)]
        catalog: Option<String>,
    },
    /// Runs the built-in reproduction checks.
    VerifyPaper {
        #[arg(long, value_enum, default_value = "quick")]
        level: Level,
    },
}

impl Cli {
    pub fn tolerances(&self) -> Result<Tolerances, Error> {
        let mut tol = Tolerances::default();
        for (name, value, slot) in [
            ("eig-tol", self.eig_tol, &mut tol.eig_rel),
            ("beta-tol", self.beta_tol, &mut tol.beta_zero),
        ] {
            if let Some(v) = value {
                if !v.is_finite() || v < 0.0 {
                    return Err(Error::Input(format!("--{name} must be a finite non-negative number, got {v}")));
                }
                *slot = v;
            }
        }
        Ok(tol)
    }
}

/// Outcome of one invocation: text for stdout, diagnostics for stderr and the exit status.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub status: Status,
}

/// Runs a parsed command line. `echo` is recorded verbatim in the report.
pub fn run(cli: &Cli, echo: &[String]) -> Output {
    let failed = |e: Error| Output { stdout: String::new(), stderr: format!("error: {e}\n"), status: Status::from(&e) };
    let tol = match cli.tolerances() {
        Ok(t) => t,
        Err(e) => return failed(e),
    };
    match commands::execute(&cli.command, &tol) {
        Ok(body) => {
            let status = if body.all_passed { Status::Success } else { Status::VerificationFailure };
            let report = Report::new(echo, &body.digest_input, tol, body.results);
            let stderr = body.diagnostics.iter().map(|d| format!("{d}\n")).collect();
            let stdout = match cli.format {
                Format::Json => report.to_json(),
                Format::Tsv => body.tsv,
            };
            Output { stdout, stderr, status }
        }
        Err(e) => failed(e),
    }
}

/// Caps the global rayon pool from `TOURNEY_CODES_THREADS` when set.
pub fn configure_threads(value: Option<&str>) -> Result<(), Error> {
    let Some(v) = value else { return Ok(()) };
    let threads: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&k| k > 0)
        .ok_or_else(|| Error::Input(format!("TOURNEY_CODES_THREADS must be a positive integer, got {v:?}")))?;
    // A second initialisation in the same process keeps the first pool.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}
