//! Command-line front end: evaluation, charts, verification and enumeration.
//!
//! Every command returns an [`Outcome`] holding its output and exit code,
//! so the binary only prints.

pub mod commands;
pub mod serial;

use clap::{Parser, Subcommand, ValueEnum};
use eqsurf_core::chart::ChartFormat;
use eqsurf_core::grading::EmptyWindow;
use eqsurf_core::surface::ParseError;
use eqsurf_core::Window;
use thiserror::Error;

pub use serial::{DecompositionRecord, DescriptorRecord, SerialError, SummandRecord};

/// Largest `β` the enumerate command accepts.
pub const MAX_BETA_GUARD: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExitCode(pub u8);

impl ExitCode {
    pub const SUCCESS: ExitCode = ExitCode(0);
    pub const VERIFICATION_FAILURE: ExitCode = ExitCode(1);
    pub const USAGE: ExitCode = ExitCode(2);
}

/// Text a command produced and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: ExitCode,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: ExitCode::SUCCESS,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Engine(#[from] eqsurf_core::engine::EngineError),
    #[error(transparent)]
    Surface(#[from] eqsurf_core::surface::SurfaceError),
    #[error(transparent)]
    Window(#[from] EmptyWindow),
    #[error(transparent)]
    Oracle(#[from] eqsurf_oracle::CheckError),
    #[error(transparent)]
    Mesh(#[from] eqsurf_oracle::MeshError),
    #[error("--max-beta {0} exceeds the guard of {MAX_BETA_GUARD}")]
    BetaGuard(u32),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Ascii,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, ValueEnum)]
pub enum CheckKind {
    Quotient,
    Les,
    Rho,
    Euler,
    Surgery,
    Topclass,
    Invariants,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] = [
        CheckKind::Quotient,
        CheckKind::Les,
        CheckKind::Rho,
        CheckKind::Euler,
        CheckKind::Surgery,
        CheckKind::Topclass,
        CheckKind::Invariants,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Quotient => "quotient",
            CheckKind::Les => "les",
            CheckKind::Rho => "rho",
            CheckKind::Euler => "euler",
            CheckKind::Surgery => "surgery",
            CheckKind::Topclass => "topclass",
            CheckKind::Invariants => "invariants",
        }
    }

    /// Whether the check needs a triangulated model.
    pub fn needs_mesh(self) -> bool {
        !matches!(self, CheckKind::Surgery | CheckKind::Topclass)
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "eqsurf",
    version,
    about = "RO(C2)-graded cohomology of surfaces with involution"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decompose an expression and chart its groups.
    Eval {
        expr: String,
        #[arg(long, num_args = 4, value_names = ["P0", "P1", "Q0", "Q1"], allow_negative_numbers = true)]
        window: Option<Vec<i64>>,
        #[arg(long, value_enum, default_value = "ascii")]
        format: OutputFormat,
    },
    /// Run consistency checks, one line per check.
    Verify {
        expr: String,
        #[arg(long, value_enum, value_delimiter = ',')]
        checks: Option<Vec<CheckKind>>,
        #[arg(long, num_args = 4, value_names = ["P0", "P1", "Q0", "Q1"], allow_negative_numbers = true)]
        window: Option<Vec<i64>>,
    },
    /// List every reachable descriptor up to a first Betti number.
    Enumerate {
        #[arg(long)]
        max_beta: u32,
    },
    /// Chart the six catalog modules over the default window.
    Catalog,
    /// Print the triangulated model of an expression.
    Mesh { expr: String },
}

/// Validated form of a command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunConfig {
    Eval {
        expr: String,
        window: Window,
        format: OutputFormat,
    },
    Verify {
        expr: String,
        checks: Vec<CheckKind>,
        window: Window,
    },
    Enumerate {
        max_beta: u32,
    },
    Catalog,
    Mesh {
        expr: String,
    },
}

fn window_of(bounds: Option<Vec<i64>>) -> Result<Window, CliError> {
    match bounds.as_deref() {
        None => Ok(Window::default()),
        Some(&[p0, p1, q0, q1]) => Ok(Window::new(p0, p1, q0, q1)?),
        Some(_) => unreachable!("clap enforces four window values"),
    }
}

impl RunConfig {
    pub fn from_command(c: Command) -> Result<Self, CliError> {
        Ok(match c {
            Command::Eval {
                expr,
                window,
                format,
            } => RunConfig::Eval {
                expr,
                window: window_of(window)?,
                format,
            },
            Command::Verify {
                expr,
                checks,
                window,
            } => {
                let mut checks = checks.unwrap_or_else(|| CheckKind::ALL.to_vec());
                checks.sort();
                checks.dedup();
                RunConfig::Verify {
                    expr,
                    checks,
                    window: window_of(window)?,
                }
            }
            Command::Enumerate { max_beta } if max_beta > MAX_BETA_GUARD => {
                return Err(CliError::BetaGuard(max_beta))
            }
            Command::Enumerate { max_beta } => RunConfig::Enumerate { max_beta },
            Command::Catalog => RunConfig::Catalog,
            Command::Mesh { expr } => RunConfig::Mesh { expr },
        })
    }
}

impl From<OutputFormat> for Option<ChartFormat> {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Json => None,
            OutputFormat::Ascii => Some(ChartFormat::Ascii),
            OutputFormat::Svg => Some(ChartFormat::Svg),
        }
    }
}

fn usage_error(e: impl std::fmt::Display) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
        code: ExitCode::USAGE,
    }
}

pub fn execute(config: &RunConfig) -> Outcome {
    let result = match config {
        RunConfig::Eval {
            expr,
            window,
            format,
        } => commands::eval(expr, window, *format),
        RunConfig::Verify {
            expr,
            checks,
            window,
        } => commands::verify(expr, checks, window),
        RunConfig::Enumerate { max_beta } => commands::enumerate(*max_beta),
        RunConfig::Catalog => Ok(Outcome::ok(commands::catalog())),
        RunConfig::Mesh { expr } => commands::mesh(expr),
    };
    result.unwrap_or_else(usage_error)
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: ExitCode::USAGE,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match RunConfig::from_command(cli.command) {
        Ok(config) => execute(&config),
        Err(e) => usage_error(e),
    }
}
