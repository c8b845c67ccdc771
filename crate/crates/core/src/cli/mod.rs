//! Command-line surface: orbit tables, orders, CSP reports, witnesses and
//! trajectories, printed as JSON or TSV.

mod commands;
mod witness;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::families::FamilySpec;
use crate::poset::DEFAULT_CAP;

/// Version of the JSON layout.
pub const SCHEMA: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "rowmotion", version, about = "Rowmotion, promotion and friends on order ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose the state space into orbits.
    Orbits(Common),
    /// Print the order of the action (lcm of orbit sizes).
    Order(Common),
    /// Test the cyclic sieving phenomenon against a polynomial.
    Csp {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        poly: PolyKind,
    },
    /// Print every ideal with its witness object and check equivariance.
    Witness {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        kind: WitnessKind,
    },
    /// Iterate the action from the empty ideal until it returns.
    Trajectory(Common),
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// e.g. product:2,3,4, root:A,3, interior:3,3,0, halfsquare:4, asm:5, tsscpp:5
    #[arg(long)]
    family: FamilySpec,
    #[arg(long, value_enum)]
    action: Option<ActionName>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Upper bound on the number of enumerated states.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Permit asm/tsscpp instances with n >= 7.
    #[arg(long)]
    allow_large: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionName {
    Row,
    RowInverse,
    Pro,
    Gyration,
    Spro,
    Rotate,
    Psi,
    SytPro,
}

impl ActionName {
    pub fn name(self) -> &'static str {
        match self {
            ActionName::Row => "row",
            ActionName::RowInverse => "row-inverse",
            ActionName::Pro => "pro",
            ActionName::Gyration => "gyration",
            ActionName::Spro => "spro",
            ActionName::Rotate => "rotate",
            ActionName::Psi => "psi",
            ActionName::SytPro => "syt-pro",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyKind {
    Qbinomial,
    Catalan,
    Macmahon,
    Hook,
    Halfsquare,
    Asm,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    Word,
    Matching,
    Bmatching,
    Bracket,
    Ncp,
    Height,
    Asm,
    Syt,
    Bpm,
}

/// Everything a command needs.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub family: FamilySpec,
    pub action: Option<ActionName>,
    pub format: Format,
    pub threads: usize,
    pub cap: usize,
    pub allow_large: bool,
    pub kind: Option<WitnessKind>,
}

impl RunConfig {
    fn from_common(c: Common, kind: Option<WitnessKind>) -> Self {
        RunConfig {
            family: c.family,
            action: c.action,
            format: c.format,
            threads: c.threads.max(1),
            cap: c.cap,
            allow_large: c.allow_large,
            kind,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("check failed: {0}")]
    Check(String),
    #[error("{0}")]
    Resource(String),
    #[error(transparent)]
    Lib(#[from] Error),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Check(_) | CliError::Io(_) => 1,
            CliError::Resource(_) => 3,
            CliError::Lib(e) => match e {
                Error::StateSpaceTooLarge { .. } | Error::TooManyElements(_) | Error::Overflow(_) => 3,
                Error::InvalidFamilySpec(_)
                | Error::UnsupportedArity(_)
                | Error::UnsupportedRank { .. }
                | Error::EmptyShape
                | Error::DomainError(_)
                | Error::NotLayered
                | Error::NotHeightOne
                | Error::NotTwoLayers => 2,
                _ => 1,
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    let result = match cli.command {
        Command::Orbits(c) => commands::orbits(&RunConfig::from_common(c, None), out),
        Command::Order(c) => commands::order(&RunConfig::from_common(c, None), out),
        Command::Csp { common, poly } => commands::csp(&RunConfig::from_common(common, None), poly, out),
        Command::Witness { common, kind } => witness::witness(&RunConfig::from_common(common, Some(kind)), out),
        Command::Trajectory(c) => commands::trajectory(&RunConfig::from_common(c, None), out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
