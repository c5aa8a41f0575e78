//! Command-line front end for `horncalc`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

mod catalogs;
mod commands;

pub use catalogs::{load_definitions, CATALOG_PATH_VAR};

#[derive(Parser, Debug)]
#[command(name = "horncalc", version, about = "Horn-type hypergeometric series: PDE systems, evaluation, verification")]
pub struct Cli {
    /// Extra catalog file; repeatable. Falls back to HORNCALC_CATALOG_PATH (colon-separated).
    #[arg(long = "catalog", global = true, value_name = "PATH")]
    pub catalogs: Vec<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Format {
    Human,
    Structured,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Names, dimension and order of every known series
    List,
    /// Definition and region of one series
    Show { name: String },
    /// The PDE system satisfied by a series
    Derive {
        name: String,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Sum the series at a point
    Eval {
        name: String,
        /// Parameter values, e.g. a=0.5,b=1/3
        #[arg(long)]
        params: String,
        /// Coordinates x[,y[,z]]
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        /// Stop once shells fall below tol times the partial sum
        #[arg(long, default_value = "1e-12")]
        tol: f64,
        /// Upper limit on total-degree shells
        #[arg(long = "max-shells", default_value_t = 400)]
        max_shells: usize,
    },
    /// Check that the derived system annihilates the series
    Verify {
        name: String,
        /// Total degree of the truncated series in the exact check
        #[arg(long = "exact-degree", default_value_t = 10)]
        exact_degree: u32,
        /// Parameter values; random non-integer rationals when omitted
        #[arg(long)]
        params: Option<String>,
        /// Finite-difference residual at --point instead of the exact check
        #[arg(long)]
        numeric: bool,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Finite-difference step
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
    },
    /// Indicial system, exponent tuples and verified particular solutions
    Exponents { name: String },
    /// Whether a point lies inside the region of convergence
    Region {
        name: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Derive, verify and compare every series against the reference data
    Audit {
        /// Restrict to these series
        names: Vec<String>,
        /// Directory of transcriptions (*.sys) and solution lists (*.sol) overriding the shipped ones
        #[arg(long, value_name = "DIR")]
        reference: Option<PathBuf>,
        /// Also print one tab-separated line per check
        #[arg(long)]
        summary: bool,
    },
}

/// Failure carrying the exit status to report.
#[derive(Debug)]
pub struct Exit {
    pub code: i32,
    pub message: String,
}

impl Exit {
    pub fn usage(m: impl Into<String>) -> Self {
        Exit { code: 2, message: m.into() }
    }

    pub fn failed(m: impl Into<String>) -> Self {
        Exit { code: 1, message: m.into() }
    }
}

/// Runs one invocation, writing results to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match commands::dispatch(&cli, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "horncalc: {}", e.message);
            e.code
        }
    }
}
