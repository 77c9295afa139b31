//! Command-line front end.
//!
//! Every command writes its trace lines (with `--trace`) first and its result
//! last. Nothing is written to stdout when a command fails.

mod commands;
mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Unit {
    Thirds,
    Minutes,
    Degrees,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Sexagesimal,
    Decimal,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum JyaMethod {
    Series,
    Cubic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableMode {
    Commentary,
    Literal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ArithmeticArg {
    Hand,
    Exact,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Madhava,
    Lookup,
}

#[derive(Debug, Parser)]
#[command(
    name = "jya",
    version,
    about = "Sine and arcsine methods of the Kerala school, in exact arithmetic"
)]
pub struct Cli {
    /// Radius (trijyā); default 3437'44''48'''.
    #[arg(long, global = true)]
    pub radius: Option<String>,
    /// Unit of plain numeric angles, on input and in decimal output.
    #[arg(long, global = true, value_enum, default_value_t = Unit::Minutes)]
    pub unit: Unit,
    #[arg(long, global = true, value_enum, default_value_t = Format::Sexagesimal)]
    pub format: Format,
    /// Fractional digits in decimal output.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=40))]
    pub precision: u32,
    #[arg(long, global = true)]
    pub trace: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bhāskara's rational sine of an angle in degrees.
    SinBhaskara {
        #[arg(long, allow_hyphen_values = true)]
        deg: String,
    },
    /// Brahmagupta's inverse of the rational sine.
    ArcsinBrahmagupta {
        #[arg(long, allow_hyphen_values = true)]
        jya: String,
    },
    /// Jyā of an arc from the full series or its cubic truncation.
    Jya {
        #[arg(long, allow_hyphen_values = true)]
        arc: String,
        #[arg(long, value_enum, default_value_t = JyaMethod::Series)]
        method: JyaMethod,
    },
    /// One-step arc of a small jyā: m + m³/6r².
    ArcsinSmall {
        #[arg(long, allow_hyphen_values = true)]
        jya: String,
    },
    /// Iterated arc of a small jyā, rounding each step to thirds.
    ArcsinIter {
        #[arg(long, allow_hyphen_values = true)]
        jya: String,
        #[arg(long, default_value_t = crate::small_arc::DEFAULT_MAX_ITER)]
        max_iter: usize,
    },
    /// Arc read from the 24-row difference table.
    ArcsinTable {
        #[arg(long, allow_hyphen_values = true)]
        jya: String,
        #[arg(long, value_enum, default_value_t = TableMode::Commentary)]
        mode: TableMode,
    },
    /// Arc of a large jyā from the sine table and the arc-difference rule.
    ArcsinLarge {
        #[arg(long, allow_hyphen_values = true)]
        jya: String,
    },
    /// One refinement of an approximate circumference.
    Circumference {
        #[arg(long)]
        diameter: String,
        #[arg(long)]
        approx: String,
        #[arg(long, value_enum, default_value_t = ArithmeticArg::Hand)]
        arithmetic: ArithmeticArg,
    },
    /// Emit a table as CSV (or JSON with --format json).
    Tables {
        #[arg(value_enum)]
        which: TableKind,
        #[arg(long, value_enum, default_value_t = TableMode::Commentary)]
        mode: TableMode,
    },
    /// Relative error of the rational sine on a degree grid, as CSV.
    ErrorScan {
        #[arg(long, default_value = "1")]
        step: String,
    },
    /// Coefficients of the n-th iterate against the ternary-tree numbers.
    Coeffs {
        #[arg(long)]
        n: usize,
        /// Truncation grade; default n + 2.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Re-express an angle.
    Convert {
        #[arg(long, allow_hyphen_values = true)]
        value: String,
        /// Unit for decimal output; default --unit.
        #[arg(long, value_enum)]
        to: Option<Unit>,
    },
}

/// Runs one command line. Returns the process exit status: 0 on success,
/// 1 on domain or convergence errors, 2 on usage errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    2
                }
            };
        }
    };
    match commands::execute(&cli) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Parse { .. } | Error::Number(_) => 2,
                _ => 1,
            }
        }
    }
}
