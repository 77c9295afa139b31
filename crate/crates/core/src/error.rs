use thiserror::Error;

use crate::small_arc::IterationTrace;

#[derive(Debug, Error)]
pub enum Error {
    /// A sexagesimal component (seconds or thirds) outside `0..60`.
    #[error("{field} component {value} is out of range 0..60")]
    ComponentRange { field: &'static str, value: u64 },

    #[error("invalid sexagesimal text at byte {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid number {0:?}")]
    Number(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("iteration did not stabilise ({} steps taken; a stable arc needs 9m^2 <= 8r^2)", .trace.steps.len())]
    NoConvergence { trace: Box<IterationTrace> },

    #[error("jya {value} lies outside the table range {low} ..= {high}")]
    OutOfTable {
        value: String,
        low: String,
        high: String,
    },

    #[error(
        "jya {value} is below the first table entry {first}; use the iterative small-arc method"
    )]
    BelowTable { value: String, first: String },

    #[error("degenerate input: {0}")]
    Degenerate(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
