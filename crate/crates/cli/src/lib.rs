//! Command-line front end for `nanorot`: run configuration, parameter
//! sweeps, figure data and structured output.

pub mod commands;
pub mod config;
pub mod figure;
pub mod output;
pub mod sweep;

use thiserror::Error;

pub use config::{NamedMaterial, Quantity, RunConfig};
pub use figure::{Curve, FigureId};
pub use output::Format;
pub use sweep::{run_sweep, Observable, RunRecord, Scale, SweepSpec, Variable};

/// Exit code for a failed computation.
pub const EXIT_COMPUTE: i32 = 2;
/// Exit code for usage and parse errors.
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] nanorot::Error),
    #[error("{0}")]
    Failed(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Compute(_) | CliError::Failed(_) | CliError::Io(_) => EXIT_COMPUTE,
        }
    }
}
