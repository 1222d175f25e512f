//! Sweeps, reports and the command-line front end over `fulton-core`.

pub mod cli;
pub mod commands;
pub mod config;
pub mod enumerate;
pub mod error;
pub mod formats;
pub mod report;
pub mod sweep;

pub use config::{FieldMode, OutputFormat, SweepConfig};
pub use error::CliError;
pub use report::{CheckCount, Counterexample, Report};
