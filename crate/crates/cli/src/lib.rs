//! Scriptable verification runs over the genus-2 Jones representation.
//!
//! Every command produces a [`Report`]: the command echo, the effective
//! configuration, a command-specific payload and a list of checks. The
//! process exit code is 0 when every check passes, 1 when one fails and 2 for
//! configuration or argument errors.

pub mod commands;
pub mod config;
pub mod json;
pub mod report;
pub mod verify;

pub use commands::CliError;
pub use config::{ConfigError, Format, RunConfig, CONFIG_ENV};
pub use report::{Check, Report, Source};
pub use verify::verify_all;
