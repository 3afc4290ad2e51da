//! Command-line front end: argument parsing, the four subcommands and their
//! CSV/JSON output.

pub mod commands;
pub mod config;
pub mod output;

pub use commands::{run, verification_report, CliError};
pub use config::{Cli, CommandConfig};
