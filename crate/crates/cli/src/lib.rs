//! Library side of the `psl2cov` command-line tool.

pub mod args;
pub mod commands;
pub mod document;
mod render;

pub use args::Cli;
pub use commands::{run, CliError, Outcome};
