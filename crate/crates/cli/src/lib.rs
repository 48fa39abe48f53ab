//! Library surface of the CLI: file format, generation, rendering, reports,
//! and the command implementations, kept callable in-process for the test
//! suites.

pub mod commands;
pub mod gen;
pub mod pointfile;
pub mod render;
pub mod report;

pub use commands::{run, Cli, CliError};
