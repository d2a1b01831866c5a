//! Command-line front end and file formats for `fistab-core`.
//!
//! The binary `fistab` wires every computation of the core crate to a
//! subcommand, reads and writes the JSON encodings in [`formats`], and renders
//! reports as JSON, aligned text or CSV. [`run`] returns the process exit code:
//! 0 on success, 1 for domain errors, 2 for internal-consistency failures and 64
//! for usage errors.

pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod formats;
pub mod report;

pub use cli::{run, run_with};
pub use error::CliError;
pub use report::Format;
