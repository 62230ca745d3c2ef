//! File formats, reports and subcommands for the `angk0` binary.

pub mod commands;
pub mod error;
pub mod format;
pub mod report;

pub use commands::Registry;
pub use error::{CliError, Exit};
