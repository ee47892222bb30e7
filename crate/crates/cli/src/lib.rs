//! Command-line front end for the `tphopf` engine: JSON structure-constant
//! files, the example gallery and report rendering.

pub mod cli;
pub mod commands;
pub mod error;
pub mod format;
pub mod render;
pub mod workspace;

pub use cli::Cli;
pub use commands::{run, Outcome};
pub use error::CliError;
