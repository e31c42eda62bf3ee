//! Text format and subcommands for the `gluck` binary.

pub mod commands;
pub mod format;

pub use commands::{run, Cli, Outcome};
pub use format::{parse, print, DiagramFile, ParseError};
