//! Library half of the `mufgl` binary, so the command surface can be tested
//! in-process.

pub mod commands;
pub mod json;

pub use commands::{main_with_args, run, Cli, Command, EXIT_OK, EXIT_USAGE, EXIT_VERIFY_FAILED};
