//! Text formats and subcommands for the `kmajority` command-line tool.

pub mod commands;
pub mod format;
