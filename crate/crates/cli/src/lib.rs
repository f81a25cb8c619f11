//! Library side of the `supercoh` command: the JSON file format, reports,
//! the subcommands and the self-test suites.

pub mod commands;
pub mod format;
pub mod report;
pub mod selftest;
