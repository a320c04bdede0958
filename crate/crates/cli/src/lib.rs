//! Command-line front end: argument parsing, dispatch over the library and
//! deterministic text/JSON reports.
//!
//! Exit codes: 0 when every check passed, 1 when a computed property
//! failed, 2 for parse and usage errors, 3 when the enumeration cap was hit.

pub mod command;
pub mod report;
mod run;

pub use command::{Cli, Command, Space};
pub use report::{digest, Report, Status};
pub use run::{run, run_with_cap};
