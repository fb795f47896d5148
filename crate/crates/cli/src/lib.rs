//! File formats and command-line front end for the `hypertournament` crate.
//!
//! Exit codes: `0` success or valid, `1` domain-invalid input (failed check,
//! structural violation, expectation mismatch), `2` usage, parse, I/O or
//! budget errors.

pub mod commands;
pub mod format;

pub use commands::{run, Cli, CliError, Outcome};
pub use format::{parse_hypertournament, render_hypertournament, FormatError, SequenceFile};
