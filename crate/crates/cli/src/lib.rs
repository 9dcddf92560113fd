//! File formats and drivers behind the `rohlin` command-line tool.

pub mod harness;
pub mod wordfile;
