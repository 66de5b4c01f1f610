//! Command line front end for `sbraid-core` and the complexity harness.

pub mod app;
pub mod bench;
pub mod query;

pub use app::run;
pub use bench::{run_bench, BenchParams, BenchReport};
pub use query::{run_command, Command, Outcome, OutputMode, Query};
