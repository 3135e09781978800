//! Reproduction sweeps, conjecture tables and reports on top of
//! [`c4energy_core`].
//!
//! Sweeps shard the enumeration streams across a rayon pool and merge the
//! results in a fixed order, so reports do not depend on the worker count.

pub mod config;
pub mod conjecture;
pub mod report;
pub mod sweep;

pub use config::{ConfigError, Format, RunConfig};
pub use conjecture::{conjecture_table, permutation_check, ConjectureError, ConjectureRow, PermutationCheck};
pub use report::{write_report, Report, ReportError, Row, Status};
pub use sweep::{run_sweep, OrderStats, SweepError, SweepKind, VerifyOutcome};
