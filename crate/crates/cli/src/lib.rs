//! Command implementations behind the `metacover` binary. Each returns a
//! [`Report`] whose text form is deterministic.

pub mod commands;
pub mod grammar;
pub mod report;
pub mod verify;

pub use commands::*;
pub use report::{LedgerEntry, Report, SCHEMA};
pub use verify::cmd_verify;
