//! Command-line front end for [`zeta4_core`]: sequence tables, the
//! verification matrix, and certified residual reports, written as CSV or
//! JSON.
//!
//! The binary is a thin wrapper around [`run`]; everything it prints to
//! stdout is produced here, so the same tables can be generated in-process.

pub mod config;
pub mod drivers;
pub mod format;
pub mod run;
pub mod sampling;

pub use config::{Cli, Command, Format, RunConfig, VerifyKind};
pub use run::{run, Report, RunError, Status};
