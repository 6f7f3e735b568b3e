//! Verification sweeps, CSV reporting and the pieces of the `cwkit` CLI.

pub mod compute;
pub mod config;
pub mod error;
pub mod generate;
pub mod source;
pub mod sweep;
pub mod table;

pub use config::{Check, Family, SweepConfig};
pub use error::{HarnessError, Result};
pub use sweep::{run_sweep, SweepResult};
