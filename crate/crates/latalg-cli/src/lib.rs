//! Library surface of the verifier CLI: configuration resolution, report
//! assembly, and the command implementations, kept separate from argument
//! parsing so they can be driven directly from tests.

pub mod config;
pub mod report;
pub mod run;

pub use config::{PartialConfig, RunConfig};
pub use report::{Report, Summary};
pub use run::{CliError, CommandOutput, WeightFamily};
