//! Command line front end, job files and JSON formats for `lipsat-core`.

pub mod cert;
pub mod cli;
pub mod error;
pub mod exec;
pub mod job;
pub mod json;

pub use cli::{run, Outcome};
pub use error::{CliError, ErrorKind};
pub use job::{Job, JobSpec, OutputFormat};
