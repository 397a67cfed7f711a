//! Command-line analysis of quasi-hereditary algebras given as quivers with
//! relations: file format, bundled examples, the analysis pipeline and its
//! reports.

pub mod cli;
pub mod commands;
pub mod corpus;
pub mod error;
pub mod expr;
pub mod format;
pub mod report;
pub mod session;

pub use cli::{Cli, Command};
pub use commands::{run, Outcome};
pub use error::CliError;
pub use session::Session;
