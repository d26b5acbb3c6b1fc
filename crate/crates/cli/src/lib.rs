//! Command-line front end: configuration, module specifiers, the Specht cache,
//! report emission and the verification commands.
//!
//! Exit codes: 0 all checks pass, 1 a check failed, 2 usage or parse error,
//! 3 a degree or dimension cap would be exceeded, 4 I/O or internal error.

pub mod cache;
pub mod commands;
pub mod config;
pub mod modspec;
pub mod report;
pub mod tasks;

use catbf_core::catbernstein::CatError;
use catbf_core::symfunc::SymError;
use catbf_core::symrep::RepError;

pub use cache::SpechtCache;
pub use commands::{run, Outcome};
pub use config::{OutputFormat, RunConfig, WindowArg};
pub use modspec::ModuleSpec;
pub use report::Report;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("cap exceeded: {0}")]
    Cap(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("computation error: {0}")]
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Config(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Io(_) | CliError::Json(_) | CliError::Compute(_) => 4,
        }
    }
}

impl From<RepError> for CliError {
    fn from(e: RepError) -> CliError {
        match e {
            RepError::DegreeCap { .. } | RepError::DimensionCap { .. } => CliError::Cap(e.to_string()),
            e => CliError::Compute(e.to_string()),
        }
    }
}

impl From<SymError> for CliError {
    fn from(e: SymError) -> CliError {
        match e {
            SymError::DegreeCap { .. } => CliError::Cap(e.to_string()),
            e => CliError::Compute(e.to_string()),
        }
    }
}

impl From<CatError> for CliError {
    fn from(e: CatError) -> CliError {
        match e {
            CatError::Rep(e) => e.into(),
            CatError::Sym(e) => e.into(),
            e => CliError::Compute(e.to_string()),
        }
    }
}
