use std::path::PathBuf;

use thiserror::Error;

use crate::config::ConfigError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Config { path: PathBuf, source: ConfigError },

    #[error("{0}")]
    Usage(String),

    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },

    #[error("writing output: {0}")]
    Output(String),

    #[error("no rows to write")]
    EmptyTable,

    #[error("row {row} does not have {width} columns")]
    RaggedTable { row: usize, width: usize },

    #[error("solver failed at T1 = {t1} K: {source}")]
    Solver {
        t1: f64,
        source: photon_heat_core::Error,
    },
}

impl CliError {
    /// 2 when a solver failed to converge, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Solver { source, .. } if source.is_numerical() => 2,
            _ => 1,
        }
    }
}
