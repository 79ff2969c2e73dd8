//! Command-line harness for the photon-heat models: configuration files, the
//! experiment commands and CSV output.

// `!(x > 0.0)` is used on purpose: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod commands;
pub mod config;
pub mod error;
pub mod table;

use std::path::Path;

pub use commands::{cmd_compare_power, cmd_solve, cmd_sweep_t1, relative_difference};
pub use config::{parse_config, to_config_text, ConfigError, RunConfig};
pub use error::CliError;
pub use table::{to_csv_string, write_csv, write_csv_file, Cell, Table};

/// Reads and parses a configuration file.
pub fn load_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    })?;
    parse_config(&text).map_err(|source| CliError::Config {
        path: path.to_path_buf(),
        source,
    })
}
