use thiserror::Error;

/// Errors raised by the physical models and numerical solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("mode index must be at least 1 (got {0})")]
    ZeroMode(usize),

    #[error("temperature must be positive (got {0} K)")]
    NonPositiveTemperature(f64),

    #[error("at least one bath with a positive rate is required")]
    NoActiveBath,

    #[error(
        "mode {mode} has no normalizable stationary state (up coefficient {up:e} >= down coefficient {down:e})"
    )]
    NoStationaryState { mode: usize, up: f64, down: f64 },

    #[error("photon-number truncation too small for mode {mode}: neglected tail {tail:e} exceeds {limit:e}")]
    TruncationTooSmall { mode: usize, tail: f64, limit: f64 },

    #[error("bath index {index} out of range ({count} baths)")]
    BathOutOfRange { index: usize, count: usize },

    #[error("fixed-point iteration did not converge after {iterations} iterations (last residual {residual:e} K)")]
    NotConverged { iterations: usize, residual: f64 },

    #[error("resistor positions map to the same branch {0}")]
    SameBranch(usize),

    #[error("frequency must be positive (got {0} rad/s)")]
    NonPositiveFrequency(f64),

    #[error("matrix index ({row}, {col}) out of range for dimension {dim}")]
    MatrixIndexOutOfRange { row: usize, col: usize, dim: usize },

    #[error("impedance matrix is singular at omega = {omega:e} rad/s")]
    SingularImpedance { omega: f64 },

    #[error("quadrature did not converge: estimated relative error {achieved:e} > requested {requested:e}")]
    QuadratureNotConverged { achieved: f64, requested: f64 },
}

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// True for failures of an iterative or numerical procedure, as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NoStationaryState { .. }
                | Error::TruncationTooSmall { .. }
                | Error::NotConverged { .. }
                | Error::SingularImpedance { .. }
                | Error::QuadratureNotConverged { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
