//! Photonic heat conduction between two resistors embedded in a superconducting
//! coplanar-waveguide cavity.
//!
//! Three descriptions of the same device are provided:
//!
//! * [`quantum`]: golden-rule birth–death rates for every cavity mode, their
//!   stationary photon distributions, the net photonic powers and the
//!   self-consistent electron temperature of the second resistor;
//! * [`quantum::two_level_power`]: the analytic single-photon limit;
//! * [`circuit`]: a lumped ladder network whose Johnson–Nyquist noise exchange is
//!   integrated over frequency.
//!
//! All powers are reported as "into the named object positive".

// `!(x > 0.0)` is used on purpose: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod circuit;
pub mod error;
pub mod model;
pub mod quantum;

pub use error::{Error, Result};
pub use model::{
    CavityParams, DerivedQuantities, PhysicalConstants, ResistorParams, SystemParams, HBAR, K_B,
};
