//! Physical parameters, constants and the closed-form quantities derived from them.

pub mod constants;
pub mod derived;
pub mod params;

pub use constants::{PhysicalConstants, HBAR, K_B};
pub use derived::{
    bose_occupancy, characteristic_impedance, coupling_rate, effective_resistance,
    internal_loss_rate, mode_frequency, DerivedQuantities,
};
pub use params::{
    CavityParams, ResistorParams, SystemParams, Which, DEFAULT_N_MODES, DEFAULT_N_PHOTONS_MAX,
};
