//! Master-equation model of the cavity modes driven by the resistor baths.

pub mod equilibrium;
pub mod model;
pub mod power;
pub mod rates;
pub mod stationary;
pub mod two_level;

pub use equilibrium::{quasiequilibrium_temperature, solve_equilibrium_t2, Equilibrium, FixedPointOptions};
pub use model::{
    CavitySolution, PowerBreakdown, QuantumModel, DEFAULT_MAX_TRUNCATION_TAIL, INTERNAL_LOSS,
    RESISTOR_1, RESISTOR_2,
};
pub use power::{electron_phonon_power, mode_powers_into_bath, net_power_into_bath, CavityState};
pub use rates::{transition_rates, BathSpec, ModeRates};
pub use stationary::{stationary_distribution, StationaryDistribution};
pub use two_level::{effective_temperature, two_level_power};
