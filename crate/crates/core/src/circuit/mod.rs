//! Semiclassical lumped-element model of the cavity and its two resistors.

pub mod network;
pub mod quadrature;
pub mod semiclassical;
pub mod tridiag;

pub use network::{build_network, Branch, ImpedanceMatrix, LumpedNetwork, DEFAULT_N_NODES, MIN_N_NODES};
pub use quadrature::{integrate, Estimate, QuadratureOptions};
pub use semiclassical::{semiclassical_power, SemiclassicalModel, SemiclassicalOptions, SemiclassicalPower};
