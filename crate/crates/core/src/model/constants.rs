//! CODATA 2018 exact values.

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Boltzmann constant, J/K.
pub const K_B: f64 = 1.380_649e-23;

/// The pair of constants every rate and power formula uses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub hbar: f64,
    pub k_b: f64,
}

impl PhysicalConstants {
    pub const CODATA: PhysicalConstants = PhysicalConstants {
        hbar: HBAR,
        k_b: K_B,
    };

    /// ħω/k_B in kelvin.
    #[inline]
    pub fn photon_temperature(&self, omega: f64) -> f64 {
        self.hbar * omega / self.k_b
    }
}
