//! Closed-form cavity quantities: mode ladder, impedance, couplings, occupancies.

use std::f64::consts::PI;

use super::constants::PhysicalConstants;
use super::params::{CavityParams, ResistorParams, SystemParams};
use crate::error::{Error, Result};

/// Angular frequency of mode `k`, kπ/(L√(ℓc)).
pub fn mode_frequency(cavity: &CavityParams, k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::ZeroMode(k));
    }
    Ok(k as f64 * fundamental_frequency(cavity))
}

fn fundamental_frequency(cavity: &CavityParams) -> f64 {
    PI / (cavity.length * (cavity.ind_per_len * cavity.cap_per_len).sqrt())
}

/// Characteristic impedance √(ℓ/c).
pub fn characteristic_impedance(cavity: &CavityParams) -> f64 {
    (cavity.ind_per_len / cavity.cap_per_len).sqrt()
}

/// R·sin²(πx/L): the resistance seen by the fundamental mode's standing-wave current.
pub fn effective_resistance(resistor: &ResistorParams) -> f64 {
    let s = (PI * resistor.position_fraction).sin();
    resistor.resistance * s * s
}

/// Coupling rate γ between a resistor and each cavity mode.
///
/// An explicit override wins; otherwise γ = 2R_eff/(Lℓ), which equals 2ω₁R_eff/(πZ₀).
pub fn coupling_rate(resistor: &ResistorParams, cavity: &CavityParams) -> f64 {
    match resistor.coupling_override {
        Some(gamma) => gamma,
        None => 2.0 * effective_resistance(resistor) / (cavity.length * cavity.ind_per_len),
    }
}

/// Decay rate r/ℓ of the bare line's distributed series loss.
pub fn internal_loss_rate(cavity: &CavityParams) -> f64 {
    cavity.loss_per_len / cavity.ind_per_len
}

/// Bose–Einstein occupancy 1/(exp(ħω/k_BT) − 1).
pub fn bose_occupancy(omega: f64, temperature: f64) -> Result<f64> {
    if !(temperature > 0.0) {
        return Err(Error::NonPositiveTemperature(temperature));
    }
    if !(omega > 0.0) {
        return Err(Error::NonPositiveFrequency(omega));
    }
    Ok(occupancy(PhysicalConstants::CODATA.photon_temperature(omega) / temperature))
}

/// Occupancy as a function of x = ħω/k_BT. Saturates to 0 once exp overflows.
#[inline]
pub(crate) fn occupancy(x: f64) -> f64 {
    1.0 / x.exp_m1()
}

/// Everything the solvers need that follows directly from [`SystemParams`].
#[derive(Debug, Clone, PartialEq)]
pub struct DerivedQuantities {
    /// ω_k for k = 1..=n_modes, rad/s.
    pub omega_k: Vec<f64>,
    pub z0: f64,
    pub r_eff: [f64; 2],
    pub gamma: [f64; 2],
    pub gamma_int: f64,
    /// ω₁/(2γ) of the more strongly coupled resistor; the weak-coupling figure of merit.
    pub q_eff: f64,
    /// ω₁/(2(γ₁+γ₂+γ_int)), the quality factor of the fully loaded cavity.
    pub q_loaded: f64,
}

impl DerivedQuantities {
    pub fn compute(params: &SystemParams) -> Result<Self> {
        params.validate()?;
        let cavity = &params.cavity;
        let omega_1 = fundamental_frequency(cavity);
        let omega_k = (1..=params.n_modes).map(|k| k as f64 * omega_1).collect();
        let gamma = [
            coupling_rate(&params.resistor1, cavity),
            coupling_rate(&params.resistor2, cavity),
        ];
        let gamma_int = internal_loss_rate(cavity);
        Ok(DerivedQuantities {
            omega_k,
            z0: characteristic_impedance(cavity),
            r_eff: [
                effective_resistance(&params.resistor1),
                effective_resistance(&params.resistor2),
            ],
            gamma,
            gamma_int,
            q_eff: omega_1 / (2.0 * gamma[0].max(gamma[1])),
            q_loaded: omega_1 / (2.0 * (gamma[0] + gamma[1] + gamma_int)),
        })
    }

    pub fn omega_1(&self) -> f64 {
        self.omega_k[0]
    }
}
