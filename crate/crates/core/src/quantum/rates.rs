use crate::error::{Error, Result};
use crate::model::constants::PhysicalConstants;
use crate::model::derived::occupancy;

/// A thermal reservoir coupled to every cavity mode with rate `rate`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathSpec {
    /// γ, s⁻¹.
    pub rate: f64,
    /// K.
    pub temperature: f64,
}

impl BathSpec {
    pub fn new(rate: f64, temperature: f64) -> Result<Self> {
        let bath = BathSpec { rate, temperature };
        bath.validate()?;
        Ok(bath)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rate >= 0.0 && self.rate.is_finite()) {
            return Err(Error::invalid("bath.rate", format!("must be non-negative, got {}", self.rate)));
        }
        if !(self.temperature > 0.0) {
            return Err(Error::NonPositiveTemperature(self.temperature));
        }
        Ok(())
    }
}

/// Birth–death coefficients of one cavity mode.
///
/// The n→n+1 rate is `(n+1)·up` and the n→n−1 rate is `n·down`; the per-bath
/// vectors hold each reservoir's share in the order the baths were given.
#[derive(Debug, Clone, PartialEq)]
pub struct ModeRates {
    pub mode_index: usize,
    /// ω_k, rad/s.
    pub omega: f64,
    /// A_k = Σ γ_i n_B(ω_k, T_i).
    pub up: f64,
    /// B_k = Σ γ_i (n_B(ω_k, T_i) + 1).
    pub down: f64,
    pub per_bath_up: Vec<f64>,
    pub per_bath_down: Vec<f64>,
}

impl ModeRates {
    /// Γ_{n→n+1}.
    #[inline]
    pub fn raise(&self, n: usize) -> f64 {
        (n + 1) as f64 * self.up
    }

    /// Γ_{n→n−1}.
    #[inline]
    pub fn lower(&self, n: usize) -> f64 {
        n as f64 * self.down
    }

    pub fn n_baths(&self) -> usize {
        self.per_bath_up.len()
    }
}

/// Golden-rule up/down coefficients of mode `mode_index` at frequency `omega`.
pub fn transition_rates(mode_index: usize, omega: f64, baths: &[BathSpec]) -> Result<ModeRates> {
    if mode_index == 0 {
        return Err(Error::ZeroMode(0));
    }
    if !(omega > 0.0) {
        return Err(Error::NonPositiveFrequency(omega));
    }
    for bath in baths {
        bath.validate()?;
    }
    if !baths.iter().any(|b| b.rate > 0.0) {
        return Err(Error::NoActiveBath);
    }

    let photon_temperature = PhysicalConstants::CODATA.photon_temperature(omega);
    let mut per_bath_up = Vec::with_capacity(baths.len());
    let mut per_bath_down = Vec::with_capacity(baths.len());
    for bath in baths {
        let n = occupancy(photon_temperature / bath.temperature);
        per_bath_up.push(bath.rate * n);
        per_bath_down.push(bath.rate * (n + 1.0));
    }
    Ok(ModeRates {
        mode_index,
        omega,
        up: per_bath_up.iter().sum(),
        down: per_bath_down.iter().sum(),
        per_bath_up,
        per_bath_down,
    })
}
