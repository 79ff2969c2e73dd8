use super::power::{electron_phonon_power, CavityState};
use super::rates::BathSpec;
use super::two_level::effective_temperature;
use crate::error::{Error, Result};
use crate::model::derived::DerivedQuantities;
use crate::model::params::SystemParams;

/// Bath slot of resistor 1 in every [`CavityState`] built by [`QuantumModel`].
pub const RESISTOR_1: usize = 0;
/// Bath slot of resistor 2.
pub const RESISTOR_2: usize = 1;
/// Bath slot of the cavity's intrinsic loss, pinned at the phonon temperature.
pub const INTERNAL_LOSS: usize = 2;

/// Largest neglected photon-number tail accepted by default.
pub const DEFAULT_MAX_TRUNCATION_TAIL: f64 = 1e-10;

/// Where the cavity's energy goes at fixed resistor temperatures. Powers are "into the named
/// object positive".
#[derive(Debug, Clone, PartialEq)]
pub struct PowerBreakdown {
    /// Net photonic power into resistors 1 and 2, W.
    pub per_resistor_net_power: [f64; 2],
    /// Net photonic power absorbed by the intrinsic cavity loss, W.
    pub internal_loss_power: f64,
    /// Per-mode contributions to the power into resistor 2, W.
    pub per_mode_power: Vec<f64>,
    /// Heat flowing from resistor 2's electrons into the phonons, W.
    pub electron_phonon_power: f64,
}

impl PowerBreakdown {
    /// Sum of all net photonic powers out of the cavity; zero in the stationary state.
    pub fn cavity_imbalance(&self) -> f64 {
        self.per_resistor_net_power[0] + self.per_resistor_net_power[1] + self.internal_loss_power
    }
}

/// Quantum state of the loaded cavity at one pair of resistor temperatures.
#[derive(Debug, Clone, PartialEq)]
pub struct CavitySolution {
    pub t1: f64,
    pub t2: f64,
    pub state: CavityState,
    pub power: PowerBreakdown,
}

impl CavitySolution {
    /// Effective cavity temperature seen by the fundamental mode.
    pub fn effective_temperature(&self) -> Result<f64> {
        effective_temperature(&self.state.rates[0])
    }
}

/// The master-equation model of a [`SystemParams`] with its derived quantities cached.
#[derive(Debug, Clone)]
pub struct QuantumModel {
    params: SystemParams,
    derived: DerivedQuantities,
    max_truncation_tail: f64,
}

impl QuantumModel {
    pub fn new(params: SystemParams) -> Result<Self> {
        let derived = DerivedQuantities::compute(&params)?;
        Ok(QuantumModel {
            params,
            derived,
            max_truncation_tail: DEFAULT_MAX_TRUNCATION_TAIL,
        })
    }

    /// Overrides the largest neglected tail a solve may leave before it is rejected.
    pub fn with_max_truncation_tail(mut self, limit: f64) -> Self {
        self.max_truncation_tail = limit;
        self
    }

    pub fn params(&self) -> &SystemParams {
        &self.params
    }

    pub fn derived(&self) -> &DerivedQuantities {
        &self.derived
    }

    /// Resistor 1, resistor 2 and the intrinsic-loss bath, in slot order.
    pub fn baths(&self, t1: f64, t2: f64) -> Result<[BathSpec; 3]> {
        Ok([
            BathSpec::new(self.derived.gamma[0], t1)?,
            BathSpec::new(self.derived.gamma[1], t2)?,
            BathSpec::new(self.derived.gamma_int, self.params.bath_temperature)?,
        ])
    }

    /// Stationary state and power flows with both resistor temperatures fixed.
    pub fn solve(&self, t1: f64, t2: f64) -> Result<CavitySolution> {
        let baths = self.baths(t1, t2)?;
        let state = CavityState::solve(&self.derived.omega_k, &baths, self.params.n_photons_max)?;
        if let Some(worst) = state
            .distributions
            .iter()
            .find(|d| d.truncation_tail > self.max_truncation_tail)
        {
            return Err(Error::TruncationTooSmall {
                mode: worst.mode_index,
                tail: worst.truncation_tail,
                limit: self.max_truncation_tail,
            });
        }
        let power = PowerBreakdown {
            per_resistor_net_power: [
                state.net_power_into(RESISTOR_1)?,
                state.net_power_into(RESISTOR_2)?,
            ],
            internal_loss_power: state.net_power_into(INTERNAL_LOSS)?,
            per_mode_power: state.mode_powers_into(RESISTOR_2)?,
            electron_phonon_power: electron_phonon_power(
                &self.params.resistor2,
                t2,
                self.params.bath_temperature,
            ),
        };
        Ok(CavitySolution {
            t1,
            t2,
            state,
            power,
        })
    }

    /// Net photonic power into resistor 2, W.
    pub fn power_into_resistor2(&self, t1: f64, t2: f64) -> Result<f64> {
        Ok(self.solve(t1, t2)?.power.per_resistor_net_power[1])
    }
}
