//! Johnson–Nyquist power exchanged between the two resistors through the ladder.
//!
//! With independent noise sources of two-sided density 2Rħω/(1 − e^{−ħω/k_BT}),
//! the power delivered into resistor 2 is
//!
//!   P = (R₁R₂/π) ∫_{−∞}^{∞} ħω [|Z⁻¹₂₁|²/(1 − e^{−ħω/k_BT₁}) − |Z⁻¹₁₂|²/(1 − e^{−ħω/k_BT₂})] dω.
//!
//! Folding ω → −ω (|Z⁻¹(−ω)| = |Z⁻¹(ω)|) turns each thermal factor into
//! ħω coth(ħω/2k_BT) = ħω(2n_B + 1); the zero-point parts cancel and, with
//! reciprocity, the integrand on (0, ∞) is (R₁R₂/π)·2ħω|Z⁻¹₂₁|²(n_B(T₁) − n_B(T₂)).

use super::network::{build_network, LumpedNetwork, DEFAULT_N_NODES};
use super::quadrature::{integrate, Estimate, QuadratureOptions};
use crate::error::{Error, Result};
use crate::model::constants::{PhysicalConstants, HBAR};
use crate::model::derived::{
    coupling_rate, internal_loss_rate, mode_frequency, occupancy,
};
use crate::model::params::{ResistorParams, SystemParams};

/// Lower integration limit in units of ω₁; the integrand vanishes as ω² below it.
pub const LOWER_LIMIT: f64 = 1e-4;
/// Upper limit in units of ω₁ (raised further for hot resistors).
pub const UPPER_LIMIT: f64 = 30.0;
/// Half-width, relative to kω₁, of the finely paneled window around each resonance.
const RESONANCE_WINDOW: f64 = 0.015;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemiclassicalOptions {
    pub n_nodes: usize,
    pub quadrature: QuadratureOptions,
}

impl Default for SemiclassicalOptions {
    fn default() -> Self {
        SemiclassicalOptions {
            n_nodes: DEFAULT_N_NODES,
            quadrature: QuadratureOptions::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SemiclassicalPower {
    /// Net power into resistor 2, W.
    pub power: f64,
    /// Quadrature error estimate, W.
    pub error_estimate: f64,
    pub evaluations: usize,
}

/// Ladder network plus the frequency grid its resonances call for.
#[derive(Debug, Clone)]
pub struct SemiclassicalModel {
    network: LumpedNetwork,
    omega_1: f64,
    /// Linewidth estimate of the fundamental relative to ω₁.
    relative_linewidth: f64,
    options: SemiclassicalOptions,
}

impl SemiclassicalModel {
    pub fn new(params: &SystemParams, options: SemiclassicalOptions) -> Result<Self> {
        let network = build_network(params, options.n_nodes)?;
        let omega_1 = mode_frequency(&params.cavity, 1)?;
        // the circuit always sees the geometric coupling of its resistors
        let geometric = |r: &ResistorParams| {
            coupling_rate(
                &ResistorParams {
                    coupling_override: None,
                    ..*r
                },
                &params.cavity,
            )
        };
        let kappa = geometric(&params.resistor1) + geometric(&params.resistor2) + internal_loss_rate(&params.cavity);
        Ok(SemiclassicalModel {
            network,
            omega_1,
            relative_linewidth: kappa / omega_1,
            options,
        })
    }

    pub fn network(&self) -> &LumpedNetwork {
        &self.network
    }

    /// Trans-impedance (Z⁻¹)₂₁ between the resistor branches at `omega`.
    pub fn resistor_trans_impedance(&self, omega: f64) -> Result<num_complex::Complex64> {
        let (i, j) = self.network.resistor_branches;
        self.network.impedance(omega)?.trans_impedance(j - 1, i - 1)
    }

    /// Integration panels: dense around every resonance below the cutoff, one panel between.
    pub fn breakpoints(&self, t_max: f64) -> Vec<f64> {
        let w1 = self.omega_1;
        let upper = (UPPER_LIMIT * w1).max(40.0 * t_max / PhysicalConstants::CODATA.photon_temperature(1.0));
        let step = self.relative_linewidth.clamp(2e-5, 1e-3);
        let per_side = (RESONANCE_WINDOW / step).ceil() as usize;

        let mut points = vec![LOWER_LIMIT * w1];
        let mut k = 1usize;
        while (k as f64) * w1 * (1.0 - RESONANCE_WINDOW) < upper {
            let center = k as f64 * w1;
            for s in 0..=2 * per_side {
                let offset = (s as f64 - per_side as f64) * step;
                points.push(center * (1.0 + offset));
            }
            k += 1;
        }
        points.retain(|&w| w < upper);
        points.push(upper);
        points.sort_by(f64::total_cmp);
        points.dedup();
        points
    }

    pub fn power(&self, t1: f64, t2: f64) -> Result<SemiclassicalPower> {
        for t in [t1, t2] {
            if !(t > 0.0) {
                return Err(Error::NonPositiveTemperature(t));
            }
        }
        let (r1, r2) = self.network.resistances();
        let theta = PhysicalConstants::CODATA.photon_temperature(1.0);
        let prefactor = 2.0 * HBAR * r1 * r2 / std::f64::consts::PI;
        let integrand = |omega: f64| -> Result<f64> {
            let thermal = occupancy(theta * omega / t1) - occupancy(theta * omega / t2);
            if thermal == 0.0 {
                return Ok(0.0);
            }
            let z = self.resistor_trans_impedance(omega)?;
            Ok(prefactor * omega * z.norm_sqr() * thermal)
        };
        let Estimate {
            value,
            error,
            evaluations,
            ..
        } = integrate(integrand, &self.breakpoints(t1.max(t2)), &self.options.quadrature)?;
        Ok(SemiclassicalPower {
            power: value,
            error_estimate: error,
            evaluations,
        })
    }
}

/// Net semiclassical power into resistor 2 with the resistors at `t1` and `t2`.
pub fn semiclassical_power(
    params: &SystemParams,
    t1: f64,
    t2: f64,
    options: &SemiclassicalOptions,
) -> Result<SemiclassicalPower> {
    SemiclassicalModel::new(params, *options)?.power(t1, t2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model(resistance: f64) -> SemiclassicalModel {
        SemiclassicalModel::new(
            &SystemParams::reference_device(resistance, None, 0.04),
            SemiclassicalOptions::default(),
        )
        .unwrap()
    }

    #[test]
    fn equal_temperatures_give_zero() {
        let m = model(230.0);
        for t in [0.04, 0.1, 0.25] {
            assert_eq!(m.power(t, t).unwrap().power, 0.0);
        }
    }

    #[test]
    fn flows_from_hot_to_cold_and_is_antisymmetric() {
        let m = model(2.3);
        let forward = m.power(0.1, 0.08).unwrap().power;
        let backward = m.power(0.08, 0.1).unwrap().power;
        assert!(forward > 0.0);
        assert!((forward + backward).abs() <= 1e-6 * forward);
    }

    #[test]
    fn breakpoints_cover_resonances() {
        let m = model(2.3);
        let points = m.breakpoints(0.1);
        assert!(points.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(points[0], LOWER_LIMIT * m.omega_1);
        assert!((points.last().unwrap() / m.omega_1 - UPPER_LIMIT).abs() < 1e-12);
        // hot resistors push the cutoff up
        let hot = m.breakpoints(20.0);
        assert!(*hot.last().unwrap() > 30.0 * m.omega_1);
    }

    #[test]
    fn rejects_bad_temperatures() {
        assert_eq!(model(2.3).power(0.0, 0.1), Err(Error::NonPositiveTemperature(0.0)));
    }
}
