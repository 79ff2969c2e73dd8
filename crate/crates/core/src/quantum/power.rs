use super::rates::{transition_rates, BathSpec, ModeRates};
use super::stationary::{stationary_distribution, StationaryDistribution};
use crate::error::{Error, Result};
use crate::model::constants::HBAR;
use crate::model::params::ResistorParams;

/// Net photonic power flowing from the cavity into bath `bath`, summed over modes.
///
/// Positive when the cavity heats the bath. Each mode contributes
/// ħω_k Σ_n (n·B_k^(m) − (n+1)·A_k^(m)) p_n, with the n_max → n_max+1 jump
/// omitted because that state is outside the truncated chain. The omission keeps
/// the per-bath powers summing to zero for any cutoff.
pub fn net_power_into_bath(
    bath: usize,
    distributions: &[StationaryDistribution],
    rates: &[ModeRates],
) -> Result<f64> {
    Ok(mode_powers_into_bath(bath, distributions, rates)?.iter().sum())
}

/// Per-mode terms of [`net_power_into_bath`], in mode order.
pub fn mode_powers_into_bath(
    bath: usize,
    distributions: &[StationaryDistribution],
    rates: &[ModeRates],
) -> Result<Vec<f64>> {
    if distributions.len() != rates.len()
        || distributions
            .iter()
            .zip(rates)
            .any(|(d, r)| d.mode_index != r.mode_index)
    {
        return Err(Error::invalid(
            "distributions",
            "distributions and rates must cover the same modes in the same order",
        ));
    }
    rates
        .iter()
        .zip(distributions)
        .map(|(r, d)| {
            let count = r.n_baths();
            let (up, down) = match (r.per_bath_up.get(bath), r.per_bath_down.get(bath)) {
                (Some(&u), Some(&dn)) => (u, dn),
                _ => return Err(Error::BathOutOfRange { index: bath, count }),
            };
            let n_max = d.n_max();
            let flux: f64 = d
                .probabilities
                .iter()
                .enumerate()
                .map(|(n, p)| {
                    let raise = if n < n_max { (n + 1) as f64 * up } else { 0.0 };
                    (n as f64 * down - raise) * p
                })
                .sum();
            Ok(HBAR * r.omega * flux)
        })
        .collect()
}

/// ΣV(T_e⁵ − T_ph⁵): heat leaving the electrons into the phonon bath.
pub fn electron_phonon_power(resistor: &ResistorParams, t_electron: f64, t_bath: f64) -> f64 {
    resistor.phonon_conductance_coefficient() * (t_electron.powi(5) - t_bath.powi(5))
}

/// Rates and stationary laws for a set of modes sharing the same baths.
#[derive(Debug, Clone, PartialEq)]
pub struct CavityState {
    pub rates: Vec<ModeRates>,
    pub distributions: Vec<StationaryDistribution>,
}

impl CavityState {
    /// Solves every mode in `omegas` (mode k = position + 1) against `baths`.
    pub fn solve(omegas: &[f64], baths: &[BathSpec], n_max: usize) -> Result<Self> {
        let mut rates = Vec::with_capacity(omegas.len());
        let mut distributions = Vec::with_capacity(omegas.len());
        for (i, &omega) in omegas.iter().enumerate() {
            let r = transition_rates(i + 1, omega, baths)?;
            distributions.push(stationary_distribution(&r, n_max)?);
            rates.push(r);
        }
        Ok(CavityState {
            rates,
            distributions,
        })
    }

    pub fn net_power_into(&self, bath: usize) -> Result<f64> {
        net_power_into_bath(bath, &self.distributions, &self.rates)
    }

    pub fn mode_powers_into(&self, bath: usize) -> Result<Vec<f64>> {
        mode_powers_into_bath(bath, &self.distributions, &self.rates)
    }

    pub fn max_truncation_tail(&self) -> f64 {
        self.distributions
            .iter()
            .map(|d| d.truncation_tail)
            .fold(0.0, f64::max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const W1: f64 = 6.283e10;

    fn two_baths(g1: f64, t1: f64, g2: f64, t2: f64) -> [BathSpec; 2] {
        [BathSpec::new(g1, t1).unwrap(), BathSpec::new(g2, t2).unwrap()]
    }

    #[test]
    fn equal_temperatures_carry_no_power() {
        for t in [0.04, 0.1, 0.25, 0.4] {
            let state = CavityState::solve(&[W1, 2.0 * W1, 3.0 * W1], &two_baths(1.53e9, t, 4.0e8, t), 50)
                .unwrap();
            assert!(state.net_power_into(0).unwrap().abs() < 1e-22);
            assert!(state.net_power_into(1).unwrap().abs() < 1e-22);
        }
    }

    #[test]
    fn fundamental_mode_power_near_two_level_value() {
        let state = CavityState::solve(&[W1], &two_baths(1.53e9, 0.1, 1.53e9, 0.08), 50).unwrap();
        let p2 = state.net_power_into(1).unwrap();
        // two-level closed form gives 2.92e-17 W; multi-photon occupation adds ~1%
        assert_relative_eq!(p2, 2.92e-17, max_relative = 2e-2);
        assert!(p2 > 0.0);
    }

    #[test]
    fn power_scales_with_coupling() {
        let a = CavityState::solve(&[W1, 2.0 * W1], &two_baths(1.53e9, 0.1, 1.53e9, 0.08), 50)
            .unwrap()
            .net_power_into(1)
            .unwrap();
        let b = CavityState::solve(&[W1, 2.0 * W1], &two_baths(3.06e9, 0.1, 3.06e9, 0.08), 50)
            .unwrap()
            .net_power_into(1)
            .unwrap();
        assert_relative_eq!(b, 2.0 * a, max_relative = 1e-12);
    }

    #[test]
    fn bath_powers_balance() {
        let baths = [
            BathSpec::new(1.53e9, 0.3).unwrap(),
            BathSpec::new(1.53e9, 0.07).unwrap(),
            BathSpec::new(4.26e3, 0.04).unwrap(),
        ];
        let omegas: Vec<f64> = (1..=10).map(|k| k as f64 * W1).collect();
        let state = CavityState::solve(&omegas, &baths, 50).unwrap();
        let p: Vec<f64> = (0..3).map(|i| state.net_power_into(i).unwrap()).collect();
        let scale = p.iter().map(|x| x.abs()).fold(0.0, f64::max);
        assert!((p.iter().sum::<f64>()).abs() < 1e-10 * scale);
        assert!(p[0] < 0.0 && p[1] > 0.0);
    }

    #[test]
    fn errors() {
        let state = CavityState::solve(&[W1], &two_baths(1.0e9, 0.1, 1.0e9, 0.2), 10).unwrap();
        assert_eq!(
            state.net_power_into(2),
            Err(Error::BathOutOfRange { index: 2, count: 2 })
        );
        let other = CavityState::solve(&[W1, 2.0 * W1], &two_baths(1.0e9, 0.1, 1.0e9, 0.2), 10).unwrap();
        assert!(net_power_into_bath(0, &state.distributions, &other.rates).is_err());
    }

    #[test]
    fn electron_phonon() {
        let r = ResistorParams {
            resistance: 230.0,
            position_fraction: 0.9,
            volume: 2.25e-20,
            sigma_ep: 3e9,
            coupling_override: None,
        };
        assert_eq!(electron_phonon_power(&r, 0.1, 0.1), 0.0);
        assert_relative_eq!(electron_phonon_power(&r, 0.1, 0.04), 6.68e-16, max_relative = 1e-3);
        assert_eq!(
            electron_phonon_power(&r, 0.04, 0.1),
            -electron_phonon_power(&r, 0.1, 0.04)
        );
    }
}
