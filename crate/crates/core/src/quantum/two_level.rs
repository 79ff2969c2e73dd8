use super::rates::{transition_rates, BathSpec, ModeRates};
use crate::error::{Error, Result};
use crate::model::constants::{PhysicalConstants, HBAR};

/// Analytic power of the fundamental mode restricted to {0, 1} photons.
///
/// Returns the power leaving resistor 2, ħω₁(Γ₂⁺Γ⁻ − Γ₂⁻Γ⁺)/Γ^Σ, where Γ⁺ and Γ⁻ are
/// the total 0→1 and 1→0 rates and Γ₂^± resistor 2's share. Negate it to get
/// the power into resistor 2.
pub fn two_level_power(bath1: &BathSpec, bath2: &BathSpec, omega_1: f64) -> Result<f64> {
    let rates = transition_rates(1, omega_1, &[*bath1, *bath2])?;
    let gamma_plus = rates.raise(0);
    let gamma_minus = rates.lower(1);
    let gamma_plus_2 = rates.per_bath_up[1];
    let gamma_minus_2 = rates.per_bath_down[1];
    let gamma_sigma = gamma_plus + gamma_minus;
    Ok(HBAR * omega_1 * (gamma_plus_2 * gamma_minus - gamma_minus_2 * gamma_plus) / gamma_sigma)
}

/// Temperature a single bath would need to reproduce mode 1's up/down ratio:
/// ħω₁ / (k_B ln(Γ_{1→0}/Γ_{0→1})).
///
/// Returns 0 K when the mode is never excited (Γ_{0→1} = 0).
pub fn effective_temperature(rates_mode1: &ModeRates) -> Result<f64> {
    let up = rates_mode1.raise(0);
    let down = rates_mode1.lower(1);
    if up >= down {
        return Err(Error::NoStationaryState {
            mode: rates_mode1.mode_index,
            up: rates_mode1.up,
            down: rates_mode1.down,
        });
    }
    if up == 0.0 {
        return Ok(0.0);
    }
    let theta = PhysicalConstants::CODATA.photon_temperature(rates_mode1.omega);
    // ln(B/A) = ln1p((B − A)/A) stays accurate when A ≈ B (hot cavity)
    Ok(theta / ((down - up) / up).ln_1p())
}
