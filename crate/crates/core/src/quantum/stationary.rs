use super::rates::ModeRates;
use crate::error::{Error, Result};

/// Stationary photon-number distribution of one mode, truncated at `n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct StationaryDistribution {
    pub mode_index: usize,
    /// p_n for n = 0..=n_max.
    pub probabilities: Vec<f64>,
    /// Mass the untruncated law puts above n_max, (A/B)^(n_max+1).
    pub truncation_tail: f64,
}

impl StationaryDistribution {
    pub fn n_max(&self) -> usize {
        self.probabilities.len() - 1
    }

    pub fn mean_photon_number(&self) -> f64 {
        self.probabilities
            .iter()
            .enumerate()
            .map(|(n, p)| n as f64 * p)
            .sum()
    }
}

/// Stationary state of the truncated birth–death chain on {0, …, n_max}.
///
/// Detailed balance between neighbours, (n+1)A·p_n = (n+1)B·p_{n+1}, makes the
/// law geometric with ratio A/B; no eigen-solve is needed.
pub fn stationary_distribution(rates: &ModeRates, n_max: usize) -> Result<StationaryDistribution> {
    let (up, down) = (rates.up, rates.down);
    if !(down > 0.0) || up >= down {
        return Err(Error::NoStationaryState {
            mode: rates.mode_index,
            up,
            down,
        });
    }
    let ratio = up / down;
    let truncation_tail = ratio.powi(n_max as i32 + 1);
    // p_0 = (1 − λ)/(1 − λ^(N+1)), with 1 − λ = (B − A)/B to keep precision as λ → 0
    let p0 = ((down - up) / down) / (1.0 - truncation_tail);

    let mut probabilities = Vec::with_capacity(n_max + 1);
    let mut p = p0;
    for _ in 0..=n_max {
        probabilities.push(p);
        p *= ratio;
    }
    Ok(StationaryDistribution {
        mode_index: rates.mode_index,
        probabilities,
        truncation_tail,
    })
}
