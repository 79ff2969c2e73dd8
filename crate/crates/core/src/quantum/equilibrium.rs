//! Self-consistent electron temperature of resistor 2.
//!
//! Resistor 2 settles where the photonic power it absorbs equals what its
//! electrons shed to the phonons, so T₂ = (P_cav(T₂)/(ΣV) + T⁵)^(1/5). The
//! right-hand side depends on T₂ through the cavity rates, hence the iteration.

use log::debug;

use super::model::{CavitySolution, QuantumModel};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FixedPointOptions {
    /// Convergence threshold on |T₂ − map(T₂)|, K.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Weight of the new iterate in the damped update.
    pub damping: f64,
}

impl Default for FixedPointOptions {
    fn default() -> Self {
        FixedPointOptions {
            tolerance: 1e-9,
            max_iterations: 1000,
            damping: 0.5,
        }
    }
}

/// Converged quasiequilibrium of resistor 2.
#[derive(Debug, Clone, PartialEq)]
pub struct Equilibrium {
    pub t2: f64,
    pub iterations: usize,
    /// |T₂ − map(T₂)| at the returned point, K.
    pub residual: f64,
    pub used_bisection: bool,
    pub solution: CavitySolution,
}

/// (P/(ΣV) + T⁵)^(1/5), or `None` if the photonic cooling exceeds what the phonons can supply.
pub fn quasiequilibrium_temperature(p_cav: f64, sigma_v: f64, t_bath: f64) -> Option<f64> {
    let arg = p_cav / sigma_v + t_bath.powi(5);
    (arg > 0.0).then(|| arg.powf(0.2))
}

struct Map<'a> {
    model: &'a QuantumModel,
    t1: f64,
    sigma_v: f64,
    t_bath: f64,
}

impl Map<'_> {
    fn solution(&self, t2: f64) -> Result<CavitySolution> {
        self.model.solve(self.t1, t2)
    }

    fn image(&self, sol: &CavitySolution) -> Option<f64> {
        quasiequilibrium_temperature(sol.power.per_resistor_net_power[1], self.sigma_v, self.t_bath)
    }

    /// Photonic power in minus phononic power out; strictly decreasing in T₂.
    fn heat_balance(&self, t2: f64) -> Result<f64> {
        let sol = self.solution(t2)?;
        Ok(sol.power.per_resistor_net_power[1] - sol.power.electron_phonon_power)
    }
}

/// Finds T₂ for resistor 1 held at `t1`.
///
/// Damped fixed-point iteration from T₂ = T; switches to bisection on the heat
/// balance if the iterates oscillate or leave the physical domain.
pub fn solve_equilibrium_t2(model: &QuantumModel, t1: f64, options: &FixedPointOptions) -> Result<Equilibrium> {
    if !(t1 > 0.0) {
        return Err(Error::NonPositiveTemperature(t1));
    }
    let params = model.params();
    let map = Map {
        model,
        t1,
        sigma_v: params.resistor2.phonon_conductance_coefficient(),
        t_bath: params.bath_temperature,
    };

    let alpha = options.damping;
    let mut t2 = params.bath_temperature;
    let mut last_step = f64::INFINITY;
    let mut growing_steps = 0;
    let mut residual = f64::INFINITY;

    for iteration in 0..options.max_iterations {
        let sol = map.solution(t2)?;
        let Some(next) = map.image(&sol) else {
            debug!("iteration {iteration}: map left the physical domain at T2 = {t2}");
            return bisect(&map, options, iteration);
        };
        residual = (next - t2).abs();
        debug!("iteration {iteration}: T2 = {t2:.12} K, residual = {residual:.3e} K");
        if residual < options.tolerance {
            return Ok(Equilibrium {
                t2,
                iterations: iteration,
                residual,
                used_bisection: false,
                solution: sol,
            });
        }
        let step = alpha * (next - t2);
        if step.abs() >= last_step.abs() && step.signum() != last_step.signum() {
            growing_steps += 1;
            if growing_steps >= 5 {
                debug!("iteration {iteration}: oscillation detected, switching to bisection");
                return bisect(&map, options, iteration);
            }
        } else {
            growing_steps = 0;
        }
        last_step = step;
        t2 += step;
    }
    Err(Error::NotConverged {
        iterations: options.max_iterations,
        residual,
    })
}

fn bisect(map: &Map<'_>, options: &FixedPointOptions, spent: usize) -> Result<Equilibrium> {
    let mut lo = 0.5 * map.t1.min(map.t_bath);
    let mut hi = 1.5 * map.t1.max(map.t_bath);
    let (mut f_lo, f_hi) = (map.heat_balance(lo)?, map.heat_balance(hi)?);
    if !(f_lo > 0.0 && f_hi < 0.0) {
        return Err(Error::NotConverged {
            iterations: spent,
            residual: f64::NAN,
        });
    }
    let mut iterations = spent;
    while hi - lo > options.tolerance {
        if iterations >= options.max_iterations {
            return Err(Error::NotConverged {
                iterations,
                residual: hi - lo,
            });
        }
        iterations += 1;
        let mid = 0.5 * (lo + hi);
        let f_mid = map.heat_balance(mid)?;
        if f_mid == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if (f_mid > 0.0) == (f_lo > 0.0) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    let t2 = 0.5 * (lo + hi);
    let solution = map.solution(t2)?;
    let residual = map.image(&solution).map_or(hi - lo, |next| (next - t2).abs());
    Ok(Equilibrium {
        t2,
        iterations,
        residual,
        used_bisection: true,
        solution,
    })
}
