//! The three experiments: a single solve, a T₁ sweep with self-consistent T₂,
//! and a power comparison between the models at fixed T₂ = T₁ − offset.

use log::{info, warn};
use rayon::prelude::*;

use photon_heat_core::circuit::SemiclassicalModel;
use photon_heat_core::quantum::{
    solve_equilibrium_t2, two_level_power, CavitySolution, FixedPointOptions, QuantumModel, RESISTOR_2,
};

use crate::config::{CouplingMode, RunConfig, T2Rule};
use crate::error::CliError;
use crate::table::{Cell, Table};

pub const SOLVE_COLUMNS: [&str; 9] = [
    "t1_K",
    "t2_K",
    "t_eff_K",
    "p_quantum_W",
    "p_two_level_W",
    "p_semiclassical_W",
    "q_eff",
    "iterations",
    "residual_K",
];

pub const SWEEP_COLUMNS: [&str; 5] = ["t1_K", "t2_K", "t_eff_K", "p_cav2_W", "p_elph_W"];

pub const COMPARE_COLUMNS: [&str; 7] = [
    "t1_K",
    "t2_K",
    "p_quantum_full_W",
    "p_two_level_W",
    "p_semiclassical_W",
    "rel_diff_quantum_semiclassical",
    "rel_diff_full_twolevel",
];

/// (a − b)/|b|, with 0/0 read as agreement.
pub fn relative_difference(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b) / b.abs()
    }
}

/// Models built once per run and shared by every grid point.
struct Solvers {
    quantum: QuantumModel,
    fixed_point: FixedPointOptions,
    semiclassical: Option<SemiclassicalModel>,
    t2_rule: T2Rule,
}

/// Resistor 2's temperature at one T₁ with the cavity solution that goes with it.
struct Point {
    t1: f64,
    t2: f64,
    iterations: usize,
    residual: f64,
    solution: CavitySolution,
}

impl Solvers {
    fn new(cfg: &RunConfig, semiclassical: bool) -> Result<Self, CliError> {
        let usage = |e: photon_heat_core::Error| CliError::Usage(e.to_string());
        let quantum = QuantumModel::new(cfg.system).map_err(usage)?;
        let semiclassical = if semiclassical {
            if cfg.coupling_mode == CouplingMode::Explicit {
                warn!("the circuit model uses the geometric coupling of the resistors, not the explicit γ");
            }
            Some(SemiclassicalModel::new(&cfg.system, cfg.numeric.semiclassical()).map_err(usage)?)
        } else {
            None
        };
        Ok(Solvers {
            quantum,
            fixed_point: cfg.numeric.fixed_point(),
            semiclassical,
            t2_rule: cfg.t2_rule,
        })
    }

    fn point(&self, t1: f64) -> Result<Point, CliError> {
        let fail = |source| CliError::Solver { t1, source };
        match self.t2_rule {
            T2Rule::SelfConsistent => {
                let eq = solve_equilibrium_t2(&self.quantum, t1, &self.fixed_point).map_err(fail)?;
                info!(
                    "T1 = {t1:.6} K: T2 = {:.9} K after {} iterations{}",
                    eq.t2,
                    eq.iterations,
                    if eq.used_bisection { " (bisection)" } else { "" }
                );
                Ok(Point {
                    t1,
                    t2: eq.t2,
                    iterations: eq.iterations,
                    residual: eq.residual,
                    solution: eq.solution,
                })
            }
            T2Rule::Offset(offset) => {
                let t2 = t1 - offset;
                let solution = self.quantum.solve(t1, t2).map_err(fail)?;
                info!("T1 = {t1:.6} K: T2 = {t2:.6} K (fixed offset)");
                Ok(Point {
                    t1,
                    t2,
                    iterations: 0,
                    residual: 0.0,
                    solution,
                })
            }
        }
    }

    /// Two-level power into resistor 2.
    fn two_level(&self, t1: f64, t2: f64) -> Result<f64, CliError> {
        let fail = |source| CliError::Solver { t1, source };
        let baths = self.quantum.baths(t1, t2).map_err(fail)?;
        let omega_1 = self.quantum.derived().omega_1();
        Ok(-two_level_power(&baths[0], &baths[1], omega_1).map_err(fail)?)
    }

    fn semiclassical(&self, t1: f64, t2: f64) -> Result<Option<f64>, CliError> {
        let Some(model) = &self.semiclassical else {
            return Ok(None);
        };
        let p = model.power(t1, t2).map_err(|source| CliError::Solver { t1, source })?;
        info!("T1 = {t1:.6} K: semiclassical power {:.6e} W ({} evaluations)", p.power, p.evaluations);
        Ok(Some(p.power))
    }
}

/// Evaluates `f` on every grid point in parallel; rows keep grid order and the
/// first failure in grid order is reported.
fn sweep<F>(grid: &[f64], f: F) -> Result<Vec<Vec<Cell>>, CliError>
where
    F: Fn(f64) -> Result<Vec<Cell>, CliError> + Sync,
{
    let results: Vec<_> = grid.par_iter().map(|&t1| f(t1)).collect();
    results.into_iter().collect()
}

fn require_sweep(cfg: &RunConfig, command: &str) -> Result<Vec<f64>, CliError> {
    cfg.sweep
        .map(|s| s.grid())
        .ok_or_else(|| CliError::Usage(format!("{command} needs a sweep block (sweep.start, sweep.stop, sweep.points)")))
}

/// One row at `t1`.
pub fn cmd_solve(cfg: &RunConfig) -> Result<Table, CliError> {
    if cfg.sweep.is_some() {
        return Err(CliError::Usage("solve takes a single t1, not a sweep block".into()));
    }
    let t1 = cfg.t1.ok_or_else(|| CliError::Usage("solve needs `t1`".into()))?;
    let solvers = Solvers::new(cfg, cfg.model.semiclassical())?;
    let pt = solvers.point(t1)?;
    let fail = |source| CliError::Solver { t1, source };
    let t_eff = pt.solution.effective_temperature().map_err(fail)?;
    let p_quantum = cfg
        .model
        .quantum()
        .then(|| pt.solution.power.per_resistor_net_power[RESISTOR_2]);
    let p_two_level = if cfg.model.two_level() {
        Some(solvers.two_level(t1, pt.t2)?)
    } else {
        None
    };
    let p_semiclassical = solvers.semiclassical(t1, pt.t2)?;

    let mut table = Table::new(SOLVE_COLUMNS.to_vec());
    table.rows.push(vec![
        Cell::Float(t1),
        Cell::Float(pt.t2),
        Cell::Float(t_eff),
        p_quantum.into(),
        p_two_level.into(),
        p_semiclassical.into(),
        Cell::Float(solvers.quantum.derived().q_eff),
        Cell::Int(pt.iterations as u64),
        Cell::Float(pt.residual),
    ]);
    Ok(table)
}

/// T₂, T_eff and the heat balance of resistor 2 across the T₁ grid.
pub fn cmd_sweep_t1(cfg: &RunConfig) -> Result<Table, CliError> {
    let grid = require_sweep(cfg, "sweep-t1")?;
    if cfg.t2_rule != T2Rule::SelfConsistent {
        return Err(CliError::Usage("sweep-t1 needs t2_rule = self_consistent".into()));
    }
    let solvers = Solvers::new(cfg, false)?;
    let rows = sweep(&grid, |t1| {
        let pt = solvers.point(t1)?;
        let t_eff = pt
            .solution
            .effective_temperature()
            .map_err(|source| CliError::Solver { t1, source })?;
        let power = &pt.solution.power;
        Ok(vec![
            Cell::Float(pt.t1),
            Cell::Float(pt.t2),
            Cell::Float(t_eff),
            Cell::Float(power.per_resistor_net_power[RESISTOR_2]),
            Cell::Float(power.electron_phonon_power),
        ])
    })?;
    Ok(Table {
        header: SWEEP_COLUMNS.to_vec(),
        rows,
    })
}

/// Full quantum, two-level and circuit powers into resistor 2 at T₂ = T₁ − offset.
pub fn cmd_compare_power(cfg: &RunConfig) -> Result<Table, CliError> {
    let grid = require_sweep(cfg, "compare-power")?;
    if !matches!(cfg.t2_rule, T2Rule::Offset(_)) {
        return Err(CliError::Usage("compare-power needs t2_rule = offset".into()));
    }
    let solvers = Solvers::new(cfg, true)?;
    let rows = sweep(&grid, |t1| {
        let pt = solvers.point(t1)?;
        let full = pt.solution.power.per_resistor_net_power[RESISTOR_2];
        let two_level = solvers.two_level(t1, pt.t2)?;
        let circuit = solvers.semiclassical(t1, pt.t2)?.expect("circuit model is built");
        Ok(vec![
            Cell::Float(t1),
            Cell::Float(pt.t2),
            Cell::Float(full),
            Cell::Float(two_level),
            Cell::Float(circuit),
            Cell::Float(relative_difference(full, circuit)),
            Cell::Float(relative_difference(full, two_level)),
        ])
    })?;
    Ok(Table {
        header: COMPARE_COLUMNS.to_vec(),
        rows,
    })
}
