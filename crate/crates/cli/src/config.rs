//! Run configuration: a flat `key = value` text format with dotted keys.
//!
//! Blank lines are skipped and `#` starts a comment that runs to the end of the
//! line. Every key is optional; physical parameters default to the reference
//! device, truncation and numerical settings to the solver defaults. Unknown or
//! repeated keys are rejected with the offending line number.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use photon_heat_core::circuit::{QuadratureOptions, SemiclassicalOptions, DEFAULT_N_NODES, MIN_N_NODES};
use photon_heat_core::quantum::FixedPointOptions;
use photon_heat_core::{CavityParams, SystemParams};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { line: usize, key: String },

    #[error("line {line}: key `{key}` already set on line {first}")]
    DuplicateKey { line: usize, key: String, first: usize },

    #[error("line {line}: bad value for `{key}`: {message}")]
    BadValue { line: usize, key: String, message: String },

    #[error("invalid `{key}`: {reason}")]
    Invalid { key: &'static str, reason: String },

    #[error(transparent)]
    System(#[from] photon_heat_core::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CouplingMode {
    /// γ given per resistor by `resistorN.coupling`.
    Explicit,
    /// γ = 2R_eff/(Lℓ) from the resistor and cavity parameters.
    Geometric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelChoice {
    Quantum,
    TwoLevel,
    Semiclassical,
    All,
}

impl ModelChoice {
    pub fn quantum(self) -> bool {
        matches!(self, ModelChoice::Quantum | ModelChoice::All)
    }

    pub fn two_level(self) -> bool {
        matches!(self, ModelChoice::TwoLevel | ModelChoice::All)
    }

    pub fn semiclassical(self) -> bool {
        matches!(self, ModelChoice::Semiclassical | ModelChoice::All)
    }
}

/// Uniform grid in T₁, both endpoints included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sweep {
    pub start: f64,
    pub stop: f64,
    pub points: usize,
}

impl Sweep {
    pub fn grid(&self) -> Vec<f64> {
        let last = self.points - 1;
        (0..self.points)
            .map(|i| {
                if i == last {
                    self.stop
                } else {
                    self.start + (self.stop - self.start) * i as f64 / last as f64
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum T2Rule {
    /// T₂ from the heat balance of resistor 2.
    SelfConsistent,
    /// T₂ = T₁ − offset.
    Offset(f64),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NumericOptions {
    pub n_nodes: usize,
    pub quadrature_tol: f64,
    pub fixed_point_tol: f64,
    pub max_iterations: usize,
}

impl Default for NumericOptions {
    fn default() -> Self {
        let fp = FixedPointOptions::default();
        NumericOptions {
            n_nodes: DEFAULT_N_NODES,
            quadrature_tol: QuadratureOptions::default().rel_tol,
            fixed_point_tol: fp.tolerance,
            max_iterations: fp.max_iterations,
        }
    }
}

impl NumericOptions {
    pub fn fixed_point(&self) -> FixedPointOptions {
        FixedPointOptions {
            tolerance: self.fixed_point_tol,
            max_iterations: self.max_iterations,
            ..Default::default()
        }
    }

    pub fn semiclassical(&self) -> SemiclassicalOptions {
        SemiclassicalOptions {
            n_nodes: self.n_nodes,
            quadrature: QuadratureOptions {
                rel_tol: self.quadrature_tol,
                ..Default::default()
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub system: SystemParams,
    pub coupling_mode: CouplingMode,
    pub model: ModelChoice,
    /// Resistor 1 temperature for a single solve, K.
    pub t1: Option<f64>,
    pub sweep: Option<Sweep>,
    pub t2_rule: T2Rule,
    pub output_path: Option<PathBuf>,
    pub numeric: NumericOptions,
}

const KEYS: &[&str] = &[
    "bath_temperature",
    "t1",
    "coupling_mode",
    "model",
    "n_modes",
    "n_photons_max",
    "cavity.length",
    "cavity.cap_per_len",
    "cavity.ind_per_len",
    "cavity.z0",
    "cavity.loss_per_len",
    "resistor1.resistance",
    "resistor1.position_fraction",
    "resistor1.volume",
    "resistor1.sigma_ep",
    "resistor1.coupling",
    "resistor2.resistance",
    "resistor2.position_fraction",
    "resistor2.volume",
    "resistor2.sigma_ep",
    "resistor2.coupling",
    "sweep.variable",
    "sweep.start",
    "sweep.stop",
    "sweep.points",
    "t2_rule",
    "t2_offset",
    "output",
    "numeric.n_nodes",
    "numeric.quadrature_tol",
    "numeric.fixed_point_tol",
    "numeric.max_iterations",
];

struct Entries(HashMap<&'static str, (String, usize)>);

impl Entries {
    fn raw(&self, key: &'static str) -> Option<(&str, usize)> {
        self.0.get(key).map(|(v, line)| (v.as_str(), *line))
    }

    fn bad(key: &str, line: usize, message: impl Into<String>) -> ConfigError {
        ConfigError::BadValue {
            line,
            key: key.to_string(),
            message: message.into(),
        }
    }

    fn float(&self, key: &'static str) -> Result<Option<f64>, ConfigError> {
        let Some((value, line)) = self.raw(key) else {
            return Ok(None);
        };
        match value.parse::<f64>() {
            Ok(x) if x.is_finite() => Ok(Some(x)),
            Ok(_) => Err(Self::bad(key, line, "must be finite")),
            Err(_) => Err(Self::bad(key, line, format!("`{value}` is not a number"))),
        }
    }

    fn float_or(&self, key: &'static str, default: f64) -> Result<f64, ConfigError> {
        Ok(self.float(key)?.unwrap_or(default))
    }

    fn count_or(&self, key: &'static str, default: usize) -> Result<usize, ConfigError> {
        let Some((value, line)) = self.raw(key) else {
            return Ok(default);
        };
        value
            .parse::<usize>()
            .map_err(|_| Self::bad(key, line, format!("`{value}` is not a non-negative integer")))
    }

    fn choice<T: Copy>(&self, key: &'static str, options: &[(&str, T)], default: T) -> Result<T, ConfigError> {
        let Some((value, line)) = self.raw(key) else {
            return Ok(default);
        };
        options
            .iter()
            .find(|(name, _)| *name == value)
            .map(|(_, v)| *v)
            .ok_or_else(|| {
                let names: Vec<&str> = options.iter().map(|(n, _)| *n).collect();
                Self::bad(key, line, format!("`{value}` is not one of {}", names.join(", ")))
            })
    }
}

fn tokenize(text: &str) -> Result<Entries, ConfigError> {
    let mut map: HashMap<&'static str, (String, usize)> = HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| ConfigError::Syntax {
            line,
            message: format!("expected `key = value`, found `{content}`"),
        })?;
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() {
            return Err(ConfigError::Syntax {
                line,
                message: "missing key before `=`".into(),
            });
        }
        if value.is_empty() {
            return Err(ConfigError::Syntax {
                line,
                message: format!("missing value for `{key}`"),
            });
        }
        let known = KEYS.iter().copied().find(|k| *k == key).ok_or_else(|| ConfigError::UnknownKey {
            line,
            key: key.to_string(),
        })?;
        if let Some((_, first)) = map.get(known) {
            return Err(ConfigError::DuplicateKey {
                line,
                key: key.to_string(),
                first: *first,
            });
        }
        map.insert(known, (value.to_string(), line));
    }
    Ok(Entries(map))
}

fn invalid(key: &'static str, reason: impl Into<String>) -> ConfigError {
    ConfigError::Invalid {
        key,
        reason: reason.into(),
    }
}

/// Parses and validates a configuration file's text.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let e = tokenize(text)?;
    let reference = SystemParams::reference_device(230.0, None, 0.04);

    let coupling_mode = e.choice(
        "coupling_mode",
        &[("explicit", CouplingMode::Explicit), ("geometric", CouplingMode::Geometric)],
        CouplingMode::Geometric,
    )?;

    let length = e.float_or("cavity.length", reference.cavity.length)?;
    let cap_per_len = e.float_or("cavity.cap_per_len", reference.cavity.cap_per_len)?;
    let loss_per_len = e.float_or("cavity.loss_per_len", reference.cavity.loss_per_len)?;
    let cavity = match (e.float("cavity.ind_per_len")?, e.float("cavity.z0")?) {
        (Some(_), Some(_)) => {
            return Err(invalid("cavity.z0", "give either cavity.z0 or cavity.ind_per_len, not both"))
        }
        (None, Some(z0)) => CavityParams::from_impedance(length, cap_per_len, z0, loss_per_len)?,
        (ind, None) => CavityParams {
            length,
            cap_per_len,
            ind_per_len: ind.unwrap_or(reference.cavity.ind_per_len),
            loss_per_len,
        },
    };

    let mut system = reference;
    system.cavity = cavity;
    system.bath_temperature = e.float_or("bath_temperature", reference.bath_temperature)?;
    system.n_modes = e.count_or("n_modes", reference.n_modes)?;
    system.n_photons_max = e.count_or("n_photons_max", reference.n_photons_max)?;

    let resistor_keys: [[&'static str; 5]; 2] = [
        [
            "resistor1.resistance",
            "resistor1.position_fraction",
            "resistor1.volume",
            "resistor1.sigma_ep",
            "resistor1.coupling",
        ],
        [
            "resistor2.resistance",
            "resistor2.position_fraction",
            "resistor2.volume",
            "resistor2.sigma_ep",
            "resistor2.coupling",
        ],
    ];
    for (resistor, keys) in [&mut system.resistor1, &mut system.resistor2].into_iter().zip(resistor_keys) {
        resistor.resistance = e.float_or(keys[0], resistor.resistance)?;
        resistor.position_fraction = e.float_or(keys[1], resistor.position_fraction)?;
        resistor.volume = e.float_or(keys[2], resistor.volume)?;
        resistor.sigma_ep = e.float_or(keys[3], resistor.sigma_ep)?;
        let coupling = e.float(keys[4])?;
        resistor.coupling_override = match (coupling_mode, coupling) {
            (CouplingMode::Explicit, Some(g)) => Some(g),
            (CouplingMode::Explicit, None) => {
                return Err(invalid(keys[4], "required when coupling_mode = explicit"))
            }
            (CouplingMode::Geometric, Some(_)) => {
                return Err(invalid(keys[4], "only allowed when coupling_mode = explicit"))
            }
            (CouplingMode::Geometric, None) => None,
        };
    }
    system.validate()?;

    let model = e.choice(
        "model",
        &[
            ("quantum", ModelChoice::Quantum),
            ("two_level", ModelChoice::TwoLevel),
            ("semiclassical", ModelChoice::Semiclassical),
            ("all", ModelChoice::All),
        ],
        ModelChoice::All,
    )?;

    let t1 = e.float("t1")?;
    if let Some(t) = t1 {
        if !(t > 0.0) {
            return Err(invalid("t1", format!("must be positive, got {t}")));
        }
    }

    let sweep_keys = ["sweep.variable", "sweep.start", "sweep.stop", "sweep.points"];
    let sweep = if sweep_keys.iter().any(|k| e.raw(k).is_some()) {
        e.choice("sweep.variable", &[("t1", ())], ())?;
        let (start, stop) = (e.float("sweep.start")?, e.float("sweep.stop")?);
        let points = e.count_or("sweep.points", 0)?;
        let start = start.ok_or_else(|| invalid("sweep.start", "missing"))?;
        let stop = stop.ok_or_else(|| invalid("sweep.stop", "missing"))?;
        if !(start > 0.0) {
            return Err(invalid("sweep.start", format!("must be positive, got {start}")));
        }
        if !(start < stop) {
            return Err(invalid("sweep.stop", format!("must exceed sweep.start ({stop} <= {start})")));
        }
        if points < 2 {
            return Err(invalid("sweep.points", format!("must be at least 2, got {points}")));
        }
        Some(Sweep { start, stop, points })
    } else {
        None
    };

    let rule = e.choice(
        "t2_rule",
        &[("self_consistent", false), ("offset", true)],
        false,
    )?;
    let offset = e.float("t2_offset")?;
    let t2_rule = match (rule, offset) {
        (false, None) => T2Rule::SelfConsistent,
        (false, Some(_)) => return Err(invalid("t2_offset", "only allowed when t2_rule = offset")),
        (true, None) => return Err(invalid("t2_offset", "required when t2_rule = offset")),
        (true, Some(offset)) => {
            let lowest = match (sweep, t1) {
                (Some(s), Some(t)) => s.start.min(t),
                (Some(s), None) => s.start,
                (None, Some(t)) => t,
                (None, None) => f64::INFINITY,
            };
            if !(lowest - offset > 0.0) {
                return Err(invalid(
                    "t2_offset",
                    format!("T1 - offset must stay positive (T1 = {lowest}, offset = {offset})"),
                ));
            }
            T2Rule::Offset(offset)
        }
    };

    let defaults = NumericOptions::default();
    let numeric = NumericOptions {
        n_nodes: e.count_or("numeric.n_nodes", defaults.n_nodes)?,
        quadrature_tol: e.float_or("numeric.quadrature_tol", defaults.quadrature_tol)?,
        fixed_point_tol: e.float_or("numeric.fixed_point_tol", defaults.fixed_point_tol)?,
        max_iterations: e.count_or("numeric.max_iterations", defaults.max_iterations)?,
    };
    if numeric.n_nodes < MIN_N_NODES {
        return Err(invalid("numeric.n_nodes", format!("must be at least {MIN_N_NODES}")));
    }
    if !(numeric.quadrature_tol > 0.0 && numeric.quadrature_tol < 1.0) {
        return Err(invalid("numeric.quadrature_tol", "must lie in (0, 1)"));
    }
    if !(numeric.fixed_point_tol > 0.0) {
        return Err(invalid("numeric.fixed_point_tol", "must be positive"));
    }
    if numeric.max_iterations == 0 {
        return Err(invalid("numeric.max_iterations", "must be at least 1"));
    }

    Ok(RunConfig {
        system,
        coupling_mode,
        model,
        t1,
        sweep,
        t2_rule,
        output_path: e.raw("output").map(|(v, _)| PathBuf::from(v)),
        numeric,
    })
}

/// Serializes every setting, defaults included; `parse_config` reads it back unchanged.
pub fn to_config_text(cfg: &RunConfig) -> String {
    let mut out = String::new();
    let mut put = |key: &str, value: String| {
        let _ = writeln!(out, "{key} = {value}");
    };
    let s = &cfg.system;
    put("bath_temperature", format!("{:?}", s.bath_temperature));
    if let Some(t1) = cfg.t1 {
        put("t1", format!("{t1:?}"));
    }
    put(
        "coupling_mode",
        match cfg.coupling_mode {
            CouplingMode::Explicit => "explicit",
            CouplingMode::Geometric => "geometric",
        }
        .into(),
    );
    put(
        "model",
        match cfg.model {
            ModelChoice::Quantum => "quantum",
            ModelChoice::TwoLevel => "two_level",
            ModelChoice::Semiclassical => "semiclassical",
            ModelChoice::All => "all",
        }
        .into(),
    );
    put("n_modes", s.n_modes.to_string());
    put("n_photons_max", s.n_photons_max.to_string());
    put("cavity.length", format!("{:?}", s.cavity.length));
    put("cavity.cap_per_len", format!("{:?}", s.cavity.cap_per_len));
    put("cavity.ind_per_len", format!("{:?}", s.cavity.ind_per_len));
    put("cavity.loss_per_len", format!("{:?}", s.cavity.loss_per_len));
    for (name, r) in [("resistor1", &s.resistor1), ("resistor2", &s.resistor2)] {
        put(&format!("{name}.resistance"), format!("{:?}", r.resistance));
        put(&format!("{name}.position_fraction"), format!("{:?}", r.position_fraction));
        put(&format!("{name}.volume"), format!("{:?}", r.volume));
        put(&format!("{name}.sigma_ep"), format!("{:?}", r.sigma_ep));
        if let Some(g) = r.coupling_override {
            put(&format!("{name}.coupling"), format!("{g:?}"));
        }
    }
    if let Some(sw) = cfg.sweep {
        put("sweep.variable", "t1".into());
        put("sweep.start", format!("{:?}", sw.start));
        put("sweep.stop", format!("{:?}", sw.stop));
        put("sweep.points", sw.points.to_string());
    }
    match cfg.t2_rule {
        T2Rule::SelfConsistent => put("t2_rule", "self_consistent".into()),
        T2Rule::Offset(offset) => {
            put("t2_rule", "offset".into());
            put("t2_offset", format!("{offset:?}"));
        }
    }
    if let Some(path) = &cfg.output_path {
        put("output", path.display().to_string());
    }
    let n = &cfg.numeric;
    put("numeric.n_nodes", n.n_nodes.to_string());
    put("numeric.quadrature_tol", format!("{:?}", n.quadrature_tol));
    put("numeric.fixed_point_tol", format!("{:?}", n.fixed_point_tol));
    put("numeric.max_iterations", n.max_iterations.to_string());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_file_is_the_reference_device() {
        let cfg = parse_config("# nothing here\n\n").unwrap();
        assert_eq!(cfg.system, SystemParams::reference_device(230.0, None, 0.04));
        assert_eq!(cfg.coupling_mode, CouplingMode::Geometric);
        assert_eq!(cfg.model, ModelChoice::All);
        assert_eq!(cfg.t2_rule, T2Rule::SelfConsistent);
        assert_eq!(cfg.numeric, NumericOptions::default());
        assert!(cfg.sweep.is_none() && cfg.t1.is_none() && cfg.output_path.is_none());
    }

    #[test]
    fn trailing_comments_and_spacing() {
        let cfg = parse_config("  t1=0.1   # kelvin\nmodel = quantum").unwrap();
        assert_eq!(cfg.t1, Some(0.1));
        assert_eq!(cfg.model, ModelChoice::Quantum);
    }

    #[test]
    fn grid_is_uniform_and_inclusive() {
        let grid = Sweep {
            start: 0.04,
            stop: 0.4,
            points: 37,
        }
        .grid();
        assert_eq!(grid.len(), 37);
        assert_eq!(grid[0], 0.04);
        assert_eq!(grid[36], 0.4);
        assert!((grid[1] - 0.05).abs() < 1e-15);
    }

    #[test]
    fn explicit_couplings_are_required_and_exclusive() {
        let err = parse_config("coupling_mode = explicit\nresistor1.coupling = 1e9").unwrap_err();
        assert!(matches!(err, ConfigError::Invalid { key: "resistor2.coupling", .. }));
        let err = parse_config("resistor1.coupling = 1e9").unwrap_err();
        assert!(matches!(err, ConfigError::Invalid { key: "resistor1.coupling", .. }));
    }

    #[test]
    fn offset_rule_checks() {
        assert!(matches!(
            parse_config("t2_rule = offset").unwrap_err(),
            ConfigError::Invalid { key: "t2_offset", .. }
        ));
        assert!(matches!(
            parse_config("t2_offset = 0.02").unwrap_err(),
            ConfigError::Invalid { key: "t2_offset", .. }
        ));
        let text = "t2_rule = offset\nt2_offset = 0.05\nsweep.start = 0.04\nsweep.stop = 0.1\nsweep.points = 3";
        assert!(matches!(
            parse_config(text).unwrap_err(),
            ConfigError::Invalid { key: "t2_offset", .. }
        ));
    }
}
