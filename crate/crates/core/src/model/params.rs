use crate::error::{Error, Result};

/// Default number of cavity modes kept in the quantum model.
pub const DEFAULT_N_MODES: usize = 30;
/// Default photon-number cutoff per mode.
pub const DEFAULT_N_PHOTONS_MAX: usize = 50;

/// Distributed-element description of the coplanar-waveguide cavity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CavityParams {
    /// Cavity length L, m.
    pub length: f64,
    /// Capacitance per unit length c, F/m.
    pub cap_per_len: f64,
    /// Inductance per unit length ℓ, H/m.
    pub ind_per_len: f64,
    /// Intrinsic series resistance per unit length r, Ω/m.
    pub loss_per_len: f64,
}

impl CavityParams {
    /// Builds the cavity from its characteristic impedance instead of ℓ (ℓ = Z₀²c).
    pub fn from_impedance(length: f64, cap_per_len: f64, z0: f64, loss_per_len: f64) -> Result<Self> {
        positive("cavity.z0", z0)?;
        let cavity = CavityParams {
            length,
            cap_per_len,
            ind_per_len: z0 * z0 * cap_per_len,
            loss_per_len,
        };
        cavity.validate()?;
        Ok(cavity)
    }

    pub fn validate(&self) -> Result<()> {
        positive("cavity.length", self.length)?;
        positive("cavity.cap_per_len", self.cap_per_len)?;
        positive("cavity.ind_per_len", self.ind_per_len)?;
        non_negative("cavity.loss_per_len", self.loss_per_len)
    }
}

/// One normal-metal resistor embedded in the cavity's centre conductor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResistorParams {
    /// Resistance R, Ω.
    pub resistance: f64,
    /// Position x/L along the cavity, strictly inside (0, 1).
    pub position_fraction: f64,
    /// Metal volume V, m³.
    pub volume: f64,
    /// Electron–phonon coupling constant Σ, W·m⁻³·K⁻⁵.
    pub sigma_ep: f64,
    /// Explicit cavity coupling rate γ, s⁻¹. Replaces the geometric formula when set.
    pub coupling_override: Option<f64>,
}

impl ResistorParams {
    pub fn validate(&self, which: Which) -> Result<()> {
        positive(which.key("resistance"), self.resistance)?;
        let x = self.position_fraction;
        if !(x > 0.0 && x < 1.0) {
            return Err(Error::invalid(
                which.key("position_fraction"),
                format!("must lie strictly inside (0, 1), got {x}"),
            ));
        }
        positive(which.key("volume"), self.volume)?;
        positive(which.key("sigma_ep"), self.sigma_ep)?;
        if let Some(gamma) = self.coupling_override {
            positive(which.key("coupling"), gamma)?;
        }
        Ok(())
    }

    /// ΣV, W/K⁵.
    pub fn phonon_conductance_coefficient(&self) -> f64 {
        self.sigma_ep * self.volume
    }
}

/// Selects resistor 1 or 2; used to name fields in validation errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    First,
    Second,
}

impl Which {
    fn key(self, field: &'static str) -> &'static str {
        match (self, field) {
            (Which::First, "resistance") => "resistor1.resistance",
            (Which::First, "position_fraction") => "resistor1.position_fraction",
            (Which::First, "volume") => "resistor1.volume",
            (Which::First, "sigma_ep") => "resistor1.sigma_ep",
            (Which::First, _) => "resistor1.coupling",
            (Which::Second, "resistance") => "resistor2.resistance",
            (Which::Second, "position_fraction") => "resistor2.position_fraction",
            (Which::Second, "volume") => "resistor2.volume",
            (Which::Second, "sigma_ep") => "resistor2.sigma_ep",
            (Which::Second, _) => "resistor2.coupling",
        }
    }
}

/// Full physical description of the two-resistor cavity plus truncation settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    pub cavity: CavityParams,
    pub resistor1: ResistorParams,
    pub resistor2: ResistorParams,
    /// Phonon bath temperature T, K.
    pub bath_temperature: f64,
    pub n_modes: usize,
    pub n_photons_max: usize,
}

impl SystemParams {
    pub fn validate(&self) -> Result<()> {
        self.cavity.validate()?;
        self.resistor1.validate(Which::First)?;
        self.resistor2.validate(Which::Second)?;
        positive("bath_temperature", self.bath_temperature)?;
        if self.n_modes < 1 {
            return Err(Error::invalid("n_modes", "must be at least 1"));
        }
        if self.n_photons_max < 2 {
            return Err(Error::invalid("n_photons_max", "must be at least 2"));
        }
        Ok(())
    }

    /// Reference device: 6.4 mm Nb-style CPW cavity (c = 130 pF/m, Z₀ = 60.1 Ω,
    /// r = 2 mΩ/m) with two identical AuPd resistors at 0.1·L and 0.9·L.
    ///
    /// `coupling` sets an explicit γ for both resistors; `None` uses the geometric formula.
    pub fn reference_device(resistance: f64, coupling: Option<f64>, bath_temperature: f64) -> Self {
        let cavity = CavityParams {
            length: 6.4e-3,
            cap_per_len: 130e-12,
            ind_per_len: 60.1 * 60.1 * 130e-12,
            loss_per_len: 2e-3,
        };
        let resistor = |x| ResistorParams {
            resistance,
            position_fraction: x,
            volume: 2.25e-20,
            sigma_ep: 3e9,
            coupling_override: coupling,
        };
        SystemParams {
            cavity,
            resistor1: resistor(0.1),
            resistor2: resistor(0.9),
            bath_temperature,
            n_modes: DEFAULT_N_MODES,
            n_photons_max: DEFAULT_N_PHOTONS_MAX,
        }
    }
}

fn positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid(name, format!("must be positive and finite, got {value}")))
    }
}

fn non_negative(name: &'static str, value: f64) -> Result<()> {
    if value >= 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::invalid(name, format!("must be non-negative and finite, got {value}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_device_is_valid() {
        SystemParams::reference_device(230.0, Some(1.53e9), 0.04)
            .validate()
            .unwrap();
        SystemParams::reference_device(2.3, None, 0.25).validate().unwrap();
    }

    #[test]
    fn from_impedance_derives_inductance() {
        let cav = CavityParams::from_impedance(6.4e-3, 130e-12, 60.1, 2e-3).unwrap();
        approx::assert_relative_eq!(cav.ind_per_len, 4.696e-7, max_relative = 1e-3);
    }

    #[test]
    fn rejects_bad_fields_by_name() {
        let mut p = SystemParams::reference_device(230.0, None, 0.04);
        p.bath_temperature = -1.0;
        match p.validate() {
            Err(Error::InvalidParameter { name, .. }) => assert_eq!(name, "bath_temperature"),
            other => panic!("unexpected {other:?}"),
        }

        let mut p = SystemParams::reference_device(230.0, None, 0.04);
        p.resistor2.position_fraction = 1.0;
        match p.validate() {
            Err(Error::InvalidParameter { name, .. }) => {
                assert_eq!(name, "resistor2.position_fraction")
            }
            other => panic!("unexpected {other:?}"),
        }

        let mut p = SystemParams::reference_device(230.0, Some(0.0), 0.04);
        p.resistor2.coupling_override = Some(1.0);
        assert!(matches!(
            p.validate(),
            Err(Error::InvalidParameter { name: "resistor1.coupling", .. })
        ));

        let mut p = SystemParams::reference_device(230.0, None, 0.04);
        p.n_photons_max = 1;
        assert!(p.validate().is_err());
        p.n_photons_max = 2;
        p.n_modes = 0;
        assert!(p.validate().is_err());
        p.n_modes = 1;
        p.cavity.loss_per_len = 0.0;
        assert!(p.validate().is_ok());
    }
}
