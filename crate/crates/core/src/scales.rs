//! Unit system: mass, speed of light and Planck constant together with the
//! derived Compton length and Compton time.
//!
//! All other modules work in dimensionless Compton units (lengths measured in
//! `compton_length`, times in `compton_time`, energies in `m c^2`); this type
//! does the conversion at the boundary.

use crate::error::{Error, Result};

/// Fundamental scales of the problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalScales {
    mass: f64,
    light_speed: f64,
    hbar: f64,
    compton_length: f64,
    compton_time: f64,
}

impl PhysicalScales {
    /// Build the scale set from mass, speed of light and Planck constant.
    pub fn new(mass: f64, light_speed: f64, hbar: f64) -> Result<Self> {
        if !(mass > 0.0) || !mass.is_finite() {
            return Err(Error::Domain(format!("mass must be positive, got {mass}")));
        }
        if !(light_speed > 0.0) || !light_speed.is_finite() {
            return Err(Error::Domain(format!(
                "light speed must be positive, got {light_speed}"
            )));
        }
        if !(hbar > 0.0) || !hbar.is_finite() {
            return Err(Error::Domain(format!("hbar must be positive, got {hbar}")));
        }
        let compton_length = hbar / (mass * light_speed);
        let compton_time = compton_length / light_speed;
        Ok(Self {
            mass,
            light_speed,
            hbar,
            compton_length,
            compton_time,
        })
    }

    /// Natural units m = c = hbar = 1.
    pub fn natural() -> Self {
        Self::new(1.0, 1.0, 1.0).expect("natural units are valid")
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn light_speed(&self) -> f64 {
        self.light_speed
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Compton length hbar / (m c).
    pub fn compton_length(&self) -> f64 {
        self.compton_length
    }

    /// Compton time hbar / (m c^2).
    pub fn compton_time(&self) -> f64 {
        self.compton_time
    }

    /// Rest energy m c^2.
    pub fn rest_energy(&self) -> f64 {
        self.mass * self.light_speed * self.light_speed
    }
}
