//! Dispersion relation of the amplitude equation and its group velocity.
//!
//! omega_k = (sqrt(1 + (L k)^2) - 1) / tau_C with group velocity
//! v_g = c L k / sqrt(1 + (L k)^2), which is bounded by c. The
//! nonrelativistic form hbar k^2 / 2m has no such bound.

use crate::error::{Error, Result};
use crate::scales::PhysicalScales;

/// One point of the dispersion curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionSample {
    pub wavenumber: f64,
    pub omega: f64,
    pub group_velocity: f64,
}

/// Relativistic dispersion sample at wavenumber `k >= 0`.
pub fn dispersion(k: f64, scales: &PhysicalScales) -> Result<DispersionSample> {
    if !(k >= 0.0) || !k.is_finite() {
        return Err(Error::Domain(format!(
            "dispersion is isotropic; pass |k| >= 0, got {k}"
        )));
    }
    let kappa = scales.compton_length() * k;
    let kappa_sq = kappa * kappa;
    let root = (1.0 + kappa_sq).sqrt();
    // sqrt(1+x) - 1 written cancellation-free for small x.
    let omega = kappa_sq / (1.0 + root) / scales.compton_time();
    let group_velocity = scales.light_speed() * kappa / root;
    Ok(DispersionSample {
        wavenumber: k,
        omega,
        group_velocity,
    })
}

/// Nonrelativistic limit hbar k^2 / 2m.
pub fn nonrel_dispersion(k: f64, scales: &PhysicalScales) -> Result<f64> {
    if !(k >= 0.0) || !k.is_finite() {
        return Err(Error::Domain(format!(
            "dispersion is isotropic; pass |k| >= 0, got {k}"
        )));
    }
    Ok(scales.hbar() * k * k / (2.0 * scales.mass()))
}

/// Group velocity hbar k / m of the nonrelativistic dispersion; unbounded.
pub fn nonrel_group_velocity(k: f64, scales: &PhysicalScales) -> Result<f64> {
    if !(k >= 0.0) || !k.is_finite() {
        return Err(Error::Domain(format!(
            "dispersion is isotropic; pass |k| >= 0, got {k}"
        )));
    }
    Ok(scales.hbar() * k / scales.mass())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn rest_mode() {
        let s = PhysicalScales::natural();
        let d = dispersion(0.0, &s).unwrap();
        assert_eq!(d.omega, 0.0);
        assert_eq!(d.group_velocity, 0.0);
        assert_eq!(nonrel_dispersion(0.0, &s).unwrap(), 0.0);
    }

    #[test]
    fn unit_compton_wavenumber() {
        let s = PhysicalScales::natural();
        let d = dispersion(1.0, &s).unwrap();
        assert_relative_eq!(d.omega, std::f64::consts::SQRT_2 - 1.0, epsilon = 1e-15);
        assert_relative_eq!(
            d.group_velocity,
            1.0 / std::f64::consts::SQRT_2,
            epsilon = 1e-15
        );
        assert_relative_eq!(nonrel_dispersion(1.0, &s).unwrap(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn small_k_deficit() {
        let s = PhysicalScales::natural();
        let d = dispersion(0.1, &s).unwrap();
        // High-precision evaluation of sqrt(1.01) - 1.
        assert_relative_eq!(d.omega, 4.987_562_112_089_027e-3, max_relative = 1e-12);
        let nr = nonrel_dispersion(0.1, &s).unwrap();
        assert_relative_eq!(nr, 0.005, epsilon = 1e-17);
        // Relative deficit approx (L k)^2 / 4.
        let deficit = (nr - d.omega) / nr;
        assert_relative_eq!(deficit, 0.01 / 4.0, max_relative = 2e-2);
    }

    #[test]
    fn very_small_k_agreement() {
        let s = PhysicalScales::natural();
        let d = dispersion(0.01, &s).unwrap();
        let nr = nonrel_dispersion(0.01, &s).unwrap();
        assert_relative_eq!(d.omega, nr, max_relative = 2.5e-5);
    }

    #[test]
    fn negative_k_rejected() {
        let s = PhysicalScales::natural();
        assert!(dispersion(-1.0, &s).is_err());
        assert!(nonrel_dispersion(-1.0, &s).is_err());
    }
}
