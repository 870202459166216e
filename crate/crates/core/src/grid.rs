//! Periodic 1D grid with power-of-two sampling.

use crate::error::{Error, Result};

/// Uniform periodic grid on [0, L).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    length: f64,
    points: usize,
}

impl Grid1D {
    pub fn new(length: f64, points: usize) -> Result<Self> {
        if !(length > 0.0) || !length.is_finite() {
            return Err(Error::Domain(format!(
                "grid length must be positive, got {length}"
            )));
        }
        if points < 8 || !points.is_power_of_two() {
            return Err(Error::Domain(format!(
                "grid point count must be a power of two >= 8, got {points}"
            )));
        }
        Ok(Self { length, points })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn spacing(&self) -> f64 {
        self.length / self.points as f64
    }

    /// Nyquist wavenumber pi / dx.
    pub fn nyquist(&self) -> f64 {
        std::f64::consts::PI / self.spacing()
    }

    /// Mode spacing 2 pi / L.
    pub fn mode_spacing(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.length
    }

    /// Wavenumber of FFT bin `idx`: 2 pi j / L with j in [-M/2, M/2).
    pub fn wavenumber(&self, idx: usize) -> f64 {
        debug_assert!(idx < self.points);
        let half = self.points / 2;
        let j = if idx < half {
            idx as i64
        } else {
            idx as i64 - self.points as i64
        };
        j as f64 * self.mode_spacing()
    }

    pub fn wavenumbers(&self) -> Vec<f64> {
        (0..self.points).map(|i| self.wavenumber(i)).collect()
    }

    pub fn position(&self, idx: usize) -> f64 {
        idx as f64 * self.spacing()
    }

    pub fn positions(&self) -> Vec<f64> {
        (0..self.points).map(|i| self.position(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wavenumber_layout() {
        let g = Grid1D::new(16.0, 8).unwrap();
        let dk = g.mode_spacing();
        assert_eq!(g.wavenumber(0), 0.0);
        assert_eq!(g.wavenumber(1), dk);
        assert_eq!(g.wavenumber(4), -4.0 * dk);
        assert_eq!(g.wavenumber(7), -dk);
        assert!((g.nyquist() - 4.0 * dk).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(Grid1D::new(1.0, 6).is_err());
        assert!(Grid1D::new(1.0, 12).is_err());
        assert!(Grid1D::new(0.0, 16).is_err());
    }
}
