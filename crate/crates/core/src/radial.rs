//! Radially symmetric 3D fields reduced to one dimension.
//!
//! The angular integration of the 3D Fourier transform leaves the spherical
//! Bessel kernel j0(kr) = sin(kr)/(kr); with the symmetric normalization
//!
//! ```text
//! f_k(k) = sqrt(2/pi) * integral_0^inf dr r^2 j0(kr) f(r)
//! ```
//!
//! the transform is its own inverse. Both the r and k integrals are done
//! with Gauss-Legendre nodes on [0, r_max] and [0, k_max]; fields must decay
//! by r_max and be spectrally negligible beyond k_max.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre_on;

/// sin(x)/x with the small-argument series.
pub fn spherical_j0(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

/// Quadrature grid for radial fields and their j0 spectra.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialGrid {
    r_max: f64,
    k_max: f64,
    r_nodes: Vec<f64>,
    r_weights: Vec<f64>,
    k_nodes: Vec<f64>,
    k_weights: Vec<f64>,
}

impl RadialGrid {
    pub fn new(r_max: f64, n_r: usize, k_max: f64, n_k: usize) -> Result<Self> {
        if !(r_max > 0.0) || !(k_max > 0.0) {
            return Err(Error::Domain(format!(
                "radial grid extents must be positive, got r_max = {r_max}, k_max = {k_max}"
            )));
        }
        if n_r < 16 || n_k < 16 {
            return Err(Error::Domain(format!(
                "radial grid needs at least 16 nodes per axis, got {n_r} x {n_k}"
            )));
        }
        let (r_nodes, r_weights) = gauss_legendre_on(0.0, r_max, n_r)?;
        let (k_nodes, k_weights) = gauss_legendre_on(0.0, k_max, n_k)?;
        Ok(Self {
            r_max,
            k_max,
            r_nodes,
            r_weights,
            k_nodes,
            k_weights,
        })
    }

    /// Grid sized for a Gaussian packet of width `sigma` (Compton units):
    /// the spectral cutoff keeps exp(-k_max^2 sigma^2 / 2) below 1e-16 and
    /// the box keeps sigma <= r_max / 6 with room for spreading.
    pub fn for_packet(sigma: f64, n: usize) -> Result<Self> {
        if !(sigma > 0.0) {
            return Err(Error::Domain(format!(
                "packet width must be positive, got {sigma}"
            )));
        }
        let r_max = 16.0 * sigma.max(1.0);
        let k_max = (80.0f64).sqrt() / sigma;
        Self::new(r_max, n, k_max, n)
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn k_max(&self) -> f64 {
        self.k_max
    }

    pub fn r_nodes(&self) -> &[f64] {
        &self.r_nodes
    }

    pub fn r_weights(&self) -> &[f64] {
        &self.r_weights
    }

    pub fn k_nodes(&self) -> &[f64] {
        &self.k_nodes
    }

    pub fn k_weights(&self) -> &[f64] {
        &self.k_weights
    }

    /// integral_0^r_max f(r) r^2 dr on the quadrature nodes.
    pub fn integrate_r(&self, values: &[f64]) -> f64 {
        self.r_nodes
            .iter()
            .zip(&self.r_weights)
            .zip(values)
            .map(|((&r, &w), &f)| w * r * r * f)
            .sum()
    }

    /// integral_0^k_max g(k) k^2 dk on the quadrature nodes.
    pub fn integrate_k(&self, values: &[f64]) -> f64 {
        self.k_nodes
            .iter()
            .zip(&self.k_weights)
            .zip(values)
            .map(|((&k, &w), &g)| w * k * k * g)
            .sum()
    }

    /// Forward j0 transform, r nodes to k nodes. Rows run in parallel; each
    /// row reduces in fixed order for bit reproducibility.
    pub fn to_k(&self, values: &[f64]) -> Vec<f64> {
        assert_eq!(values.len(), self.r_nodes.len(), "radial sample count");
        let norm = (2.0 / std::f64::consts::PI).sqrt();
        self.k_nodes
            .par_iter()
            .map(|&k| {
                let mut acc = 0.0;
                for ((&r, &w), &f) in self.r_nodes.iter().zip(&self.r_weights).zip(values) {
                    acc += w * r * r * spherical_j0(k * r) * f;
                }
                norm * acc
            })
            .collect()
    }

    /// Inverse j0 transform, k nodes to r nodes.
    pub fn to_r(&self, modes: &[f64]) -> Vec<f64> {
        assert_eq!(modes.len(), self.k_nodes.len(), "mode count");
        self.r_nodes
            .par_iter()
            .map(|&r| self.eval_r(modes, r))
            .collect()
    }

    /// Synthesize the field at an arbitrary radius from its j0 spectrum.
    pub fn eval_r(&self, modes: &[f64], r: f64) -> f64 {
        let norm = (2.0 / std::f64::consts::PI).sqrt();
        let mut acc = 0.0;
        for ((&k, &w), &g) in self.k_nodes.iter().zip(&self.k_weights).zip(modes) {
            acc += w * k * k * spherical_j0(k * r) * g;
        }
        norm * acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn gaussian_norm_reproduced() {
        // 4 pi integral of |psi|^2 r^2 dr = 1 for the normalized Gaussian.
        let sigma = 2.0;
        let grid = RadialGrid::new(12.0 * sigma, 128, 6.0 / sigma, 64).unwrap();
        let density: Vec<f64> = grid
            .r_nodes()
            .iter()
            .map(|&r| (PI.powf(1.5) * sigma.powi(3)).recip() * (-r * r / (sigma * sigma)).exp())
            .collect();
        let norm = 4.0 * PI * grid.integrate_r(&density);
        assert_relative_eq!(norm, 1.0, epsilon = 1e-8);
    }

    #[test]
    fn gaussian_transform_pair() {
        // j0 transform of exp(-r^2/(2 s^2)) is s^3 exp(-k^2 s^2/2).
        let s = 1.0;
        let grid = RadialGrid::for_packet(s, 192).unwrap();
        let f: Vec<f64> = grid
            .r_nodes()
            .iter()
            .map(|&r| (-r * r / (2.0 * s * s)).exp())
            .collect();
        let g = grid.to_k(&f);
        for (&k, &gk) in grid.k_nodes().iter().zip(&g) {
            let expect = s.powi(3) * (-k * k * s * s / 2.0).exp();
            assert_relative_eq!(gk, expect, epsilon = 1e-10);
        }
    }

    #[test]
    fn round_trip() {
        let s = 1.0;
        let grid = RadialGrid::for_packet(s, 256).unwrap();
        let f: Vec<f64> = grid
            .r_nodes()
            .iter()
            .map(|&r| (-r * r / (2.0 * s * s)).exp() * (1.0 + 0.3 * (r).cos()))
            .collect();
        let back = grid.to_r(&grid.to_k(&f));
        for (a, b) in f.iter().zip(&back) {
            assert_relative_eq!(a, b, epsilon = 1e-10);
        }
    }

    #[test]
    fn weights_positive() {
        let grid = RadialGrid::for_packet(1.0, 64).unwrap();
        assert!(grid.r_weights().iter().all(|&w| w > 0.0));
        assert!(grid.k_weights().iter().all(|&w| w > 0.0));
    }
}
