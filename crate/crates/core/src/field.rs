//! Complex field on a periodic 1D grid with a paired k-space representation,
//! and the square-root operator applied either through its exact Fourier
//! symbol sqrt(1 + k^2) or through the truncated Laplacian-power series.
//!
//! This module works in Compton units: lengths in units of the Compton
//! length, times in units of the Compton time, so the operator symbol is a
//! function of the dimensionless kappa = k alone.
//!
//! Transforms use the symmetric continuum normalization
//! `psi_k = dx / sqrt(2 pi) * sum_j psi(x_j) exp(-i k x_j)`, so Parseval reads
//! `sum |psi|^2 dx = sum |psi_k|^2 dk`.

use num_complex::Complex64;
use once_cell::sync::OnceCell;
use rustfft::FftPlanner;

use crate::error::{Error, Result};
use crate::grid::Grid1D;
use crate::series;

/// Spectral weight below this fraction of the total is ignored when
/// measuring the band limit.
pub const BAND_WEIGHT_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct SpectralField {
    grid: Grid1D,
    samples: Vec<Complex64>,
    spectrum: OnceCell<Vec<Complex64>>,
}

fn check_finite(data: &[Complex64], what: &str) -> Result<()> {
    for (i, z) in data.iter().enumerate() {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::Data(format!("non-finite {what} at index {i}: {z}")));
        }
    }
    Ok(())
}

impl SpectralField {
    /// Field from position-space samples.
    pub fn from_samples(grid: Grid1D, samples: Vec<Complex64>) -> Result<Self> {
        if samples.len() != grid.points() {
            return Err(Error::Validation(format!(
                "sample count {} does not match grid size {}",
                samples.len(),
                grid.points()
            )));
        }
        check_finite(&samples, "sample")?;
        Ok(Self {
            grid,
            samples,
            spectrum: OnceCell::new(),
        })
    }

    /// Field from its spectrum; the position samples are synthesized and the
    /// spectrum cache is pre-filled with the exact input array.
    pub fn from_spectrum(grid: Grid1D, spectrum: Vec<Complex64>) -> Result<Self> {
        if spectrum.len() != grid.points() {
            return Err(Error::Validation(format!(
                "mode count {} does not match grid size {}",
                spectrum.len(),
                grid.points()
            )));
        }
        check_finite(&spectrum, "mode")?;
        let mut samples = spectrum.clone();
        FftPlanner::new()
            .plan_fft_inverse(grid.points())
            .process(&mut samples);
        let scale = grid.mode_spacing() / (2.0 * std::f64::consts::PI).sqrt();
        for z in &mut samples {
            *z *= scale;
        }
        let cell = OnceCell::new();
        cell.set(spectrum).expect("fresh cell");
        Ok(Self {
            grid,
            samples,
            spectrum: cell,
        })
    }

    pub fn grid(&self) -> &Grid1D {
        self.grid_ref()
    }

    fn grid_ref(&self) -> &Grid1D {
        &self.grid
    }

    pub fn samples(&self) -> &[Complex64] {
        &self.samples
    }

    /// k-space representation, computed once and cached.
    pub fn spectrum(&self) -> &[Complex64] {
        self.spectrum.get_or_init(|| {
            let mut spec = self.samples.clone();
            FftPlanner::new()
                .plan_fft_forward(self.grid.points())
                .process(&mut spec);
            let scale = self.grid.spacing() / (2.0 * std::f64::consts::PI).sqrt();
            for z in &mut spec {
                *z *= scale;
            }
            spec
        })
    }

    /// Same field with the spectrum cache guaranteed filled.
    pub fn to_spectrum(self) -> Result<Self> {
        check_finite(&self.samples, "sample")?;
        self.spectrum();
        Ok(self)
    }

    /// New field whose spectrum is the cached spectrum multiplied mode-wise
    /// by `symbol(k)`. Derivative chains always start from the one cached
    /// spectrum so high Laplacian powers never amplify re-transform noise.
    pub fn map_symbol(&self, symbol: impl Fn(f64) -> Complex64) -> SpectralField {
        let spec = self.spectrum();
        let mapped: Vec<Complex64> = (0..self.grid.points())
            .map(|i| spec[i] * symbol(self.grid.wavenumber(i)))
            .collect();
        SpectralField::from_spectrum(self.grid, mapped).expect("mapped spectrum is finite")
    }

    /// Largest dimensionless |k| whose relative spectral weight exceeds
    /// [`BAND_WEIGHT_FLOOR`].
    pub fn band_limit(&self) -> f64 {
        let spec = self.spectrum();
        let total: f64 = spec.iter().map(|z| z.norm_sqr()).sum();
        if total == 0.0 {
            return 0.0;
        }
        let mut limit = 0.0f64;
        for (i, z) in spec.iter().enumerate() {
            if z.norm_sqr() > BAND_WEIGHT_FLOOR * total {
                limit = limit.max(self.grid.wavenumber(i).abs());
            }
        }
        limit
    }

    /// Square-root operator through its exact symbol sqrt(1 + k^2).
    pub fn apply_sqrt_exact(&self) -> SpectralField {
        self.map_symbol(|k| Complex64::new(series::sqrt_symbol_exact(k * k), 0.0))
    }

    /// Square-root operator through the N-term Laplacian-power series,
    /// applied spectrally as `1 - sum a_n (-k^2)^n`.
    ///
    /// Requires the field band limit to sit strictly below the Compton
    /// wavenumber; outside that region the series diverges.
    pub fn apply_sqrt_series(&self, n_terms: u32) -> Result<SpectralField> {
        if n_terms == 0 {
            return Err(Error::Domain("series order must be >= 1".into()));
        }
        let limit = self.band_limit();
        if limit >= 1.0 {
            return Err(Error::Convergence(format!(
                "series expansion of the square-root operator is only valid below the \
                 Compton wavenumber; field band limit is {limit}"
            )));
        }
        let table = series::coeff_a_table(n_terms);
        Ok(self.map_symbol(|k| {
            let kappa_sq = k * k;
            let mut sum = 1.0;
            let mut power = 1.0;
            for &a_n in &table {
                power *= -kappa_sq;
                sum -= a_n * power;
            }
            Complex64::new(sum, 0.0)
        }))
    }

    /// Laplacian power Delta^n, applied spectrally as (-k^2)^n; n = 0 is the
    /// identity.
    pub fn laplacian_power(&self, n: u32) -> SpectralField {
        if n == 0 {
            return self.clone();
        }
        self.map_symbol(|k| Complex64::new((-k * k).powi(n as i32), 0.0))
    }

    /// Spectral first derivative.
    pub fn gradient(&self) -> SpectralField {
        self.map_symbol(|k| Complex64::new(0.0, k))
    }

    /// Free evolution of the full amplitude by time `t` (Compton times):
    /// each mode picks up exp(-i sqrt(1 + k^2) t).
    pub fn evolve(&self, t: f64) -> SpectralField {
        self.map_symbol(|k| {
            let omega = series::sqrt_symbol_exact(k * k);
            Complex64::from_polar(1.0, -omega * t)
        })
    }

    /// Equation-of-motion time derivative -i sqrt(1 - Delta) psi (Compton
    /// units), used by the flux formulas.
    pub fn time_derivative(&self) -> SpectralField {
        self.map_symbol(|k| Complex64::new(0.0, -series::sqrt_symbol_exact(k * k)))
    }

    /// Position-space norm sum |psi|^2 dx, fixed summation order.
    pub fn norm_sq(&self) -> f64 {
        let dx = self.grid.spacing();
        self.samples.iter().map(|z| z.norm_sqr()).sum::<f64>() * dx
    }

    /// Spectral norm sum |psi_k|^2 dk, fixed summation order.
    pub fn spectral_norm_sq(&self) -> f64 {
        let dk = self.grid.mode_spacing();
        self.spectrum().iter().map(|z| z.norm_sqr()).sum::<f64>() * dk
    }

    /// Inner product <self, other> = sum conj(self) * other dx.
    pub fn inner(&self, other: &SpectralField) -> Result<Complex64> {
        if self.grid != other.grid {
            return Err(Error::Validation("grid mismatch in inner product".into()));
        }
        let dx = self.grid.spacing();
        Ok(self
            .samples
            .iter()
            .zip(&other.samples)
            .map(|(a, b)| a.conj() * b)
            .sum::<Complex64>()
            * dx)
    }
}

/// Seeded random field with exact spectral support on |k| <= kappa_max.
///
/// Modes inside the band get uniform complex amplitudes in the unit square;
/// everything outside is exactly zero, so high Laplacian powers never
/// amplify FFT roundoff from nominally-empty bins. Deterministic in `seed`.
pub fn band_limited(grid: Grid1D, kappa_max: f64, seed: u64) -> Result<SpectralField> {
    use rand::{Rng, SeedableRng};
    if !(kappa_max > 0.0) || !kappa_max.is_finite() {
        return Err(Error::Domain(format!(
            "band limit must be positive, got {kappa_max}"
        )));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let spec = (0..grid.points())
        .map(|i| {
            if grid.wavenumber(i).abs() <= kappa_max {
                Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    SpectralField::from_spectrum(grid, spec)
}
