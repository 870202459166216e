//! Closed-form free evolution of the amplitude.
//!
//! In k-space every mode is a pure rotation of the real pair
//! (chi'_k, chi''_k) with angle omega_k t, where
//! omega_k = sqrt(1 + k^2) - 1 in Compton units. Radial (3D, spherically
//! symmetric) packets are propagated by the j0 transform, the per-mode
//! rotation, and the inverse transform; there is no time stepping anywhere.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quadrature::integrate_adaptive;
use crate::radial::{spherical_j0, RadialGrid};

/// Dimensionless dispersion sqrt(1 + k^2) - 1, cancellation-free.
pub fn omega(k: f64) -> f64 {
    let k_sq = k * k;
    k_sq / (1.0 + (1.0 + k_sq).sqrt())
}

/// Real spectral pair (chi'_k, chi''_k) of one k-mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KModeState {
    pub wavenumber: f64,
    pub re: f64,
    pub im: f64,
}

/// Rotate a mode by omega_k t:
/// chi'(t) = chi'(0) cos + chi''(0) sin, chi''(t) = -chi'(0) sin + chi''(0) cos.
pub fn evolve_mode(state: KModeState, t: f64) -> KModeState {
    let angle = omega(state.wavenumber) * t;
    let (s, c) = angle.sin_cos();
    KModeState {
        wavenumber: state.wavenumber,
        re: c * state.re + s * state.im,
        im: -s * state.re + c * state.im,
    }
}

/// Real and imaginary parts of a radial packet at one instant.
#[derive(Debug, Clone)]
pub struct PacketSnapshot {
    pub time: f64,
    pub grid: Arc<RadialGrid>,
    pub chi_re: Vec<f64>,
    pub chi_im: Vec<f64>,
}

impl PacketSnapshot {
    /// Total probability (1/2) integral (chi'^2 + chi''^2) d^3x.
    pub fn norm(&self) -> f64 {
        let sq: Vec<f64> = self
            .chi_re
            .iter()
            .zip(&self.chi_im)
            .map(|(&a, &b)| a * a + b * b)
            .collect();
        2.0 * std::f64::consts::PI * self.grid.integrate_r(&sq)
    }

    /// Probability density |psi|^2 = (chi'^2 + chi''^2)/2 at node `i`.
    pub fn density(&self, i: usize) -> f64 {
        0.5 * (self.chi_re[i] * self.chi_re[i] + self.chi_im[i] * self.chi_im[i])
    }

    /// Packet-normalized density pi^{3/2} sigma^3 |psi|^2.
    pub fn scaled_density(&self, sigma: f64, i: usize) -> f64 {
        std::f64::consts::PI.powf(1.5) * sigma.powi(3) * self.density(i)
    }
}

/// Gaussian packet with zero initial phase:
/// chi'(r,0) = sqrt(2) pi^{-3/4} sigma^{-3/2} exp(-r^2/(2 sigma^2)), chi'' = 0.
pub fn gaussian_initial(sigma: f64, grid: &Arc<RadialGrid>) -> Result<PacketSnapshot> {
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(Error::Domain(format!(
            "packet width must be positive, got {sigma}"
        )));
    }
    if sigma > grid.r_max() / 6.0 {
        return Err(Error::Validation(format!(
            "packet width {sigma} too large for grid extent {} (need sigma <= r_max/6)",
            grid.r_max()
        )));
    }
    let amp = std::f64::consts::SQRT_2 / (std::f64::consts::PI.powf(0.75) * sigma.powf(1.5));
    let chi_re = grid
        .r_nodes()
        .iter()
        .map(|&r| amp * (-r * r / (2.0 * sigma * sigma)).exp())
        .collect();
    let chi_im = vec![0.0; grid.r_nodes().len()];
    Ok(PacketSnapshot {
        time: 0.0,
        grid: Arc::clone(grid),
        chi_re,
        chi_im,
    })
}

const NORM_TOLERANCE: f64 = 1e-6;

/// Propagate a normalized radial snapshot by `t` Compton times.
pub fn propagate_radial(initial: &PacketSnapshot, t: f64) -> Result<PacketSnapshot> {
    let norm = initial.norm();
    if (norm - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::Validation(format!(
            "initial snapshot norm {norm} deviates from 1 by more than {NORM_TOLERANCE}"
        )));
    }
    let grid = &initial.grid;
    let re_k = grid.to_k(&initial.chi_re);
    let im_k = grid.to_k(&initial.chi_im);
    let mut re_rot = Vec::with_capacity(re_k.len());
    let mut im_rot = Vec::with_capacity(im_k.len());
    for ((&k, &re), &im) in grid.k_nodes().iter().zip(&re_k).zip(&im_k) {
        let out = evolve_mode(KModeState { wavenumber: k, re, im }, t);
        re_rot.push(out.re);
        im_rot.push(out.im);
    }
    Ok(PacketSnapshot {
        time: initial.time + t,
        grid: Arc::clone(grid),
        chi_re: grid.to_r(&re_rot),
        chi_im: grid.to_r(&im_rot),
    })
}

/// Propagate and synthesize (chi', chi'') on arbitrary radii `r_out`.
pub fn radial_profile(
    initial: &PacketSnapshot,
    t: f64,
    r_out: &[f64],
) -> Result<Vec<(f64, f64)>> {
    let norm = initial.norm();
    if (norm - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::Validation(format!(
            "initial snapshot norm {norm} deviates from 1 by more than {NORM_TOLERANCE}"
        )));
    }
    let grid = &initial.grid;
    let re_k = grid.to_k(&initial.chi_re);
    let im_k = grid.to_k(&initial.chi_im);
    let mut re_rot = Vec::with_capacity(re_k.len());
    let mut im_rot = Vec::with_capacity(im_k.len());
    for ((&k, &re), &im) in grid.k_nodes().iter().zip(&re_k).zip(&im_k) {
        let out = evolve_mode(KModeState { wavenumber: k, re, im }, t);
        re_rot.push(out.re);
        im_rot.push(out.im);
    }
    Ok(r_out
        .iter()
        .map(|&r| (grid.eval_r(&re_rot, r), grid.eval_r(&im_rot, r)))
        .collect())
}

/// Direct quadrature of the closed-form Gaussian-packet solution:
///
/// ```text
/// chi'(r,t)  =  P integral_0^inf dk k^2 cos(omega_k t) j0(kr) exp(-k^2 s^2/2)
/// chi''(r,t) = -P integral_0^inf dk k^2 sin(omega_k t) j0(kr) exp(-k^2 s^2/2)
/// ```
///
/// with P = sqrt(2) pi^{-3/4} sqrt(2/pi) s^{3/2}. Independent of the
/// transform-based propagator; used as its oracle.
pub fn evolve_gaussian_quadrature(sigma: f64, t: f64, r: f64) -> Result<(f64, f64)> {
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(Error::Domain(format!(
            "packet width must be positive, got {sigma}"
        )));
    }
    let prefactor = std::f64::consts::SQRT_2 / std::f64::consts::PI.powf(0.75)
        * (2.0 / std::f64::consts::PI).sqrt()
        * sigma.powf(1.5);
    let k_cut = (80.0f64).sqrt() / sigma;
    let damped = |k: f64| k * k * spherical_j0(k * r) * (-k * k * sigma * sigma / 2.0).exp();
    let re = integrate_adaptive(&|k| damped(k) * (omega(k) * t).cos(), 0.0, k_cut, 1e-11)?;
    let im = integrate_adaptive(&|k| damped(k) * (omega(k) * t).sin(), 0.0, k_cut, 1e-11)?;
    Ok((prefactor * re, -prefactor * im))
}

/// Regulated propagator kernel samples.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSample {
    pub separation: f64,
    pub time: f64,
    pub regulator: f64,
    pub j_c: f64,
    pub j_s: f64,
}

/// Cosine and sine propagator kernels with a mandatory Gaussian regulator:
///
/// ```text
/// J_C(r,t;eps) = (1/2 pi^2) integral_0^inf dk k^2 cos(omega_k t) j0(kr) exp(-eps k^2)
/// ```
///
/// and likewise J_S with sin. The bare kernels are distributions; the
/// regulator keeps them pointwise finite.
pub fn kernel_values(r: f64, t: f64, eps: f64) -> Result<KernelSample> {
    if !(eps > 0.0) || !eps.is_finite() {
        return Err(Error::Domain(format!(
            "kernel regulator must be positive, got {eps}"
        )));
    }
    let k_cut = (40.0 / eps).sqrt();
    let norm = 1.0 / (2.0 * std::f64::consts::PI * std::f64::consts::PI);
    let damped = |k: f64| k * k * spherical_j0(k * r) * (-eps * k * k).exp();
    let j_c = integrate_adaptive(&|k| damped(k) * (omega(k) * t).cos(), 0.0, k_cut, 1e-11)?;
    let j_s = integrate_adaptive(&|k| damped(k) * (omega(k) * t).sin(), 0.0, k_cut, 1e-11)?;
    Ok(KernelSample {
        separation: r,
        time: t,
        regulator: eps,
        j_c: norm * j_c,
        j_s: norm * j_s,
    })
}

/// Residual of the second-order equation
/// `chi''_tt + (sqrt(1 - Delta) - 1)^2 chi' = 0` (Compton units) evaluated
/// with a central second difference in time and the exact spectral operator
/// in space. Returns the L2 norm over the radial measure.
pub fn klein_gordon_residual(
    before: &PacketSnapshot,
    now: &PacketSnapshot,
    after: &PacketSnapshot,
) -> Result<f64> {
    if before.grid != now.grid || now.grid != after.grid {
        return Err(Error::Validation(
            "Klein-Gordon residual requires snapshots on one grid".into(),
        ));
    }
    let dt_minus = now.time - before.time;
    let dt_plus = after.time - now.time;
    if dt_plus <= 0.0 || (dt_plus - dt_minus).abs() > 1e-9 * dt_plus.abs() {
        return Err(Error::Validation(format!(
            "snapshots must be equally spaced in time, got spacings {dt_minus} and {dt_plus}"
        )));
    }
    let grid = &now.grid;
    let spatial_k: Vec<f64> = grid
        .k_nodes()
        .iter()
        .zip(grid.to_k(&now.chi_re))
        .map(|(&k, c)| {
            let w = omega(k);
            w * w * c
        })
        .collect();
    let spatial = grid.to_r(&spatial_k);
    let dt_sq = dt_plus * dt_plus;
    let residual_sq: Vec<f64> = (0..grid.r_nodes().len())
        .map(|i| {
            let second = (after.chi_re[i] - 2.0 * now.chi_re[i] + before.chi_re[i]) / dt_sq;
            let res = second + spatial[i];
            res * res
        })
        .collect();
    Ok((4.0 * std::f64::consts::PI * grid.integrate_r(&residual_sq)).sqrt())
}

/// L2 norm of chi' over the radial measure, the reference scale for the
/// Klein-Gordon residual.
pub fn radial_l2(snapshot: &PacketSnapshot) -> f64 {
    let sq: Vec<f64> = snapshot.chi_re.iter().map(|&a| a * a).collect();
    (4.0 * std::f64::consts::PI * snapshot.grid.integrate_r(&sq)).sqrt()
}
