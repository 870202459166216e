//! Conserved densities and fluxes of probability, energy and momentum at a
//! chosen truncation order, continuity-residual diagnostics, Lorentz boosts
//! of the probability 4-current, and the second-order-theory density kept as
//! a diagnostic contrast.
//!
//! Everything here works on 1D fields in Compton units (m = c = hbar = 1).
//!
//! Flux series: with a_n the square-root expansion coefficients and
//! D_j = Delta^j psi, G_j = grad Delta^j psi,
//!
//! ```text
//! j      = sum_n 2 a_n sum_{alpha=1}^{n} Im(conj(D_{alpha-1}) G_{n-alpha})
//! j_E^(n), sigma^(n): same alpha structure over the time-derivative and
//!                     gradient stacks, see below.
//! ```
//!
//! The energy-flux and stress sums are taken with the overall sign that
//! closes the continuity equations dH/dt + div j_E = 0 and
//! dpi/dt + div sigma = 0; the source derivation's printed overall sign on
//! those two final formulas is inconsistent with its own continuity
//! statements (verified numerically against exact evolution).

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::SpectralField;
use crate::series::coeff_a_table;

/// Densities and fluxes evaluated on a grid at truncation order `order`.
#[derive(Debug, Clone)]
pub struct CurrentBundle {
    pub order: u32,
    pub probability_density: Vec<f64>,
    pub probability_flux: Vec<f64>,
    pub energy_density: Vec<f64>,
    pub energy_flux: Vec<f64>,
    pub momentum_density: Vec<f64>,
    pub momentum_flux: Vec<f64>,
}

/// Exact symbol or N-term series for the square-root operator inside the
/// energy density.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OperatorMode {
    Exact,
    Series(u32),
}

fn guard_order(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::Domain("flux truncation order must be >= 1".into()))
    } else {
        Ok(())
    }
}

fn guard_band(field: &SpectralField) -> Result<()> {
    let limit = field.band_limit();
    if limit >= 1.0 {
        return Err(Error::Convergence(format!(
            "flux series requires band limit < 1, field has {limit}"
        )));
    }
    Ok(())
}

/// Position-space stacks Delta^j psi and grad Delta^j psi for j = 0..n-1,
/// all derived from the one cached spectrum.
fn stacks(field: &SpectralField, n: u32) -> (Vec<Vec<Complex64>>, Vec<Vec<Complex64>>) {
    let lap: Vec<Vec<Complex64>> = (0..n)
        .map(|j| field.laplacian_power(j).samples().to_vec())
        .collect();
    let grad: Vec<Vec<Complex64>> = (0..n)
        .map(|j| {
            field
                .map_symbol(|k| Complex64::new(0.0, k) * Complex64::new((-k * k).powi(j as i32), 0.0))
                .samples()
                .to_vec()
        })
        .collect();
    (lap, grad)
}

/// Probability flux density summed to order `n`.
///
/// Antisymmetric in (psi, conj psi): identically zero on real fields.
pub fn probability_flux(field: &SpectralField, n: u32) -> Result<Vec<f64>> {
    guard_order(n)?;
    guard_band(field)?;
    let a = coeff_a_table(n);
    let (lap, grad) = stacks(field, n);
    let m = field.grid().points();
    let mut flux = vec![0.0; m];
    for term in 1..=n as usize {
        let a_n = a[term - 1];
        for alpha in 1..=term {
            let d = &lap[alpha - 1];
            let g = &grad[term - alpha];
            for i in 0..m {
                flux[i] += 2.0 * a_n * (d[i].conj() * g[i]).im;
            }
        }
    }
    Ok(flux)
}

/// Energy density H = Re(conj(psi) A psi) with A the square-root operator.
pub fn energy_density(field: &SpectralField, mode: OperatorMode) -> Result<Vec<f64>> {
    let applied = match mode {
        OperatorMode::Exact => field.apply_sqrt_exact(),
        OperatorMode::Series(n) => {
            guard_order(n)?;
            field.apply_sqrt_series(n)?
        }
    };
    Ok(field
        .samples()
        .iter()
        .zip(applied.samples())
        .map(|(p, ap)| (p.conj() * ap).re)
        .collect())
}

/// Energy flux density summed to order `n`; `field_dot` is the
/// equation-of-motion time derivative of the field.
pub fn energy_flux(field: &SpectralField, field_dot: &SpectralField, n: u32) -> Result<Vec<f64>> {
    guard_order(n)?;
    guard_band(field)?;
    if field.grid() != field_dot.grid() {
        return Err(Error::Validation("grid mismatch in energy flux".into()));
    }
    let a = coeff_a_table(n);
    let (lap, grad) = stacks(field, n);
    let (lap_dot, grad_dot) = stacks(field_dot, n);
    let m = field.grid().points();
    let mut flux = vec![0.0; m];
    for term in 1..=n as usize {
        let a_n = a[term - 1];
        for alpha in 1..=term {
            let dd = &lap_dot[term - alpha];
            let gd = &grad_dot[term - alpha];
            let d = &lap[alpha - 1];
            let g = &grad[alpha - 1];
            for i in 0..m {
                flux[i] -= a_n * ((dd[i] * g[i].conj()).re - (gd[i] * d[i].conj()).re);
            }
        }
    }
    Ok(flux)
}

/// Momentum density pi = Im(conj(psi) grad psi); order-independent.
pub fn momentum_density(field: &SpectralField) -> Vec<f64> {
    let grad = field.gradient();
    field
        .samples()
        .iter()
        .zip(grad.samples())
        .map(|(p, g)| (p.conj() * g).im)
        .collect()
}

/// Momentum flux (stress) summed to order `n`.
pub fn momentum_flux(field: &SpectralField, n: u32) -> Result<Vec<f64>> {
    guard_order(n)?;
    guard_band(field)?;
    let a = coeff_a_table(n);
    let gradient = field.gradient();
    // Stacks of the *gradient* field: Delta^j grad psi and grad Delta^j grad psi.
    let (lap_g, grad_g) = stacks(&gradient, n);
    let (lap, grad) = stacks(field, n);
    let m = field.grid().points();
    let mut flux = vec![0.0; m];
    for term in 1..=n as usize {
        let a_n = a[term - 1];
        for alpha in 1..=term {
            let dg = &lap_g[term - alpha];
            let gg = &grad_g[term - alpha];
            let d = &lap[alpha - 1];
            let g = &grad[alpha - 1];
            for i in 0..m {
                flux[i] += a_n * ((dg[i] * g[i].conj()).re - (gg[i] * d[i].conj()).re);
            }
        }
    }
    Ok(flux)
}

/// All densities and fluxes of one field at order `n`, with the time
/// derivative supplied by the equation of motion.
pub fn bundle(field: &SpectralField, n: u32) -> Result<CurrentBundle> {
    let field_dot = field.time_derivative();
    Ok(CurrentBundle {
        order: n,
        probability_density: field.samples().iter().map(|z| z.norm_sqr()).collect(),
        probability_flux: probability_flux(field, n)?,
        energy_density: energy_density(field, OperatorMode::Series(n))?,
        energy_flux: energy_flux(field, &field_dot, n)?,
        momentum_density: momentum_density(field),
        momentum_flux: momentum_flux(field, n)?,
    })
}

fn divergence(field: &SpectralField, values: &[f64]) -> Vec<f64> {
    let grid = *field.grid();
    let complex: Vec<Complex64> = values.iter().map(|&v| Complex64::new(v, 0.0)).collect();
    SpectralField::from_samples(grid, complex)
        .expect("flux values are finite")
        .gradient()
        .samples()
        .iter()
        .map(|z| z.re)
        .collect()
}

fn l2(grid_spacing: f64, values: &[f64]) -> f64 {
    (values.iter().map(|&v| v * v).sum::<f64>() * grid_spacing).sqrt()
}

fn guard_triplet(
    before: &SpectralField,
    now: &SpectralField,
    after: &SpectralField,
    dt: f64,
) -> Result<()> {
    if before.grid() != now.grid() || now.grid() != after.grid() {
        return Err(Error::Validation(
            "continuity residual requires all snapshots on one grid".into(),
        ));
    }
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::Domain(format!("time spacing must be positive, got {dt}")));
    }
    Ok(())
}

/// L2 residual of the probability continuity equation
/// `d|psi|^2/dt + div j = 0` with a central time difference and the
/// order-`n` flux.
pub fn continuity_residual(
    before: &SpectralField,
    now: &SpectralField,
    after: &SpectralField,
    dt: f64,
    n: u32,
) -> Result<f64> {
    guard_triplet(before, now, after, dt)?;
    let div = divergence(now, &probability_flux(now, n)?);
    let res: Vec<f64> = (0..now.grid().points())
        .map(|i| {
            let rate = (after.samples()[i].norm_sqr() - before.samples()[i].norm_sqr()) / (2.0 * dt);
            rate + div[i]
        })
        .collect();
    Ok(l2(now.grid().spacing(), &res))
}

/// L2 residual of the energy continuity equation `dH/dt + div j_E = 0`.
/// The density uses the exact operator; the flux is truncated at order `n`.
pub fn energy_continuity_residual(
    before: &SpectralField,
    now: &SpectralField,
    after: &SpectralField,
    dt: f64,
    n: u32,
) -> Result<f64> {
    guard_triplet(before, now, after, dt)?;
    let h_before = energy_density(before, OperatorMode::Exact)?;
    let h_after = energy_density(after, OperatorMode::Exact)?;
    let div = divergence(now, &energy_flux(now, &now.time_derivative(), n)?);
    let res: Vec<f64> = (0..now.grid().points())
        .map(|i| (h_after[i] - h_before[i]) / (2.0 * dt) + div[i])
        .collect();
    Ok(l2(now.grid().spacing(), &res))
}

/// L2 residual of the momentum continuity equation
/// `dpi/dt + div sigma = 0` with the order-`n` stress.
pub fn momentum_continuity_residual(
    before: &SpectralField,
    now: &SpectralField,
    after: &SpectralField,
    dt: f64,
    n: u32,
) -> Result<f64> {
    guard_triplet(before, now, after, dt)?;
    let pi_before = momentum_density(before);
    let pi_after = momentum_density(after);
    let div = divergence(now, &momentum_flux(now, n)?);
    let res: Vec<f64> = (0..now.grid().points())
        .map(|i| (pi_after[i] - pi_before[i]) / (2.0 * dt) + div[i])
        .collect();
    Ok(l2(now.grid().spacing(), &res))
}

/// Probability 4-current (j, i c rho) evaluated in some frame.
#[derive(Debug, Clone, PartialEq)]
pub struct FourCurrent {
    pub density: f64,
    pub flux: [f64; 3],
    pub frame: String,
}

impl FourCurrent {
    pub fn new(density: f64, flux: [f64; 3], frame: impl Into<String>) -> Self {
        Self {
            density,
            flux,
            frame: frame.into(),
        }
    }

    /// Lorentz norm c^2 rho^2 - |j|^2, frame-invariant.
    pub fn lorentz_norm(&self, light_speed: f64) -> f64 {
        let j_sq: f64 = self.flux.iter().map(|&j| j * j).sum();
        light_speed * light_speed * self.density * self.density - j_sq
    }
}

/// Boost the 4-current along coordinate `axis` with velocity `beta` (in
/// units of c):
///
/// ```text
/// rho' = gamma (rho - beta j_a / c),   j_a' = gamma (j_a - beta c rho).
/// ```
pub fn boost_current(
    current: &FourCurrent,
    beta: f64,
    axis: usize,
    light_speed: f64,
) -> Result<FourCurrent> {
    if !(beta.abs() < 1.0) {
        return Err(Error::Domain(format!("beta must satisfy |beta| < 1, got {beta}")));
    }
    if axis >= 3 {
        return Err(Error::Domain(format!("boost axis must be 0, 1 or 2, got {axis}")));
    }
    let gamma = 1.0 / (1.0 - beta * beta).sqrt();
    let j_a = current.flux[axis];
    let mut flux = current.flux;
    flux[axis] = gamma * (j_a - beta * light_speed * current.density);
    Ok(FourCurrent {
        density: gamma * (current.density - beta * j_a / light_speed),
        flux,
        frame: format!("{}+boost({beta},axis{axis})", current.frame),
    })
}

/// Density of the second-order (Klein-Gordon) theory,
/// rho = i/2 (conj(psi) psi_t - psi conj(psi_t)) in Compton units.
/// Not positive definite; kept only as a diagnostic contrast.
pub fn kg_density(field: &SpectralField, field_dot: &SpectralField) -> Result<Vec<f64>> {
    if field.grid() != field_dot.grid() {
        return Err(Error::Validation("grid mismatch in Klein-Gordon density".into()));
    }
    Ok(field
        .samples()
        .iter()
        .zip(field_dot.samples())
        .map(|(p, d)| -(p.conj() * d).im)
        .collect())
}
