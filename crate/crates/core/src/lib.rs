//! Numerical core for the relativistic probability-amplitude equation
//!
//! ```text
//! i hbar dpsi/dt = sqrt(m^2 c^4 - hbar^2 c^2 Delta) psi
//! ```
//!
//! in Compton units (lengths in hbar/mc, times in hbar/mc^2). The square-root
//! operator is applied spectrally — exactly through its symbol
//! sqrt(1 + k^2), or through the truncated power series in the Laplacian
//! whose validity requires band limits below the Compton wavenumber.
//!
//! Modules:
//! - [`scales`]: unit conversion between SI and Compton units.
//! - [`series`]: exact rational expansion coefficients of the square root.
//! - [`dispersion`]: relativistic dispersion and group velocity.
//! - [`grid`], [`field`]: periodic 1D grids and spectral fields with cached
//!   exact spectra (all derivative stacks derive from one FFT).
//! - [`currents`]: probability/energy/momentum densities, fluxes, continuity
//!   residuals, and Lorentz boosts of the 4-current.
//! - [`radial`], [`evolution`]: spherically symmetric packets, exact
//!   per-mode free evolution, quadrature oracles and propagator kernels.
//! - [`oscillator`]: relativistically corrected harmonic oscillator with
//!   dual-oracle perturbation checks and exact diagonalization.
//! - [`quadrature`]: Gauss-Legendre / Gauss-Hermite rules and adaptive
//!   integration.

pub mod currents;
pub mod dispersion;
pub mod error;
pub mod evolution;
pub mod field;
pub mod grid;
pub mod oscillator;
pub mod quadrature;
pub mod radial;
pub mod scales;
pub mod series;

pub use currents::{
    boost_current, bundle, continuity_residual, energy_continuity_residual, energy_density,
    energy_flux, kg_density, momentum_continuity_residual, momentum_density, momentum_flux,
    probability_flux, CurrentBundle, FourCurrent, OperatorMode,
};
pub use dispersion::{dispersion, nonrel_dispersion, nonrel_group_velocity, DispersionSample};
pub use error::{Error, Result};
pub use evolution::{
    evolve_gaussian_quadrature, evolve_mode, gaussian_initial, kernel_values,
    klein_gordon_residual, omega, propagate_radial, radial_profile, KModeState, KernelSample,
    PacketSnapshot,
};
pub use field::{band_limited, SpectralField};
pub use grid::Grid1D;
pub use oscillator::{
    cubic_expectation, diagonalize_quartic, hermite_function, level_energy_paper, level_gap_paper,
    paper_correction, quartic_expectation, report as oscillator_report, OscillatorConfig,
    OscillatorReport,
};
pub use radial::RadialGrid;
pub use scales::PhysicalScales;
pub use series::{
    coeff_a_table, coefficients, series_coeff_a, series_coeff_b, sqrt_symbol_exact,
    sqrt_symbol_partial, SeriesCoefficients,
};
