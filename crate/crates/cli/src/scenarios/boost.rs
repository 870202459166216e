//! Lorentz boosts of a probability 4-current: boosted components, the
//! frame-invariant norm in both frames, and the round-trip error.

use serde_json::json;

use relamp_core::{boost_current, FourCurrent, PhysicalScales};

use crate::config::BoostParams;
use crate::table::{ResultTable, RunOutput};

pub fn run(params: &BoostParams, scales: &PhysicalScales) -> relamp_core::Result<RunOutput> {
    let c = scales.light_speed();
    let lab = FourCurrent::new(params.density, params.flux, "lab");

    let mut table = ResultTable::new(
        "boost",
        vec![
            "beta [1]".to_string(),
            "density_boosted [1/L^3]".to_string(),
            "flux_axis_boosted [c/L^3]".to_string(),
            "lorentz_norm_lab [c^2/L^6]".to_string(),
            "lorentz_norm_boosted [c^2/L^6]".to_string(),
            "round_trip_density_error [1/L^3]".to_string(),
        ],
    );
    let mut max_invariance_violation = 0.0f64;
    for &beta in &params.betas {
        let boosted = boost_current(&lab, beta, params.axis, c)?;
        let back = boost_current(&boosted, -beta, params.axis, c)?;
        let norm_lab = lab.lorentz_norm(c);
        let norm_boosted = boosted.lorentz_norm(c);
        max_invariance_violation = max_invariance_violation.max((norm_lab - norm_boosted).abs());
        table.push_row(vec![
            beta,
            boosted.density,
            boosted.flux[params.axis],
            norm_lab,
            norm_boosted,
            (back.density - lab.density).abs(),
        ])?;
    }

    let summary = json!({
        "density": params.density,
        "flux": params.flux.to_vec(),
        "betas": params.betas,
        "axis": params.axis,
        "light_speed": c,
        "max_invariance_violation": max_invariance_violation,
    });
    Ok(RunOutput {
        tables: vec![table],
        summary,
    })
}
