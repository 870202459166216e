//! Dispersion-curve table: relativistic and nonrelativistic mode frequency
//! and the group velocity over a uniform dimensionless wavenumber axis.

use serde_json::json;

use relamp_core::{dispersion, nonrel_dispersion, PhysicalScales};

use crate::config::DispersionParams;
use crate::table::{ResultTable, RunOutput};

pub fn run(params: &DispersionParams, scales: &PhysicalScales) -> relamp_core::Result<RunOutput> {
    let natural = PhysicalScales::natural();
    let mut table = ResultTable::new(
        "dispersion",
        vec![
            "lambda_k [1]".to_string(),
            "omega_tau [1]".to_string(),
            "omega_nonrel_tau [1]".to_string(),
            "vg_over_c [1]".to_string(),
        ],
    );
    for i in 0..params.samples {
        let kappa = params.k_max * i as f64 / (params.samples - 1) as f64;
        let sample = dispersion(kappa, &natural)?;
        let nonrel = nonrel_dispersion(kappa, &natural)?;
        table.push_row(vec![kappa, sample.omega, nonrel, sample.group_velocity])?;
    }
    let summary = json!({
        "k_max": params.k_max,
        "samples": params.samples,
        // SI conversion factors for the chosen unit system: multiply the
        // dimensionless columns by these to recover physical values.
        "compton_length_m": scales.compton_length(),
        "compton_time_s": scales.compton_time(),
        "omega_scale_per_s": 1.0 / scales.compton_time(),
        "light_speed_m_per_s": scales.light_speed(),
    });
    Ok(RunOutput {
        tables: vec![table],
        summary,
    })
}
