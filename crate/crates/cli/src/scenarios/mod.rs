//! Named experiments, each mapping a validated configuration to tables plus
//! a JSON summary.

pub mod boost;
pub mod currents;
pub mod dispersion;
pub mod oscillator;
pub mod spread;

use crate::config::{ScenarioConfig, ScenarioParams};
use crate::table::RunOutput;

/// Run the configured scenario. Deterministic for a fixed config and seed.
pub fn run_scenario(config: &ScenarioConfig) -> relamp_core::Result<RunOutput> {
    let mut output = match &config.params {
        ScenarioParams::Spread(p) => spread::run(p)?,
        ScenarioParams::Dispersion(p) => dispersion::run(p, &config.units.scales())?,
        ScenarioParams::Currents(p) => currents::run(p, config.seed)?,
        ScenarioParams::Oscillator(p) => oscillator::run(p)?,
        ScenarioParams::Boost(p) => boost::run(p, &config.units.scales())?,
    };
    if let Some(map) = output.summary.as_object_mut() {
        map.insert("scenario".into(), config.params.name().into());
        map.insert("units".into(), config.units.name().into());
        map.insert("seed".into(), config.seed.into());
        map.insert("config_hash".into(), config.hash().into());
        map.insert("version".into(), env!("CARGO_PKG_VERSION").into());
    }
    Ok(output)
}
