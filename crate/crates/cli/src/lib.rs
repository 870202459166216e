//! Scenario runner and serialization boundary for the relativistic
//! amplitude toolkit: JSON configuration in, deterministic CSV tables and a
//! JSON summary out.

pub mod config;
pub mod scenarios;
pub mod table;

use std::path::Path;

pub use config::{validate_config, ScenarioConfig};
pub use scenarios::run_scenario;
pub use table::{write_outputs, ResultTable, RunOutput};

use relamp_core::Error;

/// Process exit code for a library error: 2 for anything the caller can fix
/// in the input, 3 for numeric non-convergence, 4 for an internal oracle
/// disagreement.
pub fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Validation(_) | Error::Domain(_) | Error::Data(_) => 2,
        Error::Convergence(_) => 3,
        Error::OracleDisagreement(_) => 4,
    }
}

/// Cap rayon's worker count from the RELAMP_THREADS environment variable.
/// Unset or empty keeps the machine default; a non-numeric value is an error.
pub fn configure_threads() -> Result<(), String> {
    match std::env::var("RELAMP_THREADS") {
        Err(_) => Ok(()),
        Ok(raw) if raw.trim().is_empty() => Ok(()),
        Ok(raw) => {
            let n: usize = raw
                .trim()
                .parse()
                .map_err(|_| format!("RELAMP_THREADS must be a positive integer, got '{raw}'"))?;
            if n == 0 {
                return Err("RELAMP_THREADS must be a positive integer, got '0'".to_string());
            }
            // Building the global pool twice is fine to ignore: the first
            // configuration wins, which only happens in-process in tests.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            Ok(())
        }
    }
}

/// Run a validated configuration and write its outputs under `out_dir`.
pub fn execute(config: &ScenarioConfig, out_dir: &Path) -> relamp_core::Result<Vec<std::path::PathBuf>> {
    let output = run_scenario(config)?;
    write_outputs(out_dir, &output)
}
