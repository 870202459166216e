//! Configuration ingestion: JSON parsing and full-pass validation.
//!
//! Validation collects every problem it finds — parse position, unknown
//! keys, out-of-range values — instead of stopping at the first.

use std::collections::BTreeSet;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use relamp_core::PhysicalScales;

/// Unit system for reporting; the numerics always run in Compton units.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSystem {
    Natural,
    /// SI preset bundling the electron mass, c and hbar.
    Electron,
}

impl UnitSystem {
    pub fn name(&self) -> &'static str {
        match self {
            UnitSystem::Natural => "natural",
            UnitSystem::Electron => "electron",
        }
    }

    pub fn scales(&self) -> PhysicalScales {
        match self {
            UnitSystem::Natural => PhysicalScales::natural(),
            UnitSystem::Electron => PhysicalScales::new(
                9.109_383_7015e-31, // kg
                2.997_924_58e8,     // m/s
                1.054_571_817e-34,  // J s
            )
            .expect("electron preset constants are positive"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpreadParams {
    pub sigma: f64,
    pub times: Vec<f64>,
    pub grid_points: usize,
    pub profile_points: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DispersionParams {
    pub k_max: f64,
    pub samples: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CurrentsParams {
    pub kappa: f64,
    pub grid_length: f64,
    pub grid_points: usize,
    pub orders: Vec<u32>,
    pub dt: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OscillatorParams {
    pub gamma: f64,
    pub levels: usize,
    pub basis_size: usize,
    pub quadrature_order: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BoostParams {
    pub density: f64,
    pub flux: [f64; 3],
    pub betas: Vec<f64>,
    pub axis: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ScenarioParams {
    Spread(SpreadParams),
    Dispersion(DispersionParams),
    Currents(CurrentsParams),
    Oscillator(OscillatorParams),
    Boost(BoostParams),
}

impl ScenarioParams {
    pub fn name(&self) -> &'static str {
        match self {
            ScenarioParams::Spread(_) => "spread",
            ScenarioParams::Dispersion(_) => "dispersion",
            ScenarioParams::Currents(_) => "currents-check",
            ScenarioParams::Oscillator(_) => "oscillator",
            ScenarioParams::Boost(_) => "boost",
        }
    }
}

/// Fully validated configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub params: ScenarioParams,
    pub units: UnitSystem,
    pub seed: u64,
}

impl ScenarioConfig {
    /// Normalized JSON form: defaults filled in, keys ordered. This is the
    /// hashing and echo representation.
    pub fn normalized(&self) -> Value {
        let mut map = Map::new();
        map.insert("scenario".into(), json!(self.params.name()));
        map.insert("units".into(), json!(self.units.name()));
        map.insert("seed".into(), json!(self.seed));
        match &self.params {
            ScenarioParams::Spread(p) => {
                map.insert("sigma".into(), json!(p.sigma));
                map.insert("times".into(), json!(p.times));
                map.insert("grid_points".into(), json!(p.grid_points));
                map.insert("profile_points".into(), json!(p.profile_points));
            }
            ScenarioParams::Dispersion(p) => {
                map.insert("k_max".into(), json!(p.k_max));
                map.insert("samples".into(), json!(p.samples));
            }
            ScenarioParams::Currents(p) => {
                map.insert("kappa".into(), json!(p.kappa));
                map.insert("grid_length".into(), json!(p.grid_length));
                map.insert("grid_points".into(), json!(p.grid_points));
                map.insert("orders".into(), json!(p.orders));
                map.insert("dt".into(), json!(p.dt));
            }
            ScenarioParams::Oscillator(p) => {
                map.insert("gamma".into(), json!(p.gamma));
                map.insert("levels".into(), json!(p.levels));
                map.insert("basis_size".into(), json!(p.basis_size));
                map.insert("quadrature_order".into(), json!(p.quadrature_order));
            }
            ScenarioParams::Boost(p) => {
                map.insert("density".into(), json!(p.density));
                map.insert("flux".into(), json!(p.flux.to_vec()));
                map.insert("betas".into(), json!(p.betas));
                map.insert("axis".into(), json!(p.axis));
            }
        }
        Value::Object(map)
    }

    /// SHA-256 of the normalized configuration, hex-encoded.
    pub fn hash(&self) -> String {
        let text = serde_json::to_string(&self.normalized()).expect("normalized config serializes");
        let digest = Sha256::digest(text.as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Key reader that records which keys were consumed and accumulates errors.
struct Reader<'a> {
    map: &'a Map<String, Value>,
    used: BTreeSet<String>,
    errors: Vec<String>,
}

impl<'a> Reader<'a> {
    fn new(map: &'a Map<String, Value>) -> Self {
        Self {
            map,
            used: BTreeSet::new(),
            errors: Vec::new(),
        }
    }

    fn get(&mut self, key: &str) -> Option<&'a Value> {
        self.used.insert(key.to_string());
        self.map.get(key)
    }

    fn number(&mut self, key: &str, value: &Value) -> Option<f64> {
        match value.as_f64() {
            Some(v) if v.is_finite() => Some(v),
            _ => {
                self.errors
                    .push(format!("key '{key}' must be a finite number, got {value}"));
                None
            }
        }
    }

    fn opt_f64(&mut self, key: &str, default: f64) -> f64 {
        match self.get(key) {
            None => default,
            Some(v) => {
                let v = v.clone();
                self.number(key, &v).unwrap_or(default)
            }
        }
    }

    fn require_f64(&mut self, key: &str) -> Option<f64> {
        match self.get(key) {
            None => {
                self.errors.push(format!("missing required key '{key}'"));
                None
            }
            Some(v) => {
                let v = v.clone();
                self.number(key, &v)
            }
        }
    }

    fn opt_usize(&mut self, key: &str, default: usize) -> usize {
        match self.get(key) {
            None => default,
            Some(v) => match v.as_u64() {
                Some(n) => n as usize,
                None => {
                    self.errors
                        .push(format!("key '{key}' must be a non-negative integer, got {v}"));
                    default
                }
            },
        }
    }

    fn opt_u64(&mut self, key: &str, default: u64) -> u64 {
        match self.get(key) {
            None => default,
            Some(v) => match v.as_u64() {
                Some(n) => n,
                None => {
                    self.errors
                        .push(format!("key '{key}' must be a non-negative integer, got {v}"));
                    default
                }
            },
        }
    }

    fn f64_array(&mut self, key: &str, value: &Value) -> Option<Vec<f64>> {
        let arr = match value.as_array() {
            Some(a) => a,
            None => {
                self.errors
                    .push(format!("key '{key}' must be an array of numbers, got {value}"));
                return None;
            }
        };
        let mut out = Vec::with_capacity(arr.len());
        for (i, item) in arr.iter().enumerate() {
            match item.as_f64() {
                Some(v) if v.is_finite() => out.push(v),
                _ => {
                    self.errors.push(format!(
                        "key '{key}' element {i} must be a finite number, got {item}"
                    ));
                    return None;
                }
            }
        }
        Some(out)
    }

    fn require_f64_array(&mut self, key: &str) -> Option<Vec<f64>> {
        match self.get(key) {
            None => {
                self.errors.push(format!("missing required key '{key}'"));
                None
            }
            Some(v) => {
                let v = v.clone();
                self.f64_array(key, &v)
            }
        }
    }

    fn opt_f64_array(&mut self, key: &str, default: Vec<f64>) -> Vec<f64> {
        match self.get(key) {
            None => default,
            Some(v) => {
                let v = v.clone();
                self.f64_array(key, &v).unwrap_or(default)
            }
        }
    }

    fn push(&mut self, message: impl Into<String>) {
        self.errors.push(message.into());
    }

    fn finish_unknown_keys(&mut self) {
        for key in self.map.keys() {
            if !self.used.contains(key) {
                self.errors.push(format!("unknown key '{key}'"));
            }
        }
    }
}

const SCENARIO_NAMES: &[&str] = &["spread", "dispersion", "currents-check", "oscillator", "boost"];

/// Parse and validate raw JSON text, collecting all errors.
pub fn validate_config(text: &str) -> Result<ScenarioConfig, Vec<String>> {
    let value: Value = match serde_json::from_str(text) {
        Ok(v) => v,
        Err(e) => {
            return Err(vec![format!(
                "JSON parse error at line {}, column {}: {e}",
                e.line(),
                e.column()
            )]);
        }
    };
    let map = match value.as_object() {
        Some(m) => m,
        None => {
            return Err(vec![format!(
                "configuration must be a JSON object with keys: scenario (one of {}), \
                 optional units/seed, and scenario parameters",
                SCENARIO_NAMES.join(" | ")
            )]);
        }
    };
    let mut reader = Reader::new(map);

    let scenario_name = match reader.get("scenario").and_then(|v| v.as_str()) {
        Some(s) => s.to_string(),
        None => {
            reader.push(format!(
                "missing or non-string key 'scenario' (one of {})",
                SCENARIO_NAMES.join(" | ")
            ));
            String::new()
        }
    };

    let units = match reader.get("units") {
        None => UnitSystem::Natural,
        Some(v) => match v.as_str() {
            Some("natural") => UnitSystem::Natural,
            Some("electron") => UnitSystem::Electron,
            _ => {
                reader.push(format!("key 'units' must be 'natural' or 'electron', got {v}"));
                UnitSystem::Natural
            }
        },
    };
    let seed = reader.opt_u64("seed", 0);

    let params = match scenario_name.as_str() {
        "spread" => Some(read_spread(&mut reader)),
        "dispersion" => Some(read_dispersion(&mut reader)),
        "currents-check" => Some(read_currents(&mut reader)),
        "oscillator" => Some(read_oscillator(&mut reader)),
        "boost" => Some(read_boost(&mut reader)),
        "" => None,
        other => {
            reader.push(format!(
                "unknown scenario '{other}' (expected one of {})",
                SCENARIO_NAMES.join(" | ")
            ));
            None
        }
    };

    if params.is_some() {
        reader.finish_unknown_keys();
    }
    if !reader.errors.is_empty() {
        return Err(reader.errors);
    }
    Ok(ScenarioConfig {
        params: params.expect("errors are empty so the scenario parsed"),
        units,
        seed,
    })
}

fn read_spread(r: &mut Reader) -> ScenarioParams {
    let sigma = r.require_f64("sigma").unwrap_or(1.0);
    if sigma <= 0.0 {
        r.push(format!("key 'sigma' must be > 0, got {sigma}"));
    }
    let times = r.opt_f64_array("times", vec![0.0, 0.5, 1.3, 2.0]);
    if times.is_empty() {
        r.push("key 'times' must contain at least one time".to_string());
    }
    for &t in &times {
        if t < 0.0 {
            r.push(format!("key 'times' entries must be >= 0, got {t}"));
        }
    }
    let grid_points = r.opt_usize("grid_points", 256);
    if grid_points < 16 {
        r.push(format!("key 'grid_points' must be >= 16, got {grid_points}"));
    }
    let profile_points = r.opt_usize("profile_points", 161);
    if profile_points < 2 {
        r.push(format!("key 'profile_points' must be >= 2, got {profile_points}"));
    }
    ScenarioParams::Spread(SpreadParams {
        sigma,
        times,
        grid_points,
        profile_points,
    })
}

fn read_dispersion(r: &mut Reader) -> ScenarioParams {
    let k_max = r.opt_f64("k_max", 2.0);
    if k_max <= 0.0 {
        r.push(format!("key 'k_max' must be > 0, got {k_max}"));
    }
    let samples = r.opt_usize("samples", 201);
    if samples < 2 {
        r.push(format!("key 'samples' must be >= 2, got {samples}"));
    }
    ScenarioParams::Dispersion(DispersionParams { k_max, samples })
}

fn read_currents(r: &mut Reader) -> ScenarioParams {
    let kappa = r.opt_f64("kappa", 0.3);
    if !(kappa > 0.0 && kappa < 1.0) {
        r.push(format!(
            "key 'kappa' must satisfy 0 < kappa < 1 (series band limit), got {kappa}"
        ));
    }
    let grid_length = r.opt_f64("grid_length", 128.0);
    if grid_length <= 0.0 {
        r.push(format!("key 'grid_length' must be > 0, got {grid_length}"));
    }
    let grid_points = r.opt_usize("grid_points", 256);
    if grid_points < 8 || !grid_points.is_power_of_two() {
        r.push(format!(
            "key 'grid_points' must be a power of two >= 8, got {grid_points}"
        ));
    }
    let orders_f = r.opt_f64_array("orders", vec![1.0, 2.0, 3.0]);
    let mut orders = Vec::with_capacity(orders_f.len());
    for &o in &orders_f {
        if o < 1.0 || o.fract() != 0.0 || o > 64.0 {
            r.push(format!("key 'orders' entries must be integers in 1..=64, got {o}"));
        } else {
            orders.push(o as u32);
        }
    }
    if orders.is_empty() {
        r.push("key 'orders' must contain at least one order".to_string());
    }
    let dt = r.opt_f64("dt", 1e-3);
    if dt <= 0.0 {
        r.push(format!("key 'dt' must be > 0, got {dt}"));
    }
    ScenarioParams::Currents(CurrentsParams {
        kappa,
        grid_length,
        grid_points,
        orders,
        dt,
    })
}

fn read_oscillator(r: &mut Reader) -> ScenarioParams {
    let gamma = r.require_f64("gamma").unwrap_or(0.0);
    if gamma < 0.0 {
        r.push(format!("key 'gamma' must be >= 0, got {gamma}"));
    }
    let levels = r.opt_usize("levels", 6);
    if levels < 1 {
        r.push(format!("key 'levels' must be >= 1, got {levels}"));
    }
    let basis_size = r.opt_usize("basis_size", levels + 26);
    if basis_size < levels + 8 {
        r.push(format!(
            "key 'basis_size' must be >= levels + 8 = {}, got {basis_size}",
            levels + 8
        ));
    }
    let quadrature_order = r.opt_usize("quadrature_order", 128);
    if quadrature_order < 2 * levels + 8 {
        r.push(format!(
            "key 'quadrature_order' must be >= 2*levels + 8 = {}, got {quadrature_order}",
            2 * levels + 8
        ));
    }
    ScenarioParams::Oscillator(OscillatorParams {
        gamma,
        levels,
        basis_size,
        quadrature_order,
    })
}

fn read_boost(r: &mut Reader) -> ScenarioParams {
    let density = r.require_f64("density").unwrap_or(0.0);
    let flux_vec = r.opt_f64_array("flux", vec![0.0, 0.0, 0.0]);
    let mut flux = [0.0; 3];
    if flux_vec.len() == 3 {
        flux.copy_from_slice(&flux_vec);
    } else {
        r.push(format!(
            "key 'flux' must have exactly 3 components, got {}",
            flux_vec.len()
        ));
    }
    let betas = r.require_f64_array("betas").unwrap_or_default();
    if betas.is_empty() {
        r.push("key 'betas' must contain at least one velocity".to_string());
    }
    for &beta in &betas {
        if !(beta.abs() < 1.0) {
            r.push(format!("key 'betas': \u{3b2} must satisfy |\u{3b2}|<1, got {beta}"));
        }
    }
    let axis = r.opt_usize("axis", 0);
    if axis > 2 {
        r.push(format!("key 'axis' must be 0, 1 or 2, got {axis}"));
    }
    ScenarioParams::Boost(BoostParams {
        density,
        flux,
        betas,
        axis,
    })
}
