//! Golden-file regression: the committed spreading and dispersion tables
//! must be reproduced within 1e-9 per value by every future build.

use relamp::config::{DispersionParams, ScenarioParams, SpreadParams};
use relamp::config::{ScenarioConfig, UnitSystem};
use relamp::run_scenario;

fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.lines();
    let header: Vec<String> = lines
        .next()
        .expect("fixture has a header")
        .split(',')
        .map(str::to_string)
        .collect();
    let rows = lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split(',')
                .map(|cell| cell.trim().parse::<f64>().expect("numeric cell"))
                .collect()
        })
        .collect();
    (header, rows)
}

fn compare_to_fixture(fixture: &str, config: &ScenarioConfig) {
    let (header, expected) = parse_csv(fixture);
    let output = run_scenario(config).expect("scenario runs");
    let table = &output.tables[0];
    assert_eq!(table.columns, header, "column layout drifted");
    assert_eq!(table.rows.len(), expected.len(), "row count drifted");
    for (i, (got, want)) in table.rows.iter().zip(&expected).enumerate() {
        for (j, (&g, &w)) in got.iter().zip(want).enumerate() {
            let tol = 1e-9 * w.abs().max(1.0);
            assert!(
                (g - w).abs() <= tol,
                "row {i} col {j}: got {g}, fixture {w}"
            );
        }
    }
}

#[test]
fn spread_curves_match_golden() {
    let config = ScenarioConfig {
        params: ScenarioParams::Spread(SpreadParams {
            sigma: 1.0,
            times: vec![0.0, 0.5, 1.3, 2.0],
            grid_points: 256,
            profile_points: 161,
        }),
        units: UnitSystem::Natural,
        seed: 0,
    };
    compare_to_fixture(include_str!("golden/spread_sigma1.csv"), &config);
}

#[test]
fn dispersion_table_matches_golden() {
    let config = ScenarioConfig {
        params: ScenarioParams::Dispersion(DispersionParams {
            k_max: 2.0,
            samples: 201,
        }),
        units: UnitSystem::Natural,
        seed: 0,
    };
    compare_to_fixture(include_str!("golden/dispersion.csv"), &config);
}
