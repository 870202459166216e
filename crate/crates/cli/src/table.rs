//! Plot-ready numeric tables and their serialization.
//!
//! CSV output is RFC-4180 (CRLF rows, header row carries units in brackets);
//! numbers are written with Rust's shortest round-trip formatting so goldens
//! are byte-stable across platforms.

use std::fs;
use std::path::{Path, PathBuf};

use relamp_core::{Error, Result};

/// Column-labelled numeric table.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultTable {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl ResultTable {
    pub fn new(name: impl Into<String>, columns: Vec<String>) -> Self {
        Self {
            name: name.into(),
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<f64>) -> Result<()> {
        if row.len() != self.columns.len() {
            return Err(Error::Data(format!(
                "table '{}': row has {} values for {} columns",
                self.name,
                row.len(),
                self.columns.len()
            )));
        }
        for (value, column) in row.iter().zip(&self.columns) {
            if !value.is_finite() {
                return Err(Error::Data(format!(
                    "table '{}': non-finite value in column '{column}'",
                    self.name
                )));
            }
        }
        self.rows.push(row);
        Ok(())
    }

    /// RFC-4180 CSV with a header row.
    pub fn to_csv(&self) -> Result<String> {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::CRLF)
            .from_writer(Vec::new());
        writer
            .write_record(&self.columns)
            .map_err(|e| Error::Data(format!("table '{}': {e}", self.name)))?;
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| format!("{v}")).collect();
            writer
                .write_record(&cells)
                .map_err(|e| Error::Data(format!("table '{}': {e}", self.name)))?;
        }
        let bytes = writer
            .into_inner()
            .map_err(|e| Error::Data(format!("table '{}': {e}", self.name)))?;
        String::from_utf8(bytes).map_err(|e| Error::Data(format!("table '{}': {e}", self.name)))
    }
}

/// Everything one scenario run produces.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub tables: Vec<ResultTable>,
    pub summary: serde_json::Value,
}

/// Write each table as `<name>.csv` and the summary as `summary.json`;
/// returns the paths written.
pub fn write_outputs(out_dir: &Path, output: &RunOutput) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(out_dir)
        .map_err(|e| Error::Data(format!("cannot create output directory {out_dir:?}: {e}")))?;
    let mut written = Vec::new();
    for table in &output.tables {
        let path = out_dir.join(format!("{}.csv", table.name));
        fs::write(&path, table.to_csv()?)
            .map_err(|e| Error::Data(format!("cannot write {path:?}: {e}")))?;
        written.push(path);
    }
    let path = out_dir.join("summary.json");
    let text = serde_json::to_string_pretty(&output.summary)
        .map_err(|e| Error::Data(format!("summary serialization failed: {e}")))?;
    fs::write(&path, text + "\n")
        .map_err(|e| Error::Data(format!("cannot write {path:?}: {e}")))?;
    written.push(path);
    Ok(written)
}
