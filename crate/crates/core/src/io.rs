//! File formats.
//!
//! Set families are read and written as JSON objects
//! `{"m": 3, "n": 4, "sets": [[1,2,3],[1,2,4],[1,2,5],[1,3,4]]}`; `n` is
//! checked against the number of sets when present. Dataset tables are CSV
//! with one line per minimal type (columns in [`CSV_HEADER`]).

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::dataset::DatasetRow;
use crate::error::{Error, Result};
use crate::families::SetFamily;

/// Column names of the dataset CSV.
pub const CSV_HEADER: [&str; 6] = ["m", "n", "type", "d", "oracle_mult", "oracle_verified"];

fn io_error(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

pub fn parse_family(text: &str) -> Result<SetFamily> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn read_family(path: &Path) -> Result<SetFamily> {
    let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
    parse_family(&text)
}

pub fn write_family(path: &Path, f: &SetFamily) -> Result<()> {
    write_json(path, f)
}

/// Compact JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value).map_err(|e| Error::Internal(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<()> {
    fs::write(path, to_json(value)?).map_err(|e| io_error(path, e))
}

/// Writes the dataset table. Even-`m` rows contribute the single rectangle
/// line; `oracle_mult` is empty for rows the oracle did not visit.
pub fn write_dataset_csv<W: Write>(rows: &[DatasetRow], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    let csv_err = |e: csv::Error| Error::Internal(e.to_string());
    out.write_record(CSV_HEADER).map_err(csv_err)?;
    for row in rows {
        for entry in &row.minimal {
            let oracle_mult = row
                .oracle
                .as_ref()
                .map(|o| o.multiplicity(&entry.lambda).to_string())
                .unwrap_or_default();
            let verified = row
                .oracle
                .as_ref()
                .map(|o| o.verified.to_string())
                .unwrap_or_default();
            let lambda = entry
                .lambda
                .parts()
                .iter()
                .map(|p| p.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            out.write_record([
                row.m.to_string(),
                row.n.to_string(),
                lambda,
                entry.d.to_string(),
                oracle_mult,
                verified,
            ])
            .map_err(csv_err)?;
        }
    }
    out.flush().map_err(|e| Error::Internal(e.to_string()))
}

pub fn write_dataset_files(dir: &Path, rows: &[DatasetRow]) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    let csv_path = dir.join("minimal.csv");
    let file = fs::File::create(&csv_path).map_err(|e| io_error(&csv_path, e))?;
    write_dataset_csv(rows, file)?;
    write_json(&dir.join("minimal.json"), rows)
}
