//! Column-oriented numeric tables and their CSV / JSON serialisations.
//!
//! Every number is written in scientific notation with 17 significant
//! digits, so a table survives a write / parse / write cycle byte for byte.
//! Missing values (failed sweep points) are `NaN` in CSV and `null` in JSON.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

/// Column names of every force table.
pub const FORCE_COLUMNS: [&str; 7] = [
    "L_nm",
    "L_omega_p_over_c",
    "F_local_Pa",
    "F_nonlocal_Pa",
    "delta_F_over_F",
    "err_local",
    "err_nonlocal",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("row {row} has {got} values, expected {expected}")]
    RaggedRow {
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("empty CSV input (no header)")]
    MissingHeader,
    #[error("line {line}: cannot parse {value:?} as a number")]
    BadNumber { line: usize, value: String },
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

fn number(v: f64) -> String {
    format!("{v:.16e}")
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<f64>) -> Result<(), TableError> {
        if row.len() != self.columns.len() {
            return Err(TableError::RaggedRow {
                row: self.rows.len(),
                got: row.len(),
                expected: self.columns.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.columns.iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| r[j]).collect())
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|v| number(*v)).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut out = String::from("{");
        for (j, name) in self.columns.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            let _ = write!(out, "\n  {}: [", serde_json::Value::from(name.as_str()));
            for (i, row) in self.rows.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                let v = row[j];
                if v.is_finite() {
                    out.push_str(&number(v));
                } else {
                    out.push_str("null");
                }
            }
            out.push(']');
        }
        out.push_str("\n}\n");
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    pub fn parse_csv(text: &str) -> Result<Self, TableError> {
        let mut lines = text.lines();
        let header = lines.next().ok_or(TableError::MissingHeader)?;
        let mut table = Table::new(header.split(','));
        for (i, line) in lines.enumerate() {
            if line.is_empty() {
                continue;
            }
            let row = line
                .split(',')
                .map(|cell| {
                    cell.trim()
                        .parse::<f64>()
                        .map_err(|_| TableError::BadNumber {
                            line: i + 2,
                            value: cell.to_string(),
                        })
                })
                .collect::<Result<Vec<f64>, _>>()?;
            table.push(row)?;
        }
        Ok(table)
    }
}

/// Writes `table` to `path` in the requested format.
pub fn emit_table(table: &Table, format: Format, path: &Path) -> Result<(), TableError> {
    std::fs::write(path, table.render(format)).map_err(|source| TableError::Io {
        path: path.display().to_string(),
        source,
    })
}
