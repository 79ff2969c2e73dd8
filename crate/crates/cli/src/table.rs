//! Result tables and their CSV form.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(u64),
    /// Quantity not computed for this run.
    Empty,
}

impl Cell {
    /// Scientific notation with 9 significant digits, e.g. `2.92000000e-17`.
    pub fn render(&self) -> String {
        match self {
            Cell::Float(x) => format!("{x:.8e}"),
            Cell::Int(n) => n.to_string(),
            Cell::Empty => String::new(),
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match *self {
            Cell::Float(x) => Some(x),
            Cell::Int(n) => Some(n as f64),
            Cell::Empty => None,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Empty, Cell::Float)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Table { header, rows: Vec::new() }
    }

    /// Index of `name` in the header.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| *h == name)
    }

    /// All values of column `name`; empty cells become NaN.
    pub fn values(&self, name: &str) -> Option<Vec<f64>> {
        let c = self.column(name)?;
        Some(self.rows.iter().map(|r| r[c].as_f64().unwrap_or(f64::NAN)).collect())
    }
}

/// Writes `table` as CSV with a header row and `\n` line endings.
pub fn write_csv<W: Write>(table: &Table, out: W) -> Result<(), CliError> {
    if table.rows.is_empty() {
        return Err(CliError::EmptyTable);
    }
    let width = table.header.len();
    if let Some(bad) = table.rows.iter().position(|r| r.len() != width) {
        return Err(CliError::RaggedTable { row: bad, width });
    }
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    let io = |e: csv::Error| CliError::Output(e.to_string());
    w.write_record(&table.header).map_err(io)?;
    for row in &table.rows {
        w.write_record(row.iter().map(Cell::render)).map_err(io)?;
    }
    w.flush().map_err(|e| CliError::Output(e.to_string()))
}

/// Renders `table` to a string.
pub fn to_csv_string(table: &Table) -> Result<String, CliError> {
    let mut buf = Vec::new();
    write_csv(table, &mut buf)?;
    Ok(String::from_utf8(buf).expect("CSV output is ASCII"))
}

pub fn write_csv_file(table: &Table, path: &Path) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io {
        path: path.to_path_buf(),
        message: e.to_string(),
    };
    let file = File::create(path).map_err(io)?;
    let mut out = BufWriter::new(file);
    write_csv(table, &mut out).map_err(|e| match e {
        CliError::Output(message) => CliError::Io {
            path: path.to_path_buf(),
            message,
        },
        other => other,
    })?;
    out.flush().map_err(io)
}
