//! Data tables: CSV ingestion, column standardization, the synthetic
//! five-cluster benchmark, and persistence of fit results.

mod benchmark;
mod output;
mod plot;

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use ndarray::{Array2, Axis};

use crate::error::{Result, RpcaError};

pub use benchmark::{generate_benchmark, BENCHMARK_COLUMNS, BENCHMARK_DEFAULT_N};
pub use output::{write_results, FitSummary, OutputManifest};
pub use plot::{circle_svg, scatter_svg};

/// Name of the optional leading column that carries row identifiers.
pub const ROW_ID_COLUMN: &str = "row_id";

/// An `n x p` numeric table. Rows are observations, columns are variables.
#[derive(Debug, Clone, PartialEq)]
pub struct DataMatrix {
    values: Array2<f64>,
    row_ids: Vec<String>,
    col_names: Vec<String>,
}

impl DataMatrix {
    /// Builds a matrix, checking shape, finiteness and label uniqueness.
    pub fn new(values: Array2<f64>, row_ids: Vec<String>, col_names: Vec<String>) -> Result<Self> {
        let (n, p) = values.dim();
        if n == 0 {
            return Err(RpcaError::Empty("no rows"));
        }
        if p == 0 {
            return Err(RpcaError::Empty("no columns"));
        }
        if row_ids.len() != n || col_names.len() != p {
            return Err(RpcaError::InvalidParam(format!(
                "label counts ({} rows, {} cols) do not match a {n}x{p} matrix",
                row_ids.len(),
                col_names.len()
            )));
        }
        if let Some(((row, col), _)) = values.indexed_iter().find(|(_, v)| !v.is_finite()) {
            return Err(RpcaError::NonFinite {
                row,
                column: col_names[col].clone(),
            });
        }
        let mut seen = HashSet::with_capacity(p);
        for name in &col_names {
            if !seen.insert(name.as_str()) {
                return Err(RpcaError::DuplicateColumn(name.clone()));
            }
        }
        let mut seen = HashSet::with_capacity(n);
        for id in &row_ids {
            if !seen.insert(id.as_str()) {
                return Err(RpcaError::DuplicateRowId(id.clone()));
            }
        }
        Ok(Self {
            values,
            row_ids,
            col_names,
        })
    }

    /// Wraps a matrix with synthesized labels `0..n` and `V1..Vp`.
    pub fn from_array(values: Array2<f64>) -> Result<Self> {
        let (n, p) = values.dim();
        let row_ids = (0..n).map(|i| i.to_string()).collect();
        let col_names = (1..=p).map(|j| format!("V{j}")).collect();
        Self::new(values, row_ids, col_names)
    }

    pub fn values(&self) -> &Array2<f64> {
        &self.values
    }

    pub fn row_ids(&self) -> &[String] {
        &self.row_ids
    }

    pub fn col_names(&self) -> &[String] {
        &self.col_names
    }

    pub fn nrows(&self) -> usize {
        self.values.nrows()
    }

    pub fn ncols(&self) -> usize {
        self.values.ncols()
    }

    /// Returns a copy with `f` applied to the values; labels are kept.
    pub fn map_values(&self, f: impl FnOnce(&Array2<f64>) -> Array2<f64>) -> Result<Self> {
        Self::new(
            f(&self.values),
            self.row_ids.clone(),
            self.col_names.clone(),
        )
    }
}

/// A data table with optional integer cluster labels, one per row.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset {
    pub data: DataMatrix,
    pub labels: Option<Vec<i64>>,
}

impl LabeledDataset {
    pub fn new(data: DataMatrix, labels: Option<Vec<i64>>) -> Result<Self> {
        if let Some(l) = &labels {
            if l.len() != data.nrows() {
                return Err(RpcaError::InvalidParam(format!(
                    "{} labels for {} rows",
                    l.len(),
                    data.nrows()
                )));
            }
        }
        Ok(Self { data, labels })
    }
}

fn parse_label(row: usize, cell: &str) -> Result<i64> {
    let cell = cell.trim();
    if let Ok(v) = cell.parse::<i64>() {
        return Ok(v);
    }
    match cell.parse::<f64>() {
        Ok(v) if v.is_finite() && v.fract() == 0.0 => Ok(v as i64),
        _ => Err(RpcaError::InvalidLabel {
            row,
            value: cell.to_string(),
        }),
    }
}

/// Reads a comma-separated table.
///
/// With a header, a leading column named `row_id` supplies row identifiers;
/// otherwise they are `0..n`. Without a header, columns are named `V1..Vp`.
/// Reported row numbers are 1-based data rows (the header is not counted).
pub fn load_matrix(
    path: impl AsRef<Path>,
    has_header: bool,
    label_column: Option<&str>,
) -> Result<LabeledDataset> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|e| RpcaError::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(has_header)
        .flexible(true)
        .from_reader(file);
    let csv_err = |source| RpcaError::Csv {
        path: path.to_path_buf(),
        source,
    };

    let mut records = Vec::new();
    for rec in reader.records() {
        records.push(rec.map_err(csv_err)?);
    }
    let width = if has_header {
        reader.headers().map_err(csv_err)?.len()
    } else {
        records.first().map_or(0, |r| r.len())
    };
    let header: Vec<String> = if has_header {
        reader
            .headers()
            .map_err(csv_err)?
            .iter()
            .map(|h| h.trim().to_string())
            .collect()
    } else {
        (1..=width).map(|j| format!("V{j}")).collect()
    };

    let mut seen = HashSet::new();
    for h in &header {
        if !seen.insert(h.as_str()) {
            return Err(RpcaError::DuplicateColumn(h.clone()));
        }
    }

    let label_idx = match label_column {
        Some(name) => Some(
            header
                .iter()
                .position(|h| h == name)
                .ok_or_else(|| RpcaError::LabelColumnNotFound(name.to_string()))?,
        ),
        None => None,
    };
    let id_idx = if has_header {
        header.iter().position(|h| h == ROW_ID_COLUMN)
    } else {
        None
    };
    let value_cols: Vec<usize> = (0..width)
        .filter(|&j| Some(j) != label_idx && Some(j) != id_idx)
        .collect();

    let n = records.len();
    let p = value_cols.len();
    let mut values = Array2::<f64>::zeros((n, p));
    let mut labels = label_idx.map(|_| Vec::with_capacity(n));
    let mut row_ids = Vec::with_capacity(n);

    for (i, rec) in records.iter().enumerate() {
        let row = i + 1;
        if rec.len() != width {
            return Err(RpcaError::Ragged {
                row,
                found: rec.len(),
                expected: width,
            });
        }
        for (out_j, &j) in value_cols.iter().enumerate() {
            let cell = rec[j].trim();
            let v: f64 = cell.parse().map_err(|_| RpcaError::NonNumeric {
                row,
                column: header[j].clone(),
                value: cell.to_string(),
            })?;
            if !v.is_finite() {
                return Err(RpcaError::NonFinite {
                    row,
                    column: header[j].clone(),
                });
            }
            values[[i, out_j]] = v;
        }
        if let (Some(j), Some(labels)) = (label_idx, labels.as_mut()) {
            labels.push(parse_label(row, &rec[j])?);
        }
        row_ids.push(match id_idx {
            Some(j) => rec[j].trim().to_string(),
            None => i.to_string(),
        });
    }

    let col_names = value_cols.iter().map(|&j| header[j].clone()).collect();
    let data = DataMatrix::new(values, row_ids, col_names)?;
    LabeledDataset::new(data, labels)
}

/// Writes a dataset as CSV: `row_id`, the value columns, then the label
/// column when labels are present. Values use the shortest round-trip
/// decimal representation.
pub fn write_matrix(
    dataset: &LabeledDataset,
    label_column: &str,
    path: impl AsRef<Path>,
) -> Result<()> {
    write_matrix_inner(dataset, label_column, path.as_ref(), true)
}

/// Same as [`write_matrix`] but without the `row_id` column.
pub fn write_matrix_plain(
    dataset: &LabeledDataset,
    label_column: &str,
    path: impl AsRef<Path>,
) -> Result<()> {
    write_matrix_inner(dataset, label_column, path.as_ref(), false)
}

fn write_matrix_inner(
    dataset: &LabeledDataset,
    label_column: &str,
    path: &Path,
    with_ids: bool,
) -> Result<()> {
    let file = File::create(path).map_err(|e| RpcaError::io(path, e))?;
    let mut w = BufWriter::new(file);
    let data = &dataset.data;
    let io = |e| RpcaError::io(path, e);

    let mut header: Vec<&str> = Vec::new();
    if with_ids {
        header.push(ROW_ID_COLUMN);
    }
    header.extend(data.col_names().iter().map(String::as_str));
    if dataset.labels.is_some() {
        header.push(label_column);
    }
    writeln!(w, "{}", header.join(",")).map_err(io)?;

    for (i, row) in data.values().axis_iter(Axis(0)).enumerate() {
        let mut fields: Vec<String> = Vec::with_capacity(row.len() + 2);
        if with_ids {
            fields.push(data.row_ids()[i].clone());
        }
        fields.extend(row.iter().map(|v| format!("{v:?}")));
        if let Some(labels) = &dataset.labels {
            fields.push(labels[i].to_string());
        }
        writeln!(w, "{}", fields.join(",")).map_err(io)?;
    }
    w.flush().map_err(io)
}

/// Centers every column to mean zero and scales it to unit standard
/// deviation (denominator `n`).
pub fn standardize(x: &DataMatrix) -> Result<DataMatrix> {
    let n = x.nrows() as f64;
    let mut out = x.values().clone();
    for (j, mut col) in out.axis_iter_mut(Axis(1)).enumerate() {
        let mean = col.sum() / n;
        let var = col.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / n;
        let sd = var.sqrt();
        // A column whose spread is pure roundoff relative to its magnitude
        // is treated as constant.
        let scale = col.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        if !(sd > 1e-14 * scale.max(f64::MIN_POSITIVE)) {
            return Err(RpcaError::ZeroVariance(x.col_names()[j].clone()));
        }
        col.mapv_inplace(|v| (v - mean) / sd);
    }
    DataMatrix::new(out, x.row_ids().to_vec(), x.col_names().to_vec())
}
