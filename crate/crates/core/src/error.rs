use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum RpcaError {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv error in {path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },

    #[error("non-numeric cell {value:?} at row {row}, column {column:?}")]
    NonNumeric {
        row: usize,
        column: String,
        value: String,
    },

    #[error("non-finite value at row {row}, column {column:?}")]
    NonFinite { row: usize, column: String },

    #[error("duplicate column name {0:?}")]
    DuplicateColumn(String),

    #[error("duplicate row id {0:?}")]
    DuplicateRowId(String),

    #[error("label column {0:?} not found")]
    LabelColumnNotFound(String),

    #[error("invalid label {value:?} at row {row}")]
    InvalidLabel { row: usize, value: String },

    #[error("ragged csv: row {row} has {found} fields, expected {expected}")]
    Ragged {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("column {0:?} has zero variance")]
    ZeroVariance(String),

    #[error("empty data: {0}")]
    Empty(&'static str),

    #[error("k = {k} must satisfy 1 <= k < n = {n}")]
    InvalidK { k: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("weight {value} at ({row}, {col}) is outside [0, 1]")]
    WeightOutOfRange { row: usize, col: usize, value: f64 },

    #[error("n = {n} exceeds the dense matrix cap of {cap}")]
    DenseCap { n: usize, cap: usize },

    #[error("variable {0:?} has zero Riemannian variance")]
    DegenerateVariable(String),

    #[error("matrix contains non-finite entries")]
    NonFiniteMatrix,

    #[error("eigenvalue {0} is negative beyond roundoff")]
    NegativeEigenvalue(f64),

    #[error("all eigenvalues are zero")]
    ZeroSpectrum,

    #[error("requested {requested} components but only {available} are available")]
    TooManyComponents { requested: usize, available: usize },

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, RpcaError>;

impl RpcaError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        RpcaError::Io {
            path: path.into(),
            source,
        }
    }
}
