use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::plot::{circle_svg, scatter_svg};
use crate::error::{Result, RpcaError};
use crate::riemann::RiemannianModel;
use crate::rpca::RpcaResult;

pub const COMPONENTS_FILE: &str = "components.csv";
pub const CIRCLE_FILE: &str = "circle.csv";
pub const EIGEN_FILE: &str = "eigen.csv";
pub const SUMMARY_FILE: &str = "summary.json";
pub const SCORES_PLOT_FILE: &str = "scores.svg";
pub const CIRCLE_PLOT_FILE: &str = "circle.svg";

/// Contents of `summary.json`.
#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct FitSummary {
    pub n: usize,
    pub p: usize,
    pub k: Option<usize>,
    pub mean_index: Option<usize>,
    pub inertia_plane_pct: f64,
}

/// Paths written by [`write_results`], in write order.
#[derive(Debug, Clone, PartialEq)]
pub struct OutputManifest {
    pub files: Vec<PathBuf>,
}

fn write_text(path: &Path, body: &str) -> Result<()> {
    let io = |e| RpcaError::io(path, e);
    let mut w = BufWriter::new(File::create(path).map_err(io)?);
    w.write_all(body.as_bytes()).map_err(io)?;
    w.flush().map_err(io)
}

fn component_header(first: &str, m: usize) -> String {
    let mut h = String::from(first);
    for s in 1..=m {
        h.push_str(&format!(",PC{s}"));
    }
    h.push('\n');
    h
}

/// Writes component scores, the correlation circle, the spectrum, a JSON
/// summary and two SVG plots into `out_dir` (created if missing).
pub fn write_results(
    result: &RpcaResult,
    model: Option<&RiemannianModel>,
    labels: Option<&[i64]>,
    out_dir: impl AsRef<Path>,
) -> Result<OutputManifest> {
    let out_dir = out_dir.as_ref();
    fs::create_dir_all(out_dir).map_err(|e| RpcaError::io(out_dir, e))?;
    let m = result.components();
    let mut files = Vec::new();

    let mut body = component_header("row_id", m);
    for (id, row) in result.row_ids.iter().zip(result.scores.rows()) {
        body.push_str(id);
        for v in row {
            body.push_str(&format!(",{v:?}"));
        }
        body.push('\n');
    }
    let path = out_dir.join(COMPONENTS_FILE);
    write_text(&path, &body)?;
    files.push(path);

    let mut body = component_header("variable", m);
    for (name, row) in result.col_names.iter().zip(result.circle.rows()) {
        body.push_str(name);
        for v in row {
            body.push_str(&format!(",{v:?}"));
        }
        body.push('\n');
    }
    let path = out_dir.join(CIRCLE_FILE);
    write_text(&path, &body)?;
    files.push(path);

    let mut body = String::from("component,eigenvalue,inertia,cumulative\n");
    let mut cumulative = 0.0;
    for (s, (value, frac)) in result
        .eigen
        .values
        .iter()
        .zip(result.inertia.iter())
        .enumerate()
    {
        cumulative += frac;
        body.push_str(&format!("{},{value:?},{frac:?},{cumulative:?}\n", s + 1));
    }
    let path = out_dir.join(EIGEN_FILE);
    write_text(&path, &body)?;
    files.push(path);

    let summary = FitSummary {
        n: result.scores.nrows(),
        p: result.col_names.len(),
        k: model.and_then(|md| md.k),
        mean_index: result.mean_index,
        inertia_plane_pct: result.plane_inertia_pct(),
    };
    let path = out_dir.join(SUMMARY_FILE);
    write_text(&path, &(serde_json::to_string_pretty(&summary)? + "\n"))?;
    files.push(path);

    let title = format!(
        "{} principal plane ({:.2}%)",
        result.method.as_str().to_uppercase(),
        summary.inertia_plane_pct
    );
    let path = out_dir.join(SCORES_PLOT_FILE);
    write_text(&path, &scatter_svg(&result.scores, labels, &title))?;
    files.push(path);

    let path = out_dir.join(CIRCLE_PLOT_FILE);
    write_text(&path, &circle_svg(&result.circle, &result.col_names))?;
    files.push(path);

    Ok(OutputManifest { files })
}
