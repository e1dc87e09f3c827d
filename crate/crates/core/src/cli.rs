//! Command-line front end.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::dataio::{
    self, generate_benchmark, load_matrix, standardize, write_results, LabeledDataset,
};
use crate::error::{Result, RpcaError};
use crate::knngraph::{write_coordinate_text, write_dense_coordinate_text, GraphParams, Metric};
use crate::rpca::{classical_pca, fit_rpca, Centering, FitOptions, RpcaFit, RpcaResult};

/// Neighbor count used when neither `--k` nor `--clusters` is given.
pub const DEFAULT_K: usize = 15;
/// Label column picked up automatically when present.
pub const DEFAULT_LABEL_COLUMN: &str = "cluster";

#[derive(Debug, Parser)]
#[command(
    name = "rpca",
    version,
    about = "Riemannian PCA over UMAP-style local metrics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the synthetic five-cluster benchmark as CSV.
    Generate(GenerateArgs),
    /// Fit R-PCA and write results.
    Fit(FitArgs),
    /// Fit R-PCA and classical PCA on the same table and compare them.
    Compare(FitArgs),
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// PRNG seed (required so every file is reproducible).
    #[arg(long)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = dataio::BENCHMARK_DEFAULT_N)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct FitArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Output directory.
    #[arg(long, default_value = "rpca_out")]
    pub out: PathBuf,
    /// Number of nearest neighbors.
    #[arg(long)]
    pub k: Option<usize>,
    /// Expected cluster count c; sets k = floor(n / c) when --k is absent.
    #[arg(long)]
    pub clusters: Option<usize>,
    #[arg(long, default_value_t = crate::rpca::DEFAULT_COMPONENTS)]
    pub components: usize,
    /// Accepted for symmetry with `generate`; fitting uses no randomness.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Fit on the raw columns instead of standardized ones.
    #[arg(long)]
    pub no_standardize: bool,
    /// Also run classical PCA (always on for `compare`).
    #[arg(long)]
    pub baseline: bool,
    /// Force every rho coefficient to 1, bypassing the graph.
    #[arg(long)]
    pub rho_one: bool,
    /// Center classical PCA at the Euclidean medoid instead of the mean.
    #[arg(long)]
    pub center_medoid: bool,
    /// Column holding cluster labels (default: "cluster" when present).
    #[arg(long)]
    pub label_column: Option<String>,
    #[arg(long, default_value = "euclidean")]
    pub metric: String,
    /// Also dump A, B, P and D as coordinate text files.
    #[arg(long)]
    pub dump_debug: bool,
}

/// Resolves k: explicit `--k`, else `floor(n / clusters)`, else [`DEFAULT_K`].
pub fn resolve_k(k: Option<usize>, clusters: Option<usize>, n: usize) -> Result<usize> {
    let k = match (k, clusters) {
        (Some(k), c) => {
            if c.is_some() {
                log::warn!("both --k and --clusters given; using --k");
            }
            k
        }
        (None, Some(0)) => {
            return Err(RpcaError::InvalidParam(
                "--clusters must be positive".into(),
            ))
        }
        (None, Some(c)) => n / c,
        (None, None) => DEFAULT_K,
    };
    if k == 0 || k >= n {
        return Err(RpcaError::InvalidK { k, n });
    }
    Ok(k)
}

fn load_input(args: &FitArgs) -> Result<LabeledDataset> {
    match &args.label_column {
        Some(name) => load_matrix(&args.input, true, Some(name)),
        None => match load_matrix(&args.input, true, Some(DEFAULT_LABEL_COLUMN)) {
            Err(RpcaError::LabelColumnNotFound(_)) => load_matrix(&args.input, true, None),
            other => other,
        },
    }
}

/// Summary line: `method=<rpca|pca> k=<k> plane_inertia_pct=<xx.xx>`.
pub fn summary_line(result: &RpcaResult, k: Option<usize>) -> String {
    format!(
        "method={} k={} plane_inertia_pct={:.2}",
        result.method.as_str(),
        k.map_or_else(|| "-".to_string(), |k| k.to_string()),
        result.plane_inertia_pct()
    )
}

struct Prepared {
    dataset: LabeledDataset,
    k: usize,
    params: GraphParams,
}

fn prepare(args: &FitArgs) -> Result<Prepared> {
    let mut dataset = load_input(args)?;
    if !args.no_standardize {
        dataset.data = standardize(&dataset.data)?;
    }
    let k = resolve_k(args.k, args.clusters, dataset.data.nrows())?;
    let mut params = GraphParams::new(k);
    params.metric = args.metric.parse::<Metric>()?;
    Ok(Prepared { dataset, k, params })
}

fn run_rpca(prep: &Prepared, args: &FitArgs, out_dir: &Path) -> Result<RpcaFit> {
    let fit = fit_rpca(
        &prep.dataset.data,
        &prep.params,
        args.components,
        FitOptions {
            rho_one: args.rho_one,
        },
    )?;
    write_results(
        &fit.result,
        Some(&fit.model),
        prep.dataset.labels.as_deref(),
        out_dir,
    )?;
    if args.dump_debug {
        if let Some(graph) = &fit.graph {
            write_coordinate_text(graph.weights.triplets(), out_dir.join("A.coo"))?;
        }
        if let Some(b) = &fit.similarity {
            write_coordinate_text(b.as_sparse().triplets(), out_dir.join("B.coo"))?;
        }
        write_dense_coordinate_text(fit.model.rho.as_array(), out_dir.join("P.coo"))?;
        write_dense_coordinate_text(&fit.model.distances, out_dir.join("D.coo"))?;
    }
    Ok(fit)
}

fn run_pca(prep: &Prepared, args: &FitArgs, out_dir: &Path) -> Result<RpcaResult> {
    let centering = if args.center_medoid {
        Centering::Medoid
    } else {
        Centering::Mean
    };
    let result = classical_pca(&prep.dataset.data, args.components, centering)?;
    write_results(&result, None, prep.dataset.labels.as_deref(), out_dir)?;
    Ok(result)
}

fn format_values(result: &RpcaResult) -> String {
    result
        .eigen
        .values
        .iter()
        .map(|v| format!("{v:.4}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Executes a parsed command, writing human-readable output to `out`.
pub fn run(cli: &Cli, out: &mut impl Write) -> Result<()> {
    let io = |e| RpcaError::io("<stdout>", e);
    match &cli.command {
        Command::Generate(args) => {
            let ds = generate_benchmark(args.seed, args.n)?;
            dataio::write_matrix_plain(&ds, DEFAULT_LABEL_COLUMN, &args.out)?;
            writeln!(
                out,
                "wrote {} rows x {} columns to {}",
                ds.data.nrows(),
                ds.data.ncols() + 1,
                args.out.display()
            )
            .map_err(io)?;
        }
        Command::Fit(args) => {
            let prep = prepare(args)?;
            let fit = run_rpca(&prep, args, &args.out)?;
            writeln!(out, "{}", summary_line(&fit.result, Some(prep.k))).map_err(io)?;
            if args.baseline {
                let pca = run_pca(&prep, args, &args.out.join("pca"))?;
                writeln!(out, "{}", summary_line(&pca, None)).map_err(io)?;
            }
        }
        Command::Compare(args) => {
            let prep = prepare(args)?;
            let fit = run_rpca(&prep, args, &args.out.join("rpca"))?;
            let pca = run_pca(&prep, args, &args.out.join("pca"))?;
            writeln!(out, "{}", summary_line(&fit.result, Some(prep.k))).map_err(io)?;
            writeln!(out, "{}", summary_line(&pca, None)).map_err(io)?;
            writeln!(
                out,
                "{:<6} {:>17}  eigenvalues",
                "method", "plane_inertia_pct"
            )
            .map_err(io)?;
            for r in [&fit.result, &pca] {
                writeln!(
                    out,
                    "{:<6} {:>17.2}  {}",
                    r.method.as_str(),
                    r.plane_inertia_pct(),
                    format_values(r)
                )
                .map_err(io)?;
            }
        }
    }
    Ok(())
}
