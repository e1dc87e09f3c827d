//! The R-PCA pipeline: graph, local geometry, Riemannian moments, then a
//! correlation-matrix eigendecomposition with component scores, the
//! correlation circle and explained inertia. A classical correlation PCA
//! sharing the same result type serves as the baseline.

mod classical;
mod eigen;

use ndarray::{s, Array1, Array2, Axis};

use crate::dataio::DataMatrix;
use crate::error::{Result, RpcaError};
use crate::knngraph::{build_graph, symmetrize, GraphParams, NeighborGraph, SimilarityMatrix};
use crate::riemann::{
    rho_coefficients, weighted_deviations, RhoMatrix, RiemannianMean, RiemannianModel,
};

pub use classical::{classical_pca, euclidean_medoid, Centering};
pub use eigen::{eigen_from_factor, eigen_sym_desc, EigenSystem};

/// Eigenvalues below this are treated as roundoff and clamped to zero.
pub const NEGATIVE_EIGEN_TOL: f64 = 1e-10;

/// Default number of reported components (the principal plane).
pub const DEFAULT_COMPONENTS: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Rpca,
    Pca,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Rpca => "rpca",
            Method::Pca => "pca",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RpcaResult {
    pub method: Method,
    /// `n x m` component scores.
    pub scores: Array2<f64>,
    /// `p x m` variable/component correlations.
    pub circle: Array2<f64>,
    /// Explained-inertia fraction per eigenvalue (length `p`, sums to 1).
    pub inertia: Array1<f64>,
    pub eigen: EigenSystem,
    /// Row used as the center: the Riemannian mean, or the medoid for a
    /// medoid-centered baseline. `None` for mean-centered PCA.
    pub mean_index: Option<usize>,
    pub row_ids: Vec<String>,
    pub col_names: Vec<String>,
}

impl RpcaResult {
    pub fn components(&self) -> usize {
        self.scores.ncols()
    }

    /// Percentage of inertia carried by the first two components.
    pub fn plane_inertia_pct(&self) -> f64 {
        self.inertia.iter().take(2).sum::<f64>() * 100.0
    }
}

/// Eigenvalues with roundoff negatives clamped to zero.
fn clamped_values(values: &Array1<f64>) -> Result<Array1<f64>> {
    if let Some(&bad) = values.iter().find(|&&v| v < -NEGATIVE_EIGEN_TOL) {
        return Err(RpcaError::NegativeEigenvalue(bad));
    }
    Ok(values.mapv(|v| v.max(0.0)))
}

/// `lambda_s / sum_t lambda_t` over the clamped spectrum.
pub fn explained_inertia(values: &Array1<f64>) -> Result<Array1<f64>> {
    let clamped = clamped_values(values)?;
    let total = clamped.sum();
    if !(total > 0.0) {
        return Err(RpcaError::ZeroSpectrum);
    }
    Ok(clamped / total)
}

/// `circle[j, s] = sqrt(lambda_s) * V[j, s]` for the first `m` components.
pub fn correlation_circle(eigen: &EigenSystem, m: usize) -> Result<Array2<f64>> {
    check_components(eigen, m)?;
    let values = clamped_values(&eigen.values)?;
    let mut circle = eigen.vectors.slice(s![.., ..m]).to_owned();
    for (mut col, &l) in circle.axis_iter_mut(Axis(1)).zip(values.iter()) {
        let scale = l.sqrt();
        col.mapv_inplace(|v| (v * scale).clamp(-1.0, 1.0));
    }
    Ok(circle)
}

fn check_components(eigen: &EigenSystem, m: usize) -> Result<()> {
    if m == 0 || m > eigen.n_vectors() {
        return Err(RpcaError::TooManyComponents {
            requested: m,
            available: eigen.n_vectors(),
        });
    }
    Ok(())
}

/// `C[i, j] = rho_{i, mean} (x_ij - g_j) / sqrt(S_jj)`, so that `C^T C / n`
/// is the Riemannian correlation matrix.
pub fn standardized_deviations(
    x: &DataMatrix,
    mean: &RiemannianMean,
    covariance: &Array2<f64>,
) -> Result<Array2<f64>> {
    let mut c = weighted_deviations(x, mean);
    for (j, mut col) in c.axis_iter_mut(Axis(1)).enumerate() {
        let v = covariance[[j, j]];
        if !(v > 0.0) {
            return Err(RpcaError::DegenerateVariable(x.col_names()[j].clone()));
        }
        let sd = v.sqrt();
        col.mapv_inplace(|e| e / sd);
    }
    Ok(c)
}

/// Component scores `C V[:, ..m]`.
pub fn rpca_scores(
    x: &DataMatrix,
    mean: &RiemannianMean,
    covariance: &Array2<f64>,
    eigen: &EigenSystem,
    m: usize,
) -> Result<Array2<f64>> {
    check_components(eigen, m)?;
    let c = standardized_deviations(x, mean, covariance)?;
    Ok(c.dot(&eigen.vectors.slice(s![.., ..m])))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct FitOptions {
    /// Replace `P` by the all-ones matrix (no graph shrinkage).
    pub rho_one: bool,
}

/// Output of a full R-PCA run.
#[derive(Debug, Clone)]
pub struct RpcaFit {
    pub result: RpcaResult,
    pub model: RiemannianModel,
    /// Absent when the graph was bypassed via [`FitOptions::rho_one`].
    pub graph: Option<NeighborGraph>,
    pub similarity: Option<SimilarityMatrix>,
}

/// Eigen-decomposes the correlation of `model`, choosing the Gram route when
/// there are more variables than rows.
fn decompose(x: &DataMatrix, model: &RiemannianModel) -> Result<EigenSystem> {
    if x.ncols() > x.nrows() {
        let c = standardized_deviations(x, &model.mean, &model.covariance)?;
        eigen_from_factor(&c)
    } else {
        eigen_sym_desc(&model.correlation)
    }
}

/// Finishes the pipeline from a prepared geometry.
pub fn fit_from_model(
    x: &DataMatrix,
    model: RiemannianModel,
    m: usize,
) -> Result<(RpcaResult, RiemannianModel)> {
    let eigen = decompose(x, &model)?;
    let scores = rpca_scores(x, &model.mean, &model.covariance, &eigen, m)?;
    let circle = correlation_circle(&eigen, m)?;
    let inertia = explained_inertia(&eigen.values)?;
    let result = RpcaResult {
        method: Method::Rpca,
        scores,
        circle,
        inertia,
        eigen,
        mean_index: Some(model.mean.index),
        row_ids: x.row_ids().to_vec(),
        col_names: x.col_names().to_vec(),
    };
    Ok((result, model))
}

/// Runs the whole pipeline: k-NN graph, similarity `B`, `P = 1 - B`, local
/// distances, Riemannian mean, covariance, correlation, eigenpairs, scores
/// and correlation circle.
pub fn fit_rpca(
    x: &DataMatrix,
    params: &GraphParams,
    m: usize,
    options: FitOptions,
) -> Result<RpcaFit> {
    params.validate(x.nrows())?;
    let (graph, similarity, rho) = if options.rho_one {
        (None, None, RhoMatrix::ones(x.nrows()))
    } else {
        let graph = build_graph(x, params)?;
        let b = symmetrize(&graph.weights)?;
        let rho = rho_coefficients(&b, params.dense_cap)?;
        (Some(graph), Some(b), rho)
    };
    let model = RiemannianModel::from_rho(x, rho, Some(params.k))?;
    let (result, model) = fit_from_model(x, model, m)?;
    Ok(RpcaFit {
        result,
        model,
        graph,
        similarity,
    })
}
