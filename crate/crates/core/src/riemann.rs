//! Statistics under the graph-induced local metric.
//!
//! Every pair of rows gets a dissimilarity coefficient `rho_ab = 1 - B_ab`
//! and the difference `x_a (-) x_b = rho_ab (x_a - x_b)`. Strongly connected
//! points are pulled together; unconnected points keep their Euclidean
//! separation. The mean is the data row minimizing the summed squared
//! distances, and covariance and correlation are taken over the
//! `rho`-weighted deviations from it.

use ndarray::{Array1, Array2, ArrayView1, Axis, Zip};
use rayon::prelude::*;

use crate::dataio::DataMatrix;
use crate::error::{Result, RpcaError};
use crate::knngraph::SimilarityMatrix;

/// Dense `n x n` matrix of coefficients `rho_ab = 1 - B_ab`.
#[derive(Debug, Clone, PartialEq)]
pub struct RhoMatrix(Array2<f64>);

impl RhoMatrix {
    /// All coefficients equal to one: the plain Euclidean geometry.
    pub fn ones(n: usize) -> Self {
        RhoMatrix(Array2::ones((n, n)))
    }

    pub fn as_array(&self) -> &Array2<f64> {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, a: usize, b: usize) -> f64 {
        self.0[[a, b]]
    }

    pub fn row(&self, a: usize) -> ArrayView1<'_, f64> {
        self.0.row(a)
    }

    /// Wraps a caller-supplied matrix after checking it is square, symmetric
    /// and within `[0, 1]`.
    pub fn from_array(p: Array2<f64>) -> Result<Self> {
        let (n, m) = p.dim();
        if n != m {
            return Err(RpcaError::InvalidParam(format!("rho matrix is {n}x{m}")));
        }
        for ((a, b), &v) in p.indexed_iter() {
            if !(0.0..=1.0).contains(&v) || v != p[[b, a]] {
                return Err(RpcaError::InvalidParam(format!(
                    "rho matrix entry ({a}, {b}) = {v} is not a symmetric value in [0, 1]"
                )));
            }
        }
        Ok(RhoMatrix(p))
    }
}

/// `P = 1 - B` elementwise, materialized densely.
pub fn rho_coefficients(b: &SimilarityMatrix, dense_cap: usize) -> Result<RhoMatrix> {
    let n = b.n();
    if n > dense_cap {
        return Err(RpcaError::DenseCap { n, cap: dense_cap });
    }
    let mut p = Array2::ones((n, n));
    for i in 0..n {
        for &(j, v) in b.row(i) {
            p[[i, j]] = 1.0 - v;
        }
    }
    Ok(RhoMatrix(p))
}

/// `rho_ab * (x_a - x_b)`.
pub fn riemann_subtract(
    x_a: ArrayView1<'_, f64>,
    x_b: ArrayView1<'_, f64>,
    rho_ab: f64,
) -> Array1<f64> {
    Zip::from(&x_a)
        .and(&x_b)
        .map_collect(|a, b| rho_ab * (a - b))
}

fn euclidean(a: ArrayView1<'_, f64>, b: ArrayView1<'_, f64>) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// `D_ab = rho_ab * ||x_a - x_b||`. Each unordered pair is evaluated once,
/// so `D` is exactly symmetric with a zero diagonal.
pub fn riemann_distance_matrix(x: &DataMatrix, p: &RhoMatrix) -> Result<Array2<f64>> {
    let n = x.nrows();
    if p.n() != n {
        return Err(RpcaError::InvalidParam(format!(
            "rho matrix has {} rows, data has {n}",
            p.n()
        )));
    }
    let values = x.values();
    let upper: Vec<Vec<f64>> = (0..n)
        .into_par_iter()
        .map(|a| {
            let xa = values.row(a);
            ((a + 1)..n)
                .map(|b| p.get(a, b) * euclidean(xa, values.row(b)))
                .collect()
        })
        .collect();
    let mut d = Array2::zeros((n, n));
    for (a, row) in upper.into_iter().enumerate() {
        for (off, v) in row.into_iter().enumerate() {
            let b = a + 1 + off;
            d[[a, b]] = v;
            d[[b, a]] = v;
        }
    }
    Ok(d)
}

/// The data row minimizing the summed squared local distances.
#[derive(Debug, Clone, PartialEq)]
pub struct RiemannianMean {
    pub index: usize,
    pub g: Array1<f64>,
    /// `rho_{i, index}` for every row `i`.
    pub rho_to_mean: Array1<f64>,
    /// `sum_j D_{index, j}^2`.
    pub objective: f64,
}

/// Sum of squared entries of each row of `d`, accumulated left to right.
pub fn squared_distance_sums(d: &Array2<f64>) -> Vec<f64> {
    d.axis_iter(Axis(0))
        .into_par_iter()
        .map(|row| row.iter().map(|v| v * v).sum())
        .collect()
}

/// Argmin over data rows of `sum_j D_ij^2`, ties to the lowest index.
///
/// The search is restricted to the rows themselves, so the mean is a medoid
/// under the local metric and `rho_to_mean` is read straight from `P`.
pub fn riemann_mean(x: &DataMatrix, d: &Array2<f64>, p: &RhoMatrix) -> Result<RiemannianMean> {
    let n = x.nrows();
    if d.dim() != (n, n) || p.n() != n {
        return Err(RpcaError::InvalidParam(
            "distance and rho matrices must be n x n".into(),
        ));
    }
    let sums = squared_distance_sums(d);
    let mut index = 0;
    for (i, &s) in sums.iter().enumerate().skip(1) {
        if s < sums[index] {
            index = i;
        }
    }
    let mut rho_to_mean = p.as_array().column(index).to_owned();
    // The mean's own deviation vanishes whatever the diagonal of P holds.
    rho_to_mean[index] = 1.0;
    Ok(RiemannianMean {
        index,
        g: x.values().row(index).to_owned(),
        rho_to_mean,
        objective: sums[index],
    })
}

/// Rows `rho_{i, index} * (x_i - g)`; the mean's own row is exactly zero.
pub fn weighted_deviations(x: &DataMatrix, mean: &RiemannianMean) -> Array2<f64> {
    let mut w = x.values().clone();
    Zip::from(w.axis_iter_mut(Axis(0)))
        .and(&mean.rho_to_mean)
        .par_for_each(|mut row, &rho| {
            Zip::from(&mut row)
                .and(&mean.g)
                .for_each(|v, &g| *v = rho * (*v - g));
        });
    w.row_mut(mean.index).fill(0.0);
    w
}

/// `S = (1/n) sum_i rho_{i, index}^2 (x_i - g)(x_i - g)^T`.
pub fn riemann_covariance(x: &DataMatrix, mean: &RiemannianMean) -> Array2<f64> {
    let n = x.nrows() as f64;
    let w = weighted_deviations(x, mean);
    let s = w.t().dot(&w) / n;
    symmetric_part(&s)
}

pub(crate) fn symmetric_part(m: &Array2<f64>) -> Array2<f64> {
    (m + &m.t()) * 0.5
}

/// `R_ij = S_ij / sqrt(S_ii S_jj)` with an exact unit diagonal.
pub fn riemann_correlation(s: &Array2<f64>, col_names: &[String]) -> Result<Array2<f64>> {
    let p = s.nrows();
    let mut sd = Vec::with_capacity(p);
    for j in 0..p {
        let v = s[[j, j]];
        if !(v > 0.0) {
            let name = col_names
                .get(j)
                .cloned()
                .unwrap_or_else(|| format!("V{}", j + 1));
            return Err(RpcaError::DegenerateVariable(name));
        }
        sd.push(v.sqrt());
    }
    let mut r = Array2::from_shape_fn((p, p), |(i, j)| {
        (s[[i, j]] / (sd[i] * sd[j])).clamp(-1.0, 1.0)
    });
    r.diag_mut().fill(1.0);
    Ok(symmetric_part(&r))
}

/// Everything computed between the similarity matrix and the eigenproblem.
#[derive(Debug, Clone)]
pub struct RiemannianModel {
    /// Neighbor count used to build the graph; `None` when the geometry was
    /// supplied directly.
    pub k: Option<usize>,
    pub rho: RhoMatrix,
    pub distances: Array2<f64>,
    pub mean: RiemannianMean,
    pub covariance: Array2<f64>,
    pub correlation: Array2<f64>,
}

impl RiemannianModel {
    /// Runs distance, mean, covariance and correlation for a given `P`.
    pub fn from_rho(x: &DataMatrix, rho: RhoMatrix, k: Option<usize>) -> Result<Self> {
        let distances = riemann_distance_matrix(x, &rho)?;
        let mean = riemann_mean(x, &distances, &rho)?;
        let covariance = riemann_covariance(x, &mean);
        let correlation = riemann_correlation(&covariance, x.col_names())?;
        Ok(Self {
            k,
            rho,
            distances,
            mean,
            covariance,
            correlation,
        })
    }
}
