use ndarray::{s, Array1, Array2, Axis};

use super::{
    correlation_circle, eigen_from_factor, eigen_sym_desc, explained_inertia, Method, RpcaResult,
};
use crate::dataio::DataMatrix;
use crate::error::{Result, RpcaError};

/// Where classical PCA centers the columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Centering {
    /// Arithmetic column means (standard PCA).
    #[default]
    Mean,
    /// The Euclidean medoid row; with unit `rho` this is the R-PCA center.
    Medoid,
}

/// Row minimizing `sum_j ||x_i - x_j||^2`, ties to the lowest index.
pub fn euclidean_medoid(x: &DataMatrix) -> usize {
    let v = x.values();
    let n = v.nrows();
    let mut best = (0, f64::INFINITY);
    for i in 0..n {
        let xi = v.row(i);
        let total: f64 = (0..n)
            .map(|j| {
                xi.iter()
                    .zip(v.row(j).iter())
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum::<f64>()
            })
            .sum();
        if total < best.1 {
            best = (i, total);
        }
    }
    best.0
}

/// Correlation-matrix PCA: center, scale each column to unit root mean
/// square about the center, eigen-decompose `Z^T Z / n`, and project.
pub fn classical_pca(x: &DataMatrix, m: usize, centering: Centering) -> Result<RpcaResult> {
    let (n, p) = x.values().dim();
    let (center, mean_index): (Array1<f64>, Option<usize>) = match centering {
        Centering::Mean => (x.values().mean_axis(Axis(0)).expect("n >= 1"), None),
        Centering::Medoid => {
            let idx = euclidean_medoid(x);
            (x.values().row(idx).to_owned(), Some(idx))
        }
    };

    let mut z: Array2<f64> = x.values() - &center;
    for (j, mut col) in z.axis_iter_mut(Axis(1)).enumerate() {
        let ms = col.iter().map(|v| v * v).sum::<f64>() / n as f64;
        if !(ms > 0.0) {
            return Err(RpcaError::ZeroVariance(x.col_names()[j].clone()));
        }
        let sd = ms.sqrt();
        col.mapv_inplace(|v| v / sd);
    }

    let eigen = if p > n {
        eigen_from_factor(&z)?
    } else {
        let mut r = z.t().dot(&z) / n as f64;
        r.diag_mut().fill(1.0);
        eigen_sym_desc(&r)?
    };
    if m == 0 || m > eigen.n_vectors() {
        return Err(RpcaError::TooManyComponents {
            requested: m,
            available: eigen.n_vectors(),
        });
    }
    let scores = z.dot(&eigen.vectors.slice(s![.., ..m]));
    let circle = correlation_circle(&eigen, m)?;
    let inertia = explained_inertia(&eigen.values)?;
    Ok(RpcaResult {
        method: Method::Pca,
        scores,
        circle,
        inertia,
        eigen,
        mean_index,
        row_ids: x.row_ids().to_vec(),
        col_names: x.col_names().to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rank_one_line() {
        let x =
            DataMatrix::from_array(array![[0.0, 0.0], [1.0, 1.0], [2.0, 2.0], [5.0, 5.0]]).unwrap();
        let r = classical_pca(&x, 1, Centering::Mean).unwrap();
        let h = 0.5f64.sqrt();
        assert!((r.eigen.vectors[[0, 0]] - h).abs() < 1e-12);
        assert!((r.eigen.vectors[[1, 0]] - h).abs() < 1e-12);
        assert!((r.inertia[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn first_direction_beats_random_directions() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let raw = Array2::from_shape_fn((200, 4), |_| rng.random_range(-1.0..1.0));
        // Correlate the columns so the leading direction is well separated.
        let mix = array![
            [1.0, 0.6, 0.0, 0.2],
            [0.0, 1.0, 0.3, 0.0],
            [0.0, 0.0, 1.0, 0.5],
            [0.0, 0.0, 0.0, 1.0]
        ];
        let x = DataMatrix::from_array(raw.dot(&mix)).unwrap();
        let r = classical_pca(&x, 2, Centering::Mean).unwrap();

        // Standardized data, built independently.
        let v = x.values();
        let mean = v.mean_axis(Axis(0)).unwrap();
        let sd = v.std_axis(Axis(0), 0.0);
        let z = (v - &mean) / &sd;
        let projected = |u: &Array1<f64>| z.dot(u).mapv(|t| t * t).sum();

        let v1 = r.eigen.vectors.column(0).to_owned();
        let best = projected(&v1);
        for _ in 0..10_000 {
            let mut u: Array1<f64> = Array1::from_shape_fn(4, |_| rng.random_range(-1.0..1.0));
            u /= u.dot(&u).sqrt();
            assert!(projected(&u) <= best + 1e-9);
        }
    }

    #[test]
    fn zero_variance_column_errors() {
        let x = DataMatrix::from_array(array![[1.0, 2.0], [2.0, 2.0], [3.0, 2.0]]).unwrap();
        assert!(matches!(
            classical_pca(&x, 1, Centering::Mean),
            Err(RpcaError::ZeroVariance(_))
        ));
    }

    #[test]
    fn medoid_tie_goes_low() {
        let x = DataMatrix::from_array(array![[0.0], [1.0]]).unwrap();
        assert_eq!(euclidean_medoid(&x), 0);
        let x = DataMatrix::from_array(array![[0.0], [1.0], [2.0]]).unwrap();
        assert_eq!(euclidean_medoid(&x), 1);
    }
}
