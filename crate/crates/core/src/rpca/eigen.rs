use nalgebra::DMatrix;
use ndarray::{Array1, Array2, Axis};

use crate::error::{Result, RpcaError};
use crate::riemann::symmetric_part;

/// Eigenpairs sorted by descending eigenvalue.
///
/// `values` always has one entry per variable. `vectors` is `p x q`: the full
/// orthonormal basis (`q = p`) when solved directly, or only the columns
/// with nonzero eigenvalue when solved through the row Gram matrix; the
/// remaining values are then exactly zero.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenSystem {
    pub values: Array1<f64>,
    pub vectors: Array2<f64>,
}

impl EigenSystem {
    pub fn p(&self) -> usize {
        self.values.len()
    }

    pub fn n_vectors(&self) -> usize {
        self.vectors.ncols()
    }
}

/// Flips each column so its largest-magnitude entry is positive (first such
/// entry on ties).
fn fix_signs(vectors: &mut Array2<f64>) {
    for mut col in vectors.axis_iter_mut(Axis(1)) {
        let mut best = 0;
        for (i, v) in col.iter().enumerate() {
            if v.abs() > col[best].abs() {
                best = i;
            }
        }
        if col[best] < 0.0 {
            col.mapv_inplace(|v| -v);
        }
    }
}

fn sym_eigen_sorted(m: &Array2<f64>) -> (Vec<f64>, Array2<f64>) {
    let p = m.nrows();
    let dm = DMatrix::from_fn(p, p, |i, j| m[[i, j]]);
    let eig = dm.symmetric_eigen();
    let mut order: Vec<usize> = (0..p).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[b]
            .total_cmp(&eig.eigenvalues[a])
            .then(a.cmp(&b))
    });
    let values = order.iter().map(|&s| eig.eigenvalues[s]).collect();
    let vectors = Array2::from_shape_fn((p, p), |(i, s)| eig.eigenvectors[(i, order[s])]);
    (values, vectors)
}

/// Full spectral decomposition of a symmetric matrix (the input is replaced
/// by its symmetric part first), eigenvalues descending.
pub fn eigen_sym_desc(r: &Array2<f64>) -> Result<EigenSystem> {
    if r.nrows() != r.ncols() {
        return Err(RpcaError::InvalidParam(format!(
            "eigenproblem needs a square matrix, got {:?}",
            r.dim()
        )));
    }
    if r.iter().any(|v| !v.is_finite()) {
        return Err(RpcaError::NonFiniteMatrix);
    }
    let (values, mut vectors) = sym_eigen_sorted(&symmetric_part(r));
    fix_signs(&mut vectors);
    Ok(EigenSystem {
        values: Array1::from(values),
        vectors,
    })
}

/// Eigenpairs of `F^T F / n` for an `n x p` factor `F`, computed from the
/// `n x n` Gram matrix `F F^T / n`. Used when `p > n`, where the `p x p`
/// problem has at most `n` nonzero eigenvalues.
pub fn eigen_from_factor(f: &Array2<f64>) -> Result<EigenSystem> {
    let (n, p) = f.dim();
    if f.iter().any(|v| !v.is_finite()) {
        return Err(RpcaError::NonFiniteMatrix);
    }
    let nf = n as f64;
    let gram = symmetric_part(&(f.dot(&f.t()) / nf));
    let (mu, u) = sym_eigen_sorted(&gram);
    let top = mu.first().copied().unwrap_or(0.0).max(0.0);
    let cutoff = top * 1e-12 * n as f64;
    let kept: Vec<usize> = (0..n).filter(|&s| mu[s] > cutoff && mu[s] > 0.0).collect();

    let mut vectors = Array2::zeros((p, kept.len()));
    for (c, &s) in kept.iter().enumerate() {
        let v = f.t().dot(&u.column(s)) / (nf * mu[s]).sqrt();
        // Re-normalize to absorb roundoff in the Gram eigenvector.
        let norm = v.dot(&v).sqrt();
        vectors.column_mut(c).assign(&(v / norm));
    }
    fix_signs(&mut vectors);

    let mut values = Array1::zeros(p);
    for (c, &s) in kept.iter().enumerate() {
        values[c] = mu[s];
    }
    Ok(EigenSystem { values, vectors })
}
