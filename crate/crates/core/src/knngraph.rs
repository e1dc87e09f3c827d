//! Weighted k-nearest-neighbor graph in the style of UMAP's fuzzy
//! simplicial set: exact neighbor search, per-point local connectivity and
//! bandwidth, directed membership weights, and their fuzzy-union
//! symmetrization.

use std::cmp::Ordering;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use ndarray::{Array2, ArrayView1, Axis};
use rayon::prelude::*;

use crate::dataio::DataMatrix;
use crate::error::{Result, RpcaError};

/// Default upper bound on `n` for materializing dense `n x n` matrices.
pub const DEFAULT_DENSE_CAP: usize = 10_000;

// Bisection bracket for the bandwidth solve.
const SIGMA_LOWER: f64 = 1e-12;
const MAX_DOUBLINGS: usize = 64;
// Bandwidth used for rows whose neighbors all sit at distance zero.
const DEGENERATE_SIGMA: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Metric {
    #[default]
    Euclidean,
    Manhattan,
}

impl Metric {
    pub fn distance(self, a: ArrayView1<'_, f64>, b: ArrayView1<'_, f64>) -> f64 {
        match self {
            Metric::Euclidean => a
                .iter()
                .zip(b.iter())
                .map(|(x, y)| (x - y) * (x - y))
                .sum::<f64>()
                .sqrt(),
            Metric::Manhattan => a.iter().zip(b.iter()).map(|(x, y)| (x - y).abs()).sum(),
        }
    }
}

impl std::str::FromStr for Metric {
    type Err = RpcaError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "euclidean" => Ok(Metric::Euclidean),
            "manhattan" => Ok(Metric::Manhattan),
            other => Err(RpcaError::InvalidParam(format!("unknown metric {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GraphParams {
    pub k: usize,
    pub metric: Metric,
    /// Largest bandwidth-equation residual accepted as converged.
    pub sigma_tol: f64,
    pub sigma_max_iter: usize,
    /// The bandwidth floor is this fraction of the row's mean neighbor distance.
    pub sigma_min_scale: f64,
    pub dense_cap: usize,
}

impl GraphParams {
    pub fn new(k: usize) -> Self {
        Self {
            k,
            metric: Metric::Euclidean,
            sigma_tol: 1e-5,
            sigma_max_iter: 64,
            sigma_min_scale: 1e-3,
            dense_cap: DEFAULT_DENSE_CAP,
        }
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        if self.k == 0 || self.k >= n {
            return Err(RpcaError::InvalidK { k: self.k, n });
        }
        if !(self.sigma_tol > 0.0) {
            return Err(RpcaError::InvalidParam("sigma_tol must be positive".into()));
        }
        if self.sigma_max_iter == 0 {
            return Err(RpcaError::InvalidParam(
                "sigma_max_iter must be >= 1".into(),
            ));
        }
        if !(self.sigma_min_scale > 0.0) {
            return Err(RpcaError::InvalidParam(
                "sigma_min_scale must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Exact k-nearest-neighbor lists. Row `i` never lists itself; distances
/// are ascending with ties broken by ascending row index.
#[derive(Debug, Clone, PartialEq)]
pub struct KnnLists {
    pub neighbors: Vec<Vec<usize>>,
    pub distances: Vec<Vec<f64>>,
}

fn by_distance_then_index(a: &(f64, usize), b: &(f64, usize)) -> Ordering {
    a.0.total_cmp(&b.0).then(a.1.cmp(&b.1))
}

/// Brute-force exact neighbor search, `O(n^2 p)`.
pub fn knn_neighbors(x: &DataMatrix, params: &GraphParams) -> Result<KnnLists> {
    let n = x.nrows();
    params.validate(n)?;
    let k = params.k;
    let values = x.values();

    let rows: Vec<(Vec<usize>, Vec<f64>)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let xi = values.row(i);
            let mut cand: Vec<(f64, usize)> = (0..n)
                .filter(|&j| j != i)
                .map(|j| (params.metric.distance(xi, values.row(j)), j))
                .collect();
            if k < cand.len() {
                cand.select_nth_unstable_by(k - 1, by_distance_then_index);
                cand.truncate(k);
            }
            cand.sort_unstable_by(by_distance_then_index);
            cand.into_iter().map(|(d, j)| (j, d)).unzip()
        })
        .collect();

    let (neighbors, distances) = rows.into_iter().unzip();
    Ok(KnnLists {
        neighbors,
        distances,
    })
}

/// Smallest strictly positive distance in the list, or `None` when every
/// neighbor coincides with the query point (the row is degenerate and its
/// connectivity is taken as 0).
pub fn local_connectivity(dists: &[f64]) -> Option<f64> {
    dists
        .iter()
        .copied()
        .filter(|&d| d > 0.0)
        .min_by(f64::total_cmp)
}

/// Outcome of the per-row bandwidth solve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SigmaSolve {
    pub sigma: f64,
    /// Absolute residual of the membership-mass equation at `sigma`.
    pub residual: f64,
    /// True when no bandwidth attains the target and `sigma` is the floor.
    pub clamped: bool,
}

/// Membership mass `sum_j exp(-max(0, d_j - rho) / sigma)`, summed in list order.
pub fn membership_mass(dists: &[f64], rho: f64, sigma: f64) -> f64 {
    dists
        .iter()
        .map(|&d| (-(d - rho).max(0.0) / sigma).exp())
        .sum()
}

/// Bandwidth floor for a row: a fixed fraction of its mean neighbor distance.
pub fn sigma_floor(dists: &[f64], params: &GraphParams) -> f64 {
    let mean = dists.iter().sum::<f64>() / dists.len().max(1) as f64;
    if mean > 0.0 {
        params.sigma_min_scale * mean
    } else {
        DEGENERATE_SIGMA
    }
}

/// Solves `membership_mass(dists, rho, sigma) = log2(k)` for `sigma`.
///
/// The mass increases with `sigma`, from the number of zero offsets (as
/// `sigma -> 0`) towards `k`. A root exists iff the target lies strictly
/// above the zero-offset count; otherwise the floor from [`sigma_floor`] is
/// returned and the result is marked clamped.
///
/// The upper bracket starts at 1 and doubles until it encloses the root;
/// bisection then runs until the bracket stops shrinking in floating point
/// or `sigma_max_iter` halvings have been done.
pub fn smooth_sigma(dists: &[f64], rho: f64, params: &GraphParams) -> SigmaSolve {
    let k = dists.len();
    let target = (k as f64).log2();
    let floor = sigma_floor(dists, params);
    let zero_offsets = dists.iter().filter(|&&d| d - rho <= 0.0).count();

    if k == 0 || target <= zero_offsets as f64 {
        return SigmaSolve {
            sigma: floor,
            residual: (membership_mass(dists, rho, floor) - target).abs(),
            clamped: true,
        };
    }

    let mut lo = SIGMA_LOWER;
    let mut hi = 1.0;
    let mut doublings = 0;
    while membership_mass(dists, rho, hi) < target && doublings < MAX_DOUBLINGS {
        lo = hi;
        hi *= 2.0;
        doublings += 1;
    }

    let mut mid = 0.5 * (lo + hi);
    let mut residual = f64::INFINITY;
    for _ in 0..params.sigma_max_iter {
        mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let mass = membership_mass(dists, rho, mid);
        residual = (mass - target).abs();
        if mass == target {
            break;
        }
        if mass < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if !residual.is_finite() {
        residual = (membership_mass(dists, rho, mid) - target).abs();
    }

    if residual > params.sigma_tol {
        log::warn!(
            "bandwidth solve stopped with residual {residual:.3e} > {:.1e}; clamping",
            params.sigma_tol
        );
        let sigma = mid.max(floor);
        return SigmaSolve {
            sigma,
            residual: (membership_mass(dists, rho, sigma) - target).abs(),
            clamped: true,
        };
    }
    SigmaSolve {
        sigma: mid,
        residual,
        clamped: false,
    }
}

/// Row-indexed sparse matrix; each row holds `(column, value)` pairs sorted
/// by column with no duplicates.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseRows {
    n: usize,
    rows: Vec<Vec<(usize, f64)>>,
}

impl SparseRows {
    /// Builds an `n x n` matrix from per-row entry lists (any order).
    pub fn from_rows(mut rows: Vec<Vec<(usize, f64)>>) -> Result<Self> {
        let n = rows.len();
        for (i, row) in rows.iter_mut().enumerate() {
            row.sort_by_key(|&(j, _)| j);
            if let Some(&(j, _)) = row.iter().find(|&&(j, _)| j >= n) {
                return Err(RpcaError::InvalidParam(format!(
                    "entry ({i}, {j}) is outside a {n}x{n} matrix"
                )));
            }
            if row.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(RpcaError::InvalidParam(format!(
                    "row {i} has duplicate column entries"
                )));
            }
        }
        Ok(Self { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row(&self, i: usize) -> &[(usize, f64)] {
        &self.rows[i]
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        let row = &self.rows[i];
        row.binary_search_by_key(&j, |&(c, _)| c)
            .map_or(0.0, |pos| row[pos].1)
    }

    /// Nonzero entries as `(i, j, value)`, sorted by `(i, j)`.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |&(j, v)| (i, j, v)))
    }

    pub fn to_dense(&self, cap: usize) -> Result<Array2<f64>> {
        if self.n > cap {
            return Err(RpcaError::DenseCap { n: self.n, cap });
        }
        let mut out = Array2::zeros((self.n, self.n));
        for (i, j, v) in self.triplets() {
            out[[i, j]] = v;
        }
        Ok(out)
    }

    pub fn transpose(&self) -> SparseRows {
        let mut rows = vec![Vec::new(); self.n];
        for (i, j, v) in self.triplets() {
            rows[j].push((i, v));
        }
        // Rows were filled in ascending i, so they are already sorted.
        SparseRows { n: self.n, rows }
    }
}

/// Directed k-NN graph with UMAP-style membership weights.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborGraph {
    pub knn: KnnLists,
    pub rho: Vec<f64>,
    pub sigma: Vec<f64>,
    /// Rows whose neighbors all lie at distance zero.
    pub degenerate: Vec<bool>,
    /// Rows whose bandwidth fell back to the floor.
    pub clamped: Vec<bool>,
    /// Directed affinities `A`.
    pub weights: SparseRows,
}

/// Computes `A[i, j] = exp(-max(0, d_ij - rho_i) / sigma_i)` for every listed
/// neighbor `j` of `i`.
pub fn directed_weights(knn: &KnnLists, rho: &[f64], sigma: &[f64]) -> Result<SparseRows> {
    let rows = knn
        .neighbors
        .iter()
        .zip(&knn.distances)
        .enumerate()
        .map(|(i, (nbrs, dists))| {
            nbrs.iter()
                .zip(dists)
                .map(|(&j, &d)| (j, (-(d - rho[i]).max(0.0) / sigma[i]).exp()))
                .collect()
        })
        .collect();
    SparseRows::from_rows(rows)
}

/// Runs neighbor search, the per-row connectivity and bandwidth solves, and
/// the directed weight computation.
pub fn build_graph(x: &DataMatrix, params: &GraphParams) -> Result<NeighborGraph> {
    let knn = knn_neighbors(x, params)?;

    let per_row: Vec<(f64, f64, bool, bool)> = knn
        .distances
        .par_iter()
        .map(|dists| match local_connectivity(dists) {
            Some(rho) => {
                let solve = smooth_sigma(dists, rho, params);
                (rho, solve.sigma, false, solve.clamped)
            }
            None => (0.0, DEGENERATE_SIGMA, true, true),
        })
        .collect();

    let degenerate_rows = per_row.iter().filter(|r| r.2).count();
    if degenerate_rows > 0 {
        log::warn!("{degenerate_rows} rows have all neighbors at distance zero");
    }

    let rho: Vec<f64> = per_row.iter().map(|r| r.0).collect();
    let sigma: Vec<f64> = per_row.iter().map(|r| r.1).collect();
    let weights = directed_weights(&knn, &rho, &sigma)?;
    Ok(NeighborGraph {
        knn,
        rho,
        sigma,
        degenerate: per_row.iter().map(|r| r.2).collect(),
        clamped: per_row.iter().map(|r| r.3).collect(),
        weights,
    })
}

/// Symmetric fuzzy similarity `B` with entries in `[0, 1]` and zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct SimilarityMatrix {
    inner: SparseRows,
}

impl SimilarityMatrix {
    /// The all-zero similarity (no graph edges).
    pub fn empty(n: usize) -> Self {
        Self {
            inner: SparseRows {
                n,
                rows: vec![Vec::new(); n],
            },
        }
    }

    pub fn n(&self) -> usize {
        self.inner.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.inner.get(i, j)
    }

    pub fn row(&self, i: usize) -> &[(usize, f64)] {
        self.inner.row(i)
    }

    pub fn nnz(&self) -> usize {
        self.inner.nnz()
    }

    pub fn as_sparse(&self) -> &SparseRows {
        &self.inner
    }

    pub fn to_dense(&self, cap: usize) -> Result<Array2<f64>> {
        self.inner.to_dense(cap)
    }
}

/// Fuzzy union `B_ij = A_ij + A_ji - A_ij * A_ji`.
///
/// Each unordered pair is evaluated once with its operands in a fixed order
/// and written to both `(i, j)` and `(j, i)`, so `B` is exactly symmetric.
pub fn symmetrize(a: &SparseRows) -> Result<SimilarityMatrix> {
    for (i, j, v) in a.triplets() {
        if !(0.0..=1.0).contains(&v) {
            return Err(RpcaError::WeightOutOfRange {
                row: i,
                col: j,
                value: v,
            });
        }
        if i == j && v != 0.0 {
            return Err(RpcaError::InvalidParam(format!(
                "self-loop weight {v} at ({i}, {i})"
            )));
        }
    }

    let at = a.transpose();
    let n = a.n();
    let rows: Vec<Vec<(usize, f64)>> = (0..n)
        .into_par_iter()
        .map(|i| {
            // Merge row i of A (forward) with row i of A^T (backward).
            let fwd = a.row(i);
            let bwd = at.row(i);
            let (mut p, mut q) = (0, 0);
            let mut out = Vec::with_capacity(fwd.len() + bwd.len());
            while p < fwd.len() || q < bwd.len() {
                let jf = fwd.get(p).map_or(usize::MAX, |e| e.0);
                let jb = bwd.get(q).map_or(usize::MAX, |e| e.0);
                let j = jf.min(jb);
                let w_ij = if jf == j {
                    p += 1;
                    fwd[p - 1].1
                } else {
                    0.0
                };
                let w_ji = if jb == j {
                    q += 1;
                    bwd[q - 1].1
                } else {
                    0.0
                };
                if j == i {
                    continue;
                }
                let (lo_hi, hi_lo) = if i < j { (w_ij, w_ji) } else { (w_ji, w_ij) };
                let b = lo_hi + hi_lo - lo_hi * hi_lo;
                if b != 0.0 {
                    out.push((j, b));
                }
            }
            out
        })
        .collect();
    Ok(SimilarityMatrix {
        inner: SparseRows { n, rows },
    })
}

/// Writes nonzero entries as `i j value` lines sorted by `(i, j)`.
pub fn write_coordinate_text(
    entries: impl Iterator<Item = (usize, usize, f64)>,
    path: impl AsRef<Path>,
) -> Result<()> {
    let path = path.as_ref();
    let io = |e| RpcaError::io(path, e);
    let mut w = BufWriter::new(File::create(path).map_err(io)?);
    for (i, j, v) in entries {
        writeln!(w, "{i} {j} {v:?}").map_err(io)?;
    }
    w.flush().map_err(io)
}

/// Dense-matrix variant of [`write_coordinate_text`], skipping zeros.
pub fn write_dense_coordinate_text(m: &Array2<f64>, path: impl AsRef<Path>) -> Result<()> {
    let entries = m.axis_iter(Axis(0)).enumerate().flat_map(|(i, row)| {
        row.into_iter()
            .enumerate()
            .filter(|(_, v)| **v != 0.0)
            .map(move |(j, &v)| (i, j, v))
            .collect::<Vec<_>>()
    });
    write_coordinate_text(entries, path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::{array, Array2};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn line_points() -> DataMatrix {
        DataMatrix::from_array(array![[0.0], [1.0], [2.0], [3.0]]).unwrap()
    }

    #[test]
    fn neighbors_on_a_line() {
        let knn = knn_neighbors(&line_points(), &GraphParams::new(2)).unwrap();
        assert_eq!(knn.neighbors[0], vec![1, 2]);
        assert_eq!(knn.distances[0], vec![1.0, 2.0]);
        // Point 1 has a tie between 0 and 2 at distance 1; lower index first.
        assert_eq!(knn.neighbors[1], vec![0, 2]);
    }

    #[test]
    fn duplicates_list_each_other_at_zero() {
        let x =
            DataMatrix::from_array(array![[0.0, 0.0], [1.0, 1.0], [1.0, 1.0], [5.0, 2.0]]).unwrap();
        let knn = knn_neighbors(&x, &GraphParams::new(1)).unwrap();
        assert_eq!(knn.neighbors[1], vec![2]);
        assert_eq!(knn.neighbors[2], vec![1]);
        assert_eq!(knn.distances[1], vec![0.0]);
    }

    #[test]
    fn k_must_be_below_n() {
        assert!(matches!(
            knn_neighbors(&line_points(), &GraphParams::new(4)),
            Err(RpcaError::InvalidK { k: 4, n: 4 })
        ));
        assert!(knn_neighbors(&line_points(), &GraphParams::new(0)).is_err());
    }

    #[test]
    fn knn_matches_sort_all_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let values = Array2::from_shape_fn((50, 5), |_| rng.random_range(-1.0..1.0));
        let x = DataMatrix::from_array(values.clone()).unwrap();
        let knn = knn_neighbors(&x, &GraphParams::new(5)).unwrap();
        for i in 0..50 {
            let mut all: Vec<(f64, usize)> = (0..50)
                .filter(|&j| j != i)
                .map(|j| {
                    let d2: f64 = (0..5)
                        .map(|c| (values[[i, c]] - values[[j, c]]).powi(2))
                        .sum();
                    (d2.sqrt(), j)
                })
                .collect();
            all.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let want: Vec<usize> = all[..5].iter().map(|e| e.1).collect();
            assert_eq!(knn.neighbors[i], want);
        }
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(local_connectivity(&[0.0, 0.5, 0.9]), Some(0.5));
        assert_eq!(local_connectivity(&[0.2, 0.3]), Some(0.2));
        assert_eq!(local_connectivity(&[0.0, 0.0, 0.0]), None);
    }

    #[test]
    fn sigma_closed_form() {
        // Offsets {0, t, t, t}: 1 + 3 exp(-t / sigma) = 2 => sigma = t / ln 3.
        let (rho, t) = (0.7, 0.4);
        let dists = [rho, rho + t, rho + t, rho + t];
        let solve = smooth_sigma(&dists, rho, &GraphParams::new(4));
        assert!(!solve.clamped);
        let want = t / 3f64.ln();
        assert!(
            (solve.sigma - want).abs() < 1e-12 * want,
            "{} vs {want}",
            solve.sigma
        );
    }

    #[test]
    fn sigma_clamps_when_target_is_unreachable() {
        let params = GraphParams::new(2);
        let dists = [0.5, 0.9];
        let solve = smooth_sigma(&dists, 0.5, &params);
        assert!(solve.clamped);
        assert_eq!(solve.sigma, 1e-3 * ((0.5 + 0.9) / 2.0));
    }

    #[test]
    fn sigma_residual_small_for_random_lists() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let params = GraphParams::new(10);
        for _ in 0..50 {
            let mut d: Vec<f64> = (0..10).map(|_| rng.random_range(0.1..3.0)).collect();
            d.sort_by(f64::total_cmp);
            let rho = local_connectivity(&d).unwrap();
            let s = smooth_sigma(&d, rho, &params);
            assert!(!s.clamped);
            assert!(s.residual < 1e-10);
            assert!((membership_mass(&d, rho, s.sigma) - 10f64.log2()).abs() < 1e-10);
        }
    }

    #[test]
    fn weight_examples() {
        let (rho, sigma) = (0.5, 0.8);
        let knn = KnnLists {
            neighbors: vec![vec![1, 2, 3], vec![0, 2, 3], vec![0, 1, 3], vec![0, 1, 2]],
            distances: vec![
                vec![0.0, rho, rho + sigma * 2f64.ln()],
                vec![1.0, 1.0, 1.0],
                vec![1.0, 1.0, 1.0],
                vec![1.0, 1.0, 1.0],
            ],
        };
        let a = directed_weights(&knn, &[rho, 1.0, 1.0, 1.0], &[sigma, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!(a.get(0, 1), 1.0);
        assert_eq!(a.get(0, 2), 1.0);
        assert!((a.get(0, 3) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn symmetrize_examples() {
        let a =
            SparseRows::from_rows(vec![vec![(1, 1.0), (2, 0.5)], vec![], vec![(0, 0.5)]]).unwrap();
        let b = symmetrize(&a).unwrap();
        assert_eq!(b.get(0, 1), 1.0);
        assert_eq!(b.get(1, 0), 1.0);
        assert_eq!(b.get(0, 2), 0.75);
        assert_eq!(b.get(2, 0), 0.75);
        assert_eq!(b.get(1, 2), 0.0);

        let a = SparseRows::from_rows(vec![vec![(1, 1.0)], vec![(0, 1.0)]]).unwrap();
        assert_eq!(symmetrize(&a).unwrap().get(0, 1), 1.0);
    }

    #[test]
    fn symmetrize_rejects_out_of_range() {
        let a = SparseRows::from_rows(vec![vec![(1, 1.5)], vec![]]).unwrap();
        assert!(matches!(
            symmetrize(&a),
            Err(RpcaError::WeightOutOfRange { row: 0, col: 1, .. })
        ));
    }

    #[test]
    fn graph_has_unit_edge_per_row() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let values = Array2::from_shape_fn((40, 3), |_| rng.random_range(-1.0..1.0));
        let x = DataMatrix::from_array(values).unwrap();
        let g = build_graph(&x, &GraphParams::new(6)).unwrap();
        assert!(g.weights.nnz() <= 40 * 6);
        for i in 0..40 {
            let max = g.weights.row(i).iter().map(|e| e.1).fold(0.0, f64::max);
            assert_eq!(max, 1.0);
            assert!(g.weights.row(i).iter().all(|&(_, w)| w > 0.0 && w <= 1.0));
        }
    }

    #[test]
    fn all_duplicate_rows_get_unit_weights() {
        let x = DataMatrix::from_array(array![[1.0], [1.0], [1.0], [4.0]]).unwrap();
        let g = build_graph(&x, &GraphParams::new(2)).unwrap();
        assert!(g.degenerate[0]);
        assert_eq!(g.rho[0], 0.0);
        assert_eq!(g.sigma[0], 1.0);
        assert!(g.weights.row(0).iter().all(|&(_, w)| w == 1.0));
    }

    #[test]
    fn coordinate_dump_is_sorted() {
        let a =
            SparseRows::from_rows(vec![vec![(2, 0.25), (1, 1.0)], vec![], vec![(0, 0.5)]]).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("a.txt");
        write_coordinate_text(a.triplets(), &path).unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, "0 1 1.0\n0 2 0.25\n2 0 0.5\n");
    }
}
