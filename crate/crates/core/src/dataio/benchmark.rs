//! Ten-column synthetic benchmark: five planar clusters in `x, y` (two
//! nested circle pairs and a parabolic arc underneath) plus eight
//! independent standard-normal columns.
//!
//! Randomness comes from ChaCha8 seeded with `seed_from_u64`; normal draws
//! use the ziggurat sampler of `rand_distr::StandardNormal`. Rows are emitted
//! cluster by cluster and every row consumes its draws in column order, so
//! the output depends only on `(seed, n)`.

use std::f64::consts::TAU;

use ndarray::Array2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::{DataMatrix, LabeledDataset};
use crate::error::{Result, RpcaError};

pub const BENCHMARK_DEFAULT_N: usize = 2900;
pub const BENCHMARK_COLUMNS: [&str; 10] = [
    "x", "y", "var1", "var2", "var3", "var4", "var5", "var6", "var7", "var8",
];

const CLUSTERS: usize = 5;
const OUTER_RADIUS: f64 = 4.0;
const INNER_RADIUS: f64 = 1.5;
const RIGHT_OFFSET: f64 = 12.0;
const JITTER_SD: f64 = 0.25;
const PARABOLA_X: (f64, f64) = (-2.0, 14.0);

#[derive(Clone, Copy)]
enum Shape {
    Circle { cx: f64, radius: f64 },
    Parabola,
}

// Cluster ids are 1-based: 2 sits inside 1, 3 sits inside 4.
const SHAPES: [Shape; CLUSTERS] = [
    Shape::Circle {
        cx: 0.0,
        radius: OUTER_RADIUS,
    },
    Shape::Circle {
        cx: 0.0,
        radius: INNER_RADIUS,
    },
    Shape::Circle {
        cx: RIGHT_OFFSET,
        radius: INNER_RADIUS,
    },
    Shape::Circle {
        cx: RIGHT_OFFSET,
        radius: OUTER_RADIUS,
    },
    Shape::Parabola,
];

fn parabola(x: f64) -> f64 {
    0.15 * (x - 6.0).powi(2) - 14.0
}

/// Generates the benchmark table. Cluster sizes are `n / 5`, with any
/// remainder going one row each to the lowest-numbered clusters.
pub fn generate_benchmark(seed: u64, n: usize) -> Result<LabeledDataset> {
    if n < CLUSTERS {
        return Err(RpcaError::InvalidParam(format!(
            "benchmark needs at least {CLUSTERS} rows, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut values = Array2::<f64>::zeros((n, BENCHMARK_COLUMNS.len()));
    let mut labels = Vec::with_capacity(n);

    let base = n / CLUSTERS;
    let extra = n % CLUSTERS;
    let mut row = 0;
    for (c, shape) in SHAPES.iter().enumerate() {
        let size = base + usize::from(c < extra);
        for _ in 0..size {
            let (x, y) = match *shape {
                Shape::Circle { cx, radius } => {
                    let theta = rng.random_range(0.0..TAU);
                    (cx + radius * theta.cos(), radius * theta.sin())
                }
                Shape::Parabola => {
                    let x = rng.random_range(PARABOLA_X.0..PARABOLA_X.1);
                    (x, parabola(x))
                }
            };
            let jx: f64 = rng.sample(StandardNormal);
            let jy: f64 = rng.sample(StandardNormal);
            values[[row, 0]] = x + JITTER_SD * jx;
            values[[row, 1]] = y + JITTER_SD * jy;
            for j in 2..BENCHMARK_COLUMNS.len() {
                values[[row, j]] = rng.sample(StandardNormal);
            }
            labels.push(c as i64 + 1);
            row += 1;
        }
    }

    let row_ids = (0..n).map(|i| i.to_string()).collect();
    let col_names = BENCHMARK_COLUMNS.iter().map(|s| s.to_string()).collect();
    LabeledDataset::new(DataMatrix::new(values, row_ids, col_names)?, Some(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::Axis;

    #[test]
    fn shape_and_labels() {
        let ds = generate_benchmark(7, 2900).unwrap();
        assert_eq!(ds.data.values().dim(), (2900, 10));
        let labels = ds.labels.unwrap();
        let mut distinct = labels.clone();
        distinct.sort_unstable();
        distinct.dedup();
        assert_eq!(distinct, vec![1, 2, 3, 4, 5]);
        for c in 1..=5 {
            assert_eq!(labels.iter().filter(|&&l| l == c).count(), 580);
        }
    }

    #[test]
    fn noise_columns_are_standard_normal() {
        let ds = generate_benchmark(7, 2900).unwrap();
        let v = ds.data.values();
        for j in 2..10 {
            let col = v.index_axis(Axis(1), j);
            let mean = col.mean().unwrap();
            let sd = col.std(0.0);
            assert!(mean.abs() < 0.1, "column {j} mean {mean}");
            assert!((sd - 1.0).abs() < 0.1, "column {j} sd {sd}");
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let a = generate_benchmark(11, 500).unwrap();
        let b = generate_benchmark(11, 500).unwrap();
        let c = generate_benchmark(12, 500).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.data.values(), c.data.values());
    }

    #[test]
    fn small_n_splits_evenly() {
        let ds = generate_benchmark(1, 50).unwrap();
        let labels = ds.labels.unwrap();
        for c in 1..=5 {
            assert_eq!(labels.iter().filter(|&&l| l == c).count(), 10);
        }
        assert!(generate_benchmark(1, 4).is_err());
    }

    #[test]
    fn clusters_keep_their_geometry() {
        let ds = generate_benchmark(3, 1000).unwrap();
        let v = ds.data.values();
        let labels = ds.labels.unwrap();
        for (i, &l) in labels.iter().enumerate() {
            let (x, y) = (v[[i, 0]], v[[i, 1]]);
            let r_left = x.hypot(y);
            let r_right = (x - RIGHT_OFFSET).hypot(y);
            match l {
                1 => assert!((r_left - OUTER_RADIUS).abs() < 1.5),
                2 => assert!((r_left - INNER_RADIUS).abs() < 1.5),
                3 => assert!((r_right - INNER_RADIUS).abs() < 1.5),
                4 => assert!((r_right - OUTER_RADIUS).abs() < 1.5),
                5 => assert!(y < -3.0),
                _ => unreachable!(),
            }
        }
    }
}
