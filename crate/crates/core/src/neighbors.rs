//! Exact k-nearest-neighbor tables over covariates.
//!
//! Brute force is intentional: datasets here stay within ~10^4 rows, where
//! O(n^2 p) is fast, exact and trivially deterministic (ties break toward
//! the smaller index). Distances can be computed on standardized columns so
//! heterogeneous units do not dominate.

use alloc::vec;
use alloc::vec::Vec;

use crate::numeric::{fx, stats};
use crate::{Error, Matrix, Result};

/// Distance kinds for neighbor search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Distance {
    #[default]
    Euclidean,
    Manhattan,
    Chebyshev,
    Canberra,
}

impl Distance {
    pub fn eval(&self, a: &[f64], b: &[f64]) -> f64 {
        match self {
            Distance::Euclidean => fx::sqrt(
                a.iter()
                    .zip(b)
                    .map(|(&x, &y)| (x - y) * (x - y))
                    .sum::<f64>(),
            ),
            Distance::Manhattan => a.iter().zip(b).map(|(&x, &y)| (x - y).abs()).sum(),
            Distance::Chebyshev => a
                .iter()
                .zip(b)
                .map(|(&x, &y)| (x - y).abs())
                .fold(0.0, f64::max),
            Distance::Canberra => a
                .iter()
                .zip(b)
                .map(|(&x, &y)| {
                    let denom = x.abs() + y.abs();
                    if denom == 0.0 {
                        0.0
                    } else {
                        (x - y).abs() / denom
                    }
                })
                .sum(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Distance::Euclidean => "euclidean",
            Distance::Manhattan => "manhattan",
            Distance::Chebyshev => "chebyshev",
            Distance::Canberra => "canberra",
        }
    }
}

/// Per-row nearest neighbors (self excluded), distances ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborTable {
    pub k: usize,
    /// indices[i][l] = index of the (l+1)-th nearest neighbor of row i.
    pub indices: Vec<Vec<usize>>,
    /// distances[i][l] = distance to that neighbor, row-wise non-decreasing.
    pub distances: Vec<Vec<f64>>,
}

/// Center and scale each column by its sample standard deviation; constant
/// columns are left unscaled (divisor 1).
pub fn standardize_columns(x: &Matrix) -> Matrix {
    let mut out = x.clone();
    for j in 0..x.n_cols() {
        let col = x.column(j);
        let m = stats::mean(&col);
        let sd = stats::std_dev(&col);
        let scale = if sd > 0.0 { sd } else { 1.0 };
        for i in 0..x.n_rows() {
            out.set(i, j, (x.get(i, j) - m) / scale);
        }
    }
    out
}

/// Exact k-nearest-neighbor table for the rows of `x`.
pub fn knn(x: &Matrix, k: usize, distance: Distance, standardize: bool) -> Result<NeighborTable> {
    let n = x.n_rows();
    if n < 2 {
        return Err(Error::SampleTooSmall { need: 2, got: n });
    }
    if k == 0 || k >= n {
        return Err(Error::InvalidK { k, n });
    }
    let data = if standardize { standardize_columns(x) } else { x.clone() };
    let mut indices = Vec::with_capacity(n);
    let mut distances = Vec::with_capacity(n);
    let mut scratch: Vec<(f64, usize)> = Vec::with_capacity(n - 1);
    for i in 0..n {
        scratch.clear();
        let row_i = data.row(i);
        for j in 0..n {
            if j != i {
                scratch.push((distance.eval(row_i, data.row(j)), j));
            }
        }
        let cmp = |a: &(f64, usize), b: &(f64, usize)| {
            a.0.total_cmp(&b.0).then_with(|| a.1.cmp(&b.1))
        };
        scratch.select_nth_unstable_by(k - 1, cmp);
        scratch[..k].sort_unstable_by(cmp);
        indices.push(scratch[..k].iter().map(|&(_, j)| j).collect());
        distances.push(scratch[..k].iter().map(|&(d, _)| d).collect());
    }
    Ok(NeighborTable { k, indices, distances })
}
