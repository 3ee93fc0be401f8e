//! Eigenvalue bound on the independence number, applied to the graph of
//! disjoint pairs so that it bounds the largest intersecting family.
//!
//! With adjacency eigenvalues `λ_max ≥ … ≥ λ_min` and minimum degree `δ`,
//! interlacing on the partition {S, V∖S} for an independent set S gives
//! `α ≤ n·(−λ_max·λ_min) / (δ² − λ_max·λ_min)`. On regular graphs this is the
//! ratio bound `n·(−λ_min)/(δ − λ_min)`, which is tight for Kneser graphs.

use nalgebra::DMatrix;

use super::bits::Bits;

/// Largest size the dense eigen-decomposition is attempted on.
pub(crate) const MAX_ORDER: usize = 1200;

/// Upper bound on the independence number of the complement of `adj`.
/// `None` when the graph is too large or the bound is vacuous.
pub(crate) fn complement_independence_bound(adj: &[Bits]) -> Option<usize> {
    let n = adj.len();
    if n < 2 || n > MAX_ORDER {
        return None;
    }
    let mut m = DMatrix::<f64>::zeros(n, n);
    let mut min_degree = usize::MAX;
    for i in 0..n {
        let mut deg = 0;
        for j in 0..n {
            if i != j && !adj[i].contains(j) {
                m[(i, j)] = 1.0;
                deg += 1;
            }
        }
        min_degree = min_degree.min(deg);
    }
    if min_degree == 0 {
        return None;
    }
    let eig = m.symmetric_eigenvalues();
    let lmax = eig.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let lmin = eig.iter().copied().fold(f64::INFINITY, f64::min);
    // inflate both magnitudes so rounding can only loosen the bound
    let slack = 1e-7 * (1.0 + lmax.abs());
    let product = (lmax + slack) * (-lmin + slack);
    let delta = min_degree as f64;
    let bound = n as f64 * product / (delta * delta + product);
    Some((bound + 1e-9).floor() as usize).filter(|&b| b < n)
}
