//! Closed-form lower bounds on the p-spectral radius of symmetric
//! nonnegative tensors, from slice-sums or hypergraph degrees.

use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::tensor::{DenseHypermatrix, DEFAULT_SYMMETRY_TOL};

/// `n^{1-r/p} · ((1/n) Σ S_i^{p/(p-1)})^{(p-1)/p}` for symmetric nonnegative
/// `A` of order `n` and `p ≥ 2`.
pub fn slice_sum_lower_bound(a: &DenseHypermatrix, p: f64) -> Result<f64> {
    check_p(p)?;
    if !a.is_symmetric(DEFAULT_SYMMETRY_TOL) {
        return Err(Error::HypothesisViolation("the slice-sum bound needs a symmetric tensor".into()));
    }
    if !a.is_nonnegative() {
        return Err(Error::HypothesisViolation("the slice-sum bound needs a nonnegative tensor".into()));
    }
    Ok(power_mean_bound(&a.slice_sums(), a.order(), p))
}

/// `(r-1)! · n^{1-r/p} · ((1/n) Σ d_i^{p/(p-1)})^{(p-1)/p}`.
pub fn degree_lower_bound(g: &UniformHypergraph, p: f64) -> Result<f64> {
    check_p(p)?;
    let factorial: f64 = (1..g.uniformity()).map(|k| k as f64).product();
    let degrees: Vec<f64> = g.degrees().iter().map(|&d| d as f64).collect();
    Ok(factorial * power_mean_bound(&degrees, g.uniformity(), p))
}

fn check_p(p: f64) -> Result<()> {
    if !(p >= 2.0) || !p.is_finite() {
        return Err(Error::HypothesisViolation(format!("the bound holds for finite p ≥ 2, got {p}")));
    }
    Ok(())
}

fn power_mean_bound(sums: &[f64], order: usize, p: f64) -> f64 {
    let n = sums.len() as f64;
    let s = p / (p - 1.0);
    let mean = sums.iter().map(|v| v.powf(s)).sum::<f64>() / n;
    n.powf(1.0 - order as f64 / p) * mean.powf(1.0 / s)
}
