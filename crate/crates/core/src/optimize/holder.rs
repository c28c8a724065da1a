use crate::error::{Error, Result};
use crate::tensor::lp_norm;

/// The unit `l^p` vector maximizing `⟨g, x⟩`.
///
/// For `p > 1` this is `x_i ∝ sign(g_i)|g_i|^{1/(p-1)}`, and the attained value
/// is the dual norm `|g|_q`, `q = p/(p-1)`. For `p = 1` all mass goes to the
/// first coordinate of largest magnitude.
pub fn holder_dual_step(g: &[f64], p: f64) -> Result<Vec<f64>> {
    if !(p >= 1.0) || !p.is_finite() {
        return Err(Error::InvalidArgument(format!("p must be a finite real ≥ 1, got {p}")));
    }
    let scale = g.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()));
    if !(scale > 0.0) {
        return Err(Error::DegenerateGradient);
    }
    if p == 1.0 {
        let i = g.iter().position(|v| v.abs() == scale).expect("max exists");
        let mut x = vec![0.0; g.len()];
        x[i] = g[i].signum();
        return Ok(x);
    }
    let e = 1.0 / (p - 1.0);
    let w: Vec<f64> = g.iter().map(|v| v.signum() * (v.abs() / scale).powf(e)).collect();
    let norm = lp_norm(&w, p);
    Ok(w.into_iter().map(|v| if v == 0.0 { 0.0 } else { v / norm }).collect())
}

/// `|g|_q` with `q = p/(p-1)`; the max norm when `p = 1`.
pub fn dual_norm(g: &[f64], p: f64) -> f64 {
    if p == 1.0 {
        g.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()))
    } else {
        lp_norm(g, p / (p - 1.0))
    }
}
