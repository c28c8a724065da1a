//! Seeded random tensor generators used by tests, the verification suites
//! and `hypernorm gen`.

use rand::Rng;

use super::DenseHypermatrix;
use crate::error::Result;

/// Entries uniform in `[0, 1)`.
pub fn nonnegative<R: Rng + ?Sized>(dims: Vec<usize>, rng: &mut R) -> Result<DenseHypermatrix> {
    let len = dims.iter().product();
    let entries = (0..len).map(|_| rng.gen::<f64>()).collect();
    DenseHypermatrix::new_nonnegative(dims, entries)
}

/// Entries uniform in `[-1, 1)`.
pub fn signed<R: Rng + ?Sized>(dims: Vec<usize>, rng: &mut R) -> Result<DenseHypermatrix> {
    let len = dims.iter().product();
    let entries = (0..len).map(|_| rng.gen_range(-1.0..1.0)).collect();
    DenseHypermatrix::new(dims, entries)
}

pub fn symmetric_nonnegative<R: Rng + ?Sized>(n: usize, order: usize, rng: &mut R) -> Result<DenseHypermatrix> {
    nonnegative(vec![n; order], rng)?.symmetrized()
}

pub fn symmetric_signed<R: Rng + ?Sized>(n: usize, order: usize, rng: &mut R) -> Result<DenseHypermatrix> {
    signed(vec![n; order], rng)?.symmetrized()
}

/// `(j,k)`-symmetric tensor; nonnegative or signed entries.
pub fn jk_symmetric<R: Rng + ?Sized>(
    dims: Vec<usize>,
    j: usize,
    k: usize,
    nonneg: bool,
    rng: &mut R,
) -> Result<DenseHypermatrix> {
    let base = if nonneg { nonnegative(dims, rng)? } else { signed(dims, rng)? };
    base.jk_symmetrized(j, k)
}

/// Random `±1` vector.
pub fn signs<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    (0..n).map(|_| if rng.gen::<bool>() { 1.0 } else { -1.0 }).collect()
}
