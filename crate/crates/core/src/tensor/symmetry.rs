use super::{lp_norm, DenseHypermatrix};
use crate::error::{Error, Result};

/// Absolute tolerance used by symmetry checks unless the caller overrides it.
pub const DEFAULT_SYMMETRY_TOL: f64 = 1e-12;

impl DenseHypermatrix {
    /// True iff `n_j == n_k` and swapping indices `j` and `k` changes no
    /// entry by more than `tol`. Returns false for invalid or equal axes.
    pub fn is_jk_symmetric(&self, j: usize, k: usize, tol: f64) -> bool {
        if self.check_pair(j, k).is_err() {
            return false;
        }
        let strides = self.strides();
        let (sj, sk, n) = (strides[j], strides[k], self.dims[j]);
        self.entries.iter().enumerate().all(|(flat, &a)| {
            let (ij, ik) = ((flat / sj) % n, (flat / sk) % n);
            if ij >= ik {
                return true;
            }
            let swapped = flat + ik * sj + ij * sk - ij * sj - ik * sk;
            (a - self.entries[swapped]).abs() <= tol
        })
    }

    /// `(j,k)`-symmetric for every pair of axes.
    pub fn is_symmetric(&self, tol: f64) -> bool {
        let r = self.order();
        (0..r).all(|j| (j + 1..r).all(|k| self.is_jk_symmetric(j, k, tol)))
    }

    /// The tensor with axes `j` and `k` exchanged.
    pub fn swap_axes(&self, j: usize, k: usize) -> Result<DenseHypermatrix> {
        let r = self.order();
        for axis in [j, k] {
            if axis >= r {
                return Err(Error::AxisOutOfRange { axis, order: r });
            }
        }
        let mut dims = self.dims.clone();
        dims.swap(j, k);
        let src_strides = self.strides();
        let mut idx = vec![0usize; r];
        let mut entries = Vec::with_capacity(self.entries.len());
        for _ in 0..self.entries.len() {
            // idx enumerates the output row-major; map back by swapping j and k
            let mut src = 0;
            for m in 0..r {
                let sm = if m == j { k } else if m == k { j } else { m };
                src += idx[m] * src_strides[sm];
            }
            entries.push(self.entries[src]);
            for m in (0..r).rev() {
                idx[m] += 1;
                if idx[m] < dims[m] {
                    break;
                }
                idx[m] = 0;
            }
        }
        let out = DenseHypermatrix::new(dims, entries)?;
        Ok(DenseHypermatrix { nonnegative: self.nonnegative, ..out })
    }

    /// `(A + A^{(j k)}) / 2`, exactly `(j,k)`-symmetric.
    pub fn jk_symmetrized(&self, j: usize, k: usize) -> Result<DenseHypermatrix> {
        self.check_pair(j, k)?;
        let swapped = self.swap_axes(j, k)?;
        let entries = self.entries.iter().zip(&swapped.entries).map(|(a, b)| 0.5 * (a + b)).collect();
        let out = DenseHypermatrix::new(self.dims.clone(), entries)?;
        Ok(DenseHypermatrix { nonnegative: self.nonnegative, ..out })
    }

    /// Average over all `r!` axis permutations. Every orbit of indices gets the
    /// same stored value, so the result is exactly symmetric.
    pub fn symmetrized(&self) -> Result<DenseHypermatrix> {
        let n = self.dims[0];
        if self.dims.iter().any(|&d| d != n) {
            return Err(Error::InvalidTensor(format!(
                "cannot symmetrize a tensor with unequal dims {:?}",
                self.dims
            )));
        }
        let r = self.order();
        let perms = permutations(r);
        let mut out = vec![0.0; self.entries.len()];
        let mut idx = vec![0usize; r];
        let mut permuted = vec![0usize; r];
        for _ in 0..self.entries.len() {
            if idx.windows(2).all(|w| w[0] <= w[1]) {
                let mean = perms
                    .iter()
                    .map(|perm| {
                        for (slot, &src) in permuted.iter_mut().zip(perm) {
                            *slot = idx[src];
                        }
                        self.entries[self.flat_index(&permuted)]
                    })
                    .sum::<f64>()
                    / perms.len() as f64;
                for perm in &perms {
                    for (slot, &src) in permuted.iter_mut().zip(perm) {
                        *slot = idx[src];
                    }
                    out[self.flat_index(&permuted)] = mean;
                }
            }
            for m in (0..r).rev() {
                idx[m] += 1;
                if idx[m] < n {
                    break;
                }
                idx[m] = 0;
            }
        }
        let t = DenseHypermatrix::new(self.dims.clone(), out)?;
        Ok(DenseHypermatrix { nonnegative: self.nonnegative, ..t })
    }
}

pub(crate) fn permutations(r: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                extend(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(r), &mut vec![false; r], &mut out);
    out
}

/// Merges two nonnegative unit vectors into `z_i = ((x_i^p + y_i^p)/2)^{1/p}`.
///
/// For `p ≥ 2`, `z` is again a unit vector and `z_i z_j ≥ (x_i y_j + x_j y_i)/2`
/// for all `i, j`, so for a symmetric nonnegative matrix `B` the value
/// `L_B(z, z)` dominates `L_B(x, y)`.
pub fn symmetrize_pair(x: &[f64], y: &[f64], p: f64) -> Result<Vec<f64>> {
    if x.len() != y.len() {
        return Err(Error::IncompatibleShape(format!(
            "vectors have lengths {} and {}",
            x.len(),
            y.len()
        )));
    }
    if !(p >= 2.0) || !p.is_finite() {
        return Err(Error::HypothesisViolation(format!("symmetrization needs p ≥ 2, got {p}")));
    }
    if let Some(v) = x.iter().chain(y).find(|&&v| !(v >= 0.0)) {
        return Err(Error::InvalidArgument(format!("entry {v} is negative")));
    }
    for v in [x, y] {
        let norm = lp_norm(v, p);
        if (norm - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidArgument(format!("vector has p-norm {norm}, expected 1")));
        }
    }
    Ok(x.iter()
        .zip(y)
        .map(|(a, b)| (0.5 * (a.powf(p) + b.powf(p))).powf(1.0 / p))
        .collect())
}
