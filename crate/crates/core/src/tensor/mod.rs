//! Dense r-matrices (hypermatrices) and their multilinear forms.
//!
//! A [`DenseHypermatrix`] of order `r` and dims `n_1 × … × n_r` stores its
//! entries in a flat row-major array (last index fastest). Axes are 0-based
//! throughout the library; the CLI and the file formats it documents use
//! 1-based axis and vertex numbers.

mod json;
pub mod random;
mod symmetry;

pub use symmetry::{symmetrize_pair, DEFAULT_SYMMETRY_TOL};
pub(crate) use symmetry::permutations;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct DenseHypermatrix {
    dims: Vec<usize>,
    entries: Vec<f64>,
    nonnegative: bool,
}

impl DenseHypermatrix {
    pub fn new(dims: Vec<usize>, entries: Vec<f64>) -> Result<Self> {
        if dims.len() < 2 {
            return Err(Error::InvalidTensor(format!(
                "order must be at least 2, got {}",
                dims.len()
            )));
        }
        if let Some(axis) = dims.iter().position(|&n| n == 0) {
            return Err(Error::InvalidTensor(format!("dimension {} is zero", axis + 1)));
        }
        let len = checked_len(&dims)?;
        if entries.len() != len {
            return Err(Error::InvalidTensor(format!(
                "expected {len} entries for dims {dims:?}, got {}",
                entries.len()
            )));
        }
        if let Some(pos) = entries.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidTensor(format!(
                "entry {pos} is not finite ({})",
                entries[pos]
            )));
        }
        Ok(Self { dims, entries, nonnegative: false })
    }

    /// Like [`new`](Self::new), but also sets the nonnegative flag after
    /// checking every entry.
    pub fn new_nonnegative(dims: Vec<usize>, entries: Vec<f64>) -> Result<Self> {
        Self::new(dims, entries)?.with_nonnegative_flag()
    }

    pub fn with_nonnegative_flag(mut self) -> Result<Self> {
        if let Some(pos) = self.entries.iter().position(|&v| v < 0.0) {
            return Err(Error::InvalidTensor(format!(
                "flagged nonnegative but entry {pos} is {}",
                self.entries[pos]
            )));
        }
        self.nonnegative = true;
        Ok(self)
    }

    pub fn zeros(dims: Vec<usize>) -> Result<Self> {
        let len = checked_len(&dims)?;
        Self::new_nonnegative(dims, vec![0.0; len])
    }

    pub fn ones(dims: Vec<usize>) -> Result<Self> {
        let len = checked_len(&dims)?;
        Self::new_nonnegative(dims, vec![1.0; len])
    }

    /// Order-`r` tensor with ones on the main diagonal `a_{i,…,i}`.
    pub fn diagonal(n: usize, order: usize) -> Result<Self> {
        let mut t = Self::zeros(vec![n; order])?;
        let step: usize = t.strides().iter().sum();
        for i in 0..n {
            t.entries[i * step] = 1.0;
        }
        Ok(t)
    }

    /// 2-matrix from its rows.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidTensor("ragged rows".into()));
        }
        Self::new(vec![m, n], rows.concat())
    }

    pub fn order(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// The declared (and validated) nonnegative flag.
    pub fn nonnegative_flag(&self) -> bool {
        self.nonnegative
    }

    /// Scans the entries; true iff none is negative.
    pub fn is_nonnegative(&self) -> bool {
        self.nonnegative || self.entries.iter().all(|&v| v >= 0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0.0)
    }

    pub fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1; self.dims.len()];
        for m in (0..self.dims.len() - 1).rev() {
            strides[m] = strides[m + 1] * self.dims[m + 1];
        }
        strides
    }

    pub fn get(&self, index: &[usize]) -> Option<f64> {
        if index.len() != self.dims.len() || index.iter().zip(&self.dims).any(|(&i, &n)| i >= n) {
            return None;
        }
        Some(self.entries[self.flat_index(index)])
    }

    pub(crate) fn flat_index(&self, index: &[usize]) -> usize {
        let mut flat = 0;
        for (i, n) in index.iter().zip(&self.dims) {
            flat = flat * n + i;
        }
        flat
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()))
    }

    pub fn check_compatible<V: AsRef<[f64]>>(&self, vectors: &[V]) -> Result<()> {
        if vectors.len() != self.order() {
            return Err(Error::IncompatibleShape(format!(
                "{} vectors supplied for an order-{} tensor",
                vectors.len(),
                self.order()
            )));
        }
        for (m, (v, &n)) in vectors.iter().zip(&self.dims).enumerate() {
            if v.as_ref().len() != n {
                return Err(Error::IncompatibleShape(format!(
                    "vector {} has length {}, axis has dimension {n}",
                    m + 1,
                    v.as_ref().len()
                )));
            }
        }
        Ok(())
    }

    /// Visits every fibre along the last axis in row-major order, passing the
    /// multi-index of the leading axes and the fibre's entries.
    pub(crate) fn for_each_row(&self, mut visit: impl FnMut(&[usize], &[f64])) {
        let lead = &self.dims[..self.dims.len() - 1];
        let width = self.dims[self.dims.len() - 1];
        let mut idx = vec![0usize; lead.len()];
        for row in self.entries.chunks_exact(width) {
            visit(&idx, row);
            for m in (0..lead.len()).rev() {
                idx[m] += 1;
                if idx[m] < lead[m] {
                    break;
                }
                idx[m] = 0;
            }
        }
    }

    /// `Σ a_{i_1…i_r} x^(1)_{i_1} ⋯ x^(r)_{i_r}`, summed in row-major order.
    pub fn linear_form<V: AsRef<[f64]>>(&self, vectors: &[V]) -> Result<f64> {
        self.check_compatible(vectors)?;
        Ok(self.linear_form_unchecked(vectors))
    }

    pub(crate) fn linear_form_unchecked<V: AsRef<[f64]>>(&self, vectors: &[V]) -> f64 {
        let r = self.order();
        let last = vectors[r - 1].as_ref();
        let mut total = 0.0;
        self.for_each_row(|idx, row| {
            let coef: f64 = idx.iter().enumerate().map(|(m, &i)| vectors[m].as_ref()[i]).product();
            total += coef * dot(row, last);
        });
        total
    }

    /// Gradient of the linear form with respect to the vector at `axis`:
    /// `g_i = Σ_{i_axis = i} a_{…} Π_{l ≠ axis} x^(l)_{i_l}`.
    pub fn partial_gradient<V: AsRef<[f64]>>(&self, vectors: &[V], axis: usize) -> Result<Vec<f64>> {
        if axis >= self.order() {
            return Err(Error::AxisOutOfRange { axis, order: self.order() });
        }
        self.check_compatible(vectors)?;
        let mut grad = vec![0.0; self.dims[axis]];
        self.partial_gradient_into(vectors, axis, &mut grad);
        Ok(grad)
    }

    pub(crate) fn partial_gradient_into<V: AsRef<[f64]>>(&self, vectors: &[V], axis: usize, grad: &mut [f64]) {
        let r = self.order();
        let last = vectors[r - 1].as_ref();
        grad.iter_mut().for_each(|g| *g = 0.0);
        self.for_each_row(|idx, row| {
            let coef: f64 = idx
                .iter()
                .enumerate()
                .filter(|&(m, _)| m != axis)
                .map(|(m, &i)| vectors[m].as_ref()[i])
                .product();
            if axis == r - 1 {
                for (g, a) in grad.iter_mut().zip(row) {
                    *g += coef * a;
                }
            } else {
                grad[idx[axis]] += coef * dot(row, last);
            }
        });
    }

    /// Contracts every axis except `j` and `k` against the supplied vectors,
    /// giving the `n_j × n_k` matrix `B` with `L_B(x^(j), x^(k)) = L_A(x)`.
    /// The vectors at positions `j` and `k` are ignored.
    pub fn contract_to_matrix<V: AsRef<[f64]>>(&self, vectors: &[V], j: usize, k: usize) -> Result<DenseHypermatrix> {
        let r = self.order();
        if j == k {
            return Err(Error::InvalidPair { j, k, reason: "axes must differ".into() });
        }
        for axis in [j, k] {
            if axis >= r {
                return Err(Error::AxisOutOfRange { axis, order: r });
            }
        }
        if vectors.len() != r {
            return Err(Error::IncompatibleShape(format!(
                "{} vectors supplied for an order-{r} tensor",
                vectors.len()
            )));
        }
        for (m, v) in vectors.iter().enumerate() {
            if m != j && m != k && v.as_ref().len() != self.dims[m] {
                return Err(Error::IncompatibleShape(format!(
                    "vector {} has length {}, axis has dimension {}",
                    m + 1,
                    v.as_ref().len(),
                    self.dims[m]
                )));
            }
        }
        let (nj, nk) = (self.dims[j], self.dims[k]);
        let mut b = vec![0.0; nj * nk];
        let last_fixed = j != r - 1 && k != r - 1;
        let mut full = vec![0usize; r];
        self.for_each_row(|idx, row| {
            full[..r - 1].copy_from_slice(idx);
            let coef: f64 = idx
                .iter()
                .enumerate()
                .filter(|&(m, _)| m != j && m != k)
                .map(|(m, &i)| vectors[m].as_ref()[i])
                .product();
            for (i, a) in row.iter().enumerate() {
                full[r - 1] = i;
                let w = if last_fixed { coef * vectors[r - 1].as_ref()[i] } else { coef };
                b[full[j] * nk + full[k]] += a * w;
            }
        });
        let fixed_nonneg = vectors
            .iter()
            .enumerate()
            .filter(|&(m, _)| m != j && m != k)
            .all(|(_, v)| v.as_ref().iter().all(|&x| x >= 0.0));
        let out = DenseHypermatrix::new(vec![nj, nk], b)?;
        if self.is_nonnegative() && fixed_nonneg {
            out.with_nonnegative_flag()
        } else {
            Ok(out)
        }
    }

    /// Slice-sums along the first axis: `S_i = Σ a_{i, i_2, …, i_r}`.
    pub fn slice_sums(&self) -> Vec<f64> {
        self.slice_sums_along(0).expect("axis 0 always exists")
    }

    /// Slice-sums along an arbitrary axis.
    pub fn slice_sums_along(&self, axis: usize) -> Result<Vec<f64>> {
        if axis >= self.order() {
            return Err(Error::AxisOutOfRange { axis, order: self.order() });
        }
        let r = self.order();
        let mut sums = vec![0.0; self.dims[axis]];
        self.for_each_row(|idx, row| {
            if axis == r - 1 {
                for (s, a) in sums.iter_mut().zip(row) {
                    *s += a;
                }
            } else {
                sums[idx[axis]] += row.iter().sum::<f64>();
            }
        });
        Ok(sums)
    }

    /// Multiplies every entry by `s_{i_j} s_{i_k}`. Requires a
    /// `(j,k)`-symmetric tensor and a `±1` vector of length `n_j`.
    pub fn sign_transform(&self, j: usize, k: usize, signs: &[f64]) -> Result<DenseHypermatrix> {
        self.check_pair(j, k)?;
        if signs.len() != self.dims[j] {
            return Err(Error::IncompatibleShape(format!(
                "sign vector has length {}, axis has dimension {}",
                signs.len(),
                self.dims[j]
            )));
        }
        if let Some(bad) = signs.iter().find(|&&s| s != 1.0 && s != -1.0) {
            return Err(Error::InvalidArgument(format!("sign entry {bad} is not ±1")));
        }
        if !self.is_jk_symmetric(j, k, DEFAULT_SYMMETRY_TOL) {
            return Err(Error::NotSymmetric(format!(
                "not ({}, {})-symmetric",
                j + 1,
                k + 1
            )));
        }
        let (sj, sk) = (self.strides()[j], self.strides()[k]);
        let (nj, nk) = (self.dims[j], self.dims[k]);
        let entries = self
            .entries
            .iter()
            .enumerate()
            .map(|(flat, a)| a * signs[(flat / sj) % nj] * signs[(flat / sk) % nk])
            .collect();
        let out = DenseHypermatrix::new(self.dims.clone(), entries)?;
        if out.entries.iter().all(|&v| v >= 0.0) {
            out.with_nonnegative_flag()
        } else {
            Ok(out)
        }
    }

    pub(crate) fn check_pair(&self, j: usize, k: usize) -> Result<()> {
        let r = self.order();
        for axis in [j, k] {
            if axis >= r {
                return Err(Error::AxisOutOfRange { axis, order: r });
            }
        }
        if j == k {
            return Err(Error::InvalidPair { j, k, reason: "axes must differ".into() });
        }
        if self.dims[j] != self.dims[k] {
            return Err(Error::InvalidPair {
                j,
                k,
                reason: format!("dimensions differ ({} vs {})", self.dims[j], self.dims[k]),
            });
        }
        Ok(())
    }
}

fn checked_len(dims: &[usize]) -> Result<usize> {
    dims.iter()
        .try_fold(1usize, |acc, &n| acc.checked_mul(n))
        .ok_or_else(|| Error::InvalidTensor(format!("dims {dims:?} overflow")))
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// The `l^p` norm, computed with max-abs scaling.
pub fn lp_norm(x: &[f64], p: f64) -> f64 {
    let scale = x.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()));
    if scale == 0.0 {
        return 0.0;
    }
    let sum: f64 = x.iter().map(|v| (v.abs() / scale).powf(p)).sum();
    scale * sum.powf(1.0 / p)
}

/// Rescales `x` to unit `l^p` norm. Returns `None` for the zero vector.
pub fn normalize_lp(x: &[f64], p: f64) -> Option<Vec<f64>> {
    let norm = lp_norm(x, p);
    (norm > 0.0).then(|| x.iter().map(|v| v / norm).collect())
}

/// The argument vectors `x^(1), …, x^(r)` of a linear form, with the
/// exponent `p` of the norm they are measured in.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorTuple {
    pub vectors: Vec<Vec<f64>>,
    pub p: f64,
}

impl VectorTuple {
    pub fn new(vectors: Vec<Vec<f64>>, p: f64) -> Result<Self> {
        if !(p >= 1.0) || !p.is_finite() {
            return Err(Error::InvalidArgument(format!("p must be a finite real ≥ 1, got {p}")));
        }
        Ok(Self { vectors, p })
    }

    /// Every vector equal to the uniform unit vector `n^{-1/p}(1,…,1)`.
    pub fn uniform(dims: &[usize], p: f64) -> Result<Self> {
        let vectors = dims.iter().map(|&n| vec![(n as f64).powf(-1.0 / p); n]).collect();
        Self::new(vectors, p)
    }

    pub fn order(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_feasible(&self, tol: f64) -> bool {
        self.vectors.iter().all(|v| (lp_norm(v, self.p) - 1.0).abs() <= tol)
    }
}

impl AsRef<[Vec<f64>]> for VectorTuple {
    fn as_ref(&self) -> &[Vec<f64>] {
        &self.vectors
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const H: f64 = std::f64::consts::FRAC_1_SQRT_2;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
    }

    #[test]
    fn construction_validates() {
        assert!(DenseHypermatrix::new(vec![2], vec![1.0, 2.0]).is_err());
        assert!(DenseHypermatrix::new(vec![2, 2], vec![1.0; 3]).is_err());
        assert!(DenseHypermatrix::new(vec![2, 0], vec![]).is_err());
        assert!(DenseHypermatrix::new(vec![1, 2], vec![1.0, f64::NAN]).is_err());
        assert!(DenseHypermatrix::new_nonnegative(vec![1, 2], vec![1.0, -1.0]).is_err());
        assert!(DenseHypermatrix::new_nonnegative(vec![1, 2], vec![1.0, 0.0]).is_ok());
    }

    #[test]
    fn linear_form_examples() {
        let ones = DenseHypermatrix::ones(vec![2, 2]).unwrap();
        assert!(close(ones.linear_form(&[[H, H], [H, H]]).unwrap(), 2.0, 1e-15));

        let eye = DenseHypermatrix::diagonal(2, 2).unwrap();
        assert_eq!(eye.linear_form(&[[1.0, 0.0], [0.0, 1.0]]).unwrap(), 0.0);

        let cube = DenseHypermatrix::ones(vec![2, 2, 2]).unwrap();
        let v = [H, H];
        assert!(close(cube.linear_form(&[v, v, v]).unwrap(), 2.0 * 2f64.sqrt(), 1e-15));
    }

    #[test]
    fn linear_form_rejects_mismatch() {
        let eye = DenseHypermatrix::diagonal(2, 2).unwrap();
        assert!(matches!(
            eye.linear_form(&[vec![1.0, 0.0], vec![1.0]]),
            Err(Error::IncompatibleShape(_))
        ));
        assert!(matches!(eye.linear_form(&[vec![1.0, 0.0]]), Err(Error::IncompatibleShape(_))));
    }

    #[test]
    fn partial_gradient_examples() {
        let ones = DenseHypermatrix::ones(vec![2, 2]).unwrap();
        let g = ones.partial_gradient(&[[H, H], [H, H]], 0).unwrap();
        assert!(close(g[0], 2f64.sqrt(), 1e-15) && close(g[1], 2f64.sqrt(), 1e-15));

        let eye = DenseHypermatrix::diagonal(3, 2).unwrap();
        let g = eye.partial_gradient(&[[0.3, 0.1, 0.2], [0.0, 1.0, 0.0]], 0).unwrap();
        assert_eq!(g, vec![0.0, 1.0, 0.0]);

        assert!(matches!(
            eye.partial_gradient(&[[0.0; 3], [0.0; 3]], 2),
            Err(Error::AxisOutOfRange { .. })
        ));
    }

    #[test]
    fn contraction_examples() {
        let a = DenseHypermatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let b = a.contract_to_matrix(&[vec![], vec![]], 0, 1).unwrap();
        assert_eq!(b.entries(), a.entries());

        let cube = DenseHypermatrix::ones(vec![2, 2, 2]).unwrap();
        let b = cube.contract_to_matrix(&[vec![H, H], vec![], vec![]], 1, 2).unwrap();
        assert_eq!(b.dims(), &[2, 2]);
        for &v in b.entries() {
            assert!(close(v, 2f64.sqrt(), 1e-15));
        }
        assert!(b.nonnegative_flag());

        assert!(matches!(
            cube.contract_to_matrix(&[vec![H, H], vec![], vec![]], 1, 1),
            Err(Error::InvalidPair { .. })
        ));
    }

    #[test]
    fn slice_sum_examples() {
        assert_eq!(DenseHypermatrix::ones(vec![2, 2, 2]).unwrap().slice_sums(), vec![4.0, 4.0]);
        assert_eq!(DenseHypermatrix::diagonal(3, 2).unwrap().slice_sums(), vec![1.0, 1.0, 1.0]);
        let a = DenseHypermatrix::from_rows(&[vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        assert_eq!(a.slice_sums(), vec![3.0, 7.0]);
        assert_eq!(a.slice_sums_along(1).unwrap(), vec![4.0, 6.0]);
    }

    #[test]
    fn sign_transform_examples() {
        let ones = DenseHypermatrix::ones(vec![2, 2]).unwrap();
        assert_eq!(ones.sign_transform(0, 1, &[1.0, 1.0]).unwrap().entries(), ones.entries());
        let b = ones.sign_transform(0, 1, &[1.0, -1.0]).unwrap();
        assert_eq!(b.entries(), &[1.0, -1.0, -1.0, 1.0]);
        assert!(!b.nonnegative_flag());

        assert!(matches!(ones.sign_transform(0, 1, &[1.0, 0.5]), Err(Error::InvalidArgument(_))));
        assert!(matches!(ones.sign_transform(0, 1, &[1.0]), Err(Error::IncompatibleShape(_))));
        let skew = DenseHypermatrix::from_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(skew.sign_transform(0, 1, &[1.0, -1.0]), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn diagonal_tensor() {
        let d = DenseHypermatrix::diagonal(3, 3).unwrap();
        assert_eq!(d.entries().iter().sum::<f64>(), 3.0);
        assert_eq!(d.get(&[2, 2, 2]), Some(1.0));
        assert_eq!(d.get(&[2, 1, 2]), Some(0.0));
        assert_eq!(d.get(&[3, 0, 0]), None);
    }

    #[test]
    fn lp_norm_basics() {
        assert!(close(lp_norm(&[3.0, 4.0], 2.0), 5.0, 1e-15));
        assert!(close(lp_norm(&[1.0, -1.0], 1.0), 2.0, 1e-15));
        assert_eq!(lp_norm(&[0.0, 0.0], 3.0), 0.0);
        assert!(normalize_lp(&[0.0], 2.0).is_none());
        let u = VectorTuple::uniform(&[2, 3], 3.0).unwrap();
        assert!(u.is_feasible(1e-14));
    }
}
