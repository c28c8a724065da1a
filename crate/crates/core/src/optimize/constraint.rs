use crate::error::{Error, Result};

/// A partition of the axes `{0, …, r-1}`; the vectors at positions in one
/// group are forced to be identical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityConstraint {
    groups: Vec<Vec<usize>>,
}

impl EqualityConstraint {
    pub fn new(mut groups: Vec<Vec<usize>>, order: usize) -> Result<Self> {
        let mut seen = vec![false; order];
        for group in &mut groups {
            if group.is_empty() {
                return Err(Error::InvalidArgument("empty constraint group".into()));
            }
            group.sort_unstable();
            for &m in group.iter() {
                if m >= order {
                    return Err(Error::AxisOutOfRange { axis: m, order });
                }
                if std::mem::replace(&mut seen[m], true) {
                    return Err(Error::InvalidArgument(format!("axis {} appears in two groups", m + 1)));
                }
            }
        }
        if let Some(m) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidArgument(format!("axis {} is not covered", m + 1)));
        }
        groups.sort_unstable_by_key(|g| g[0]);
        Ok(Self { groups })
    }

    /// Every vector free.
    pub fn free(order: usize) -> Self {
        Self { groups: (0..order).map(|m| vec![m]).collect() }
    }

    /// One vector shared by every position: `L_A(x, …, x)`.
    pub fn all_equal(order: usize) -> Self {
        Self { groups: vec![(0..order).collect()] }
    }

    /// `x^(j) = x^(k)`, all other vectors free.
    pub fn pair(order: usize, j: usize, k: usize) -> Result<Self> {
        if j == k {
            return Err(Error::InvalidPair { j, k, reason: "axes must differ".into() });
        }
        let mut groups: Vec<Vec<usize>> = (0..order).filter(|&m| m != k).map(|m| vec![m]).collect();
        let g = groups
            .iter_mut()
            .find(|g| g[0] == j)
            .ok_or(Error::AxisOutOfRange { axis: j, order })?;
        g.push(k);
        Self::new(groups, order)
    }

    pub fn groups(&self) -> &[Vec<usize>] {
        &self.groups
    }

    pub fn order(&self) -> usize {
        self.groups.iter().map(Vec::len).sum()
    }

    pub fn is_free(&self) -> bool {
        self.groups.iter().all(|g| g.len() == 1)
    }

    pub fn validate_for(&self, dims: &[usize]) -> Result<()> {
        if self.order() != dims.len() {
            return Err(Error::IncompatibleShape(format!(
                "constraint covers {} axes, tensor has {}",
                self.order(),
                dims.len()
            )));
        }
        for group in &self.groups {
            let n = dims[group[0]];
            if let Some(&m) = group.iter().find(|&&m| dims[m] != n) {
                return Err(Error::InvalidPair {
                    j: group[0],
                    k: m,
                    reason: format!("tied axes have dimensions {n} and {}", dims[m]),
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors() {
        assert_eq!(EqualityConstraint::free(3).groups(), &[vec![0], vec![1], vec![2]]);
        assert_eq!(EqualityConstraint::all_equal(3).groups(), &[vec![0, 1, 2]]);
        assert_eq!(EqualityConstraint::pair(3, 2, 1).unwrap().groups(), &[vec![0], vec![1, 2]]);
        assert!(EqualityConstraint::pair(3, 1, 1).is_err());
        assert!(EqualityConstraint::pair(3, 1, 4).is_err());
    }

    #[test]
    fn partition_is_validated() {
        assert!(EqualityConstraint::new(vec![vec![0, 1]], 3).is_err());
        assert!(EqualityConstraint::new(vec![vec![0, 1], vec![1, 2]], 3).is_err());
        assert!(EqualityConstraint::new(vec![vec![0, 1], vec![]], 2).is_err());
        let c = EqualityConstraint::new(vec![vec![2, 0], vec![1]], 3).unwrap();
        assert_eq!(c.groups(), &[vec![0, 2], vec![1]]);
        assert!(c.validate_for(&[2, 3, 2]).is_ok());
        assert!(c.validate_for(&[2, 3, 3]).is_err());
        assert!(c.validate_for(&[2, 2]).is_err());
    }
}
