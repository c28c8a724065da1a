//! r-uniform hypergraphs, their edge-list format and adjacency tensors.
//!
//! Edge-list text format:
//!
//! ```text
//! # comment
//! n=4 r=3
//! 1 2 3
//! 1 2 4
//! ```
//!
//! Vertices are 1-based. The adjacency tensor has `a_{i_1,…,i_r} = 1` for
//! every ordering of every edge and 0 elsewhere, with no `1/(r-1)!`
//! normalization, so its slice-sums are `(r-1)!·d_i`.

use std::collections::BTreeSet;

use rand::Rng;

use crate::error::{Error, Result};
use crate::tensor::DenseHypermatrix;

/// Largest adjacency tensor (in entries) `adjacency_tensor` will allocate.
pub const DENSE_ENTRY_CAP: usize = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniformHypergraph {
    n: usize,
    r: usize,
    /// Edges as sorted 0-based vertex lists.
    edges: BTreeSet<Vec<usize>>,
}

impl UniformHypergraph {
    pub fn empty(n: usize, r: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidArgument(format!("uniformity must be at least 2, got {r}")));
        }
        if n == 0 {
            return Err(Error::InvalidArgument("vertex count must be positive".into()));
        }
        Ok(Self { n, r, edges: BTreeSet::new() })
    }

    /// Builds a hypergraph from 1-based edges.
    pub fn from_edges(n: usize, r: usize, edges: &[Vec<usize>]) -> Result<Self> {
        let mut g = Self::empty(n, r)?;
        for (i, e) in edges.iter().enumerate() {
            g.add_edge(e).map_err(|message| Error::Parse { line: i + 1, message })?;
        }
        Ok(g)
    }

    /// The complete r-uniform hypergraph on `n` vertices.
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        let mut g = Self::empty(n, r)?;
        let mut combo: Vec<usize> = (0..r).collect();
        if r > n {
            return Ok(g);
        }
        loop {
            g.edges.insert(combo.clone());
            let Some(i) = (0..r).rev().find(|&i| combo[i] < n - r + i) else {
                break;
            };
            combo[i] += 1;
            for t in i + 1..r {
                combo[t] = combo[t - 1] + 1;
            }
        }
        Ok(g)
    }

    /// Each r-subset becomes an edge independently with probability `prob`.
    pub fn random<R: Rng + ?Sized>(n: usize, r: usize, prob: f64, rng: &mut R) -> Result<Self> {
        if !(0.0..=1.0).contains(&prob) {
            return Err(Error::InvalidArgument(format!("edge probability {prob} outside [0, 1]")));
        }
        let complete = Self::complete(n, r)?;
        let edges = complete.edges.into_iter().filter(|_| rng.gen::<f64>() < prob).collect();
        Ok(Self { n, r, edges })
    }

    fn add_edge(&mut self, edge: &[usize]) -> std::result::Result<(), String> {
        if edge.len() != self.r {
            return Err(format!("edge has {} vertices, expected {}", edge.len(), self.r));
        }
        if let Some(&v) = edge.iter().find(|&&v| v == 0 || v > self.n) {
            return Err(format!("vertex {v} out of range 1..={}", self.n));
        }
        let mut sorted: Vec<usize> = edge.iter().map(|v| v - 1).collect();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(format!("vertex {} repeated in edge", w[0] + 1));
        }
        if !self.edges.insert(sorted) {
            return Err("duplicate edge".into());
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn uniformity(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted 1-based vertex lists.
    pub fn edges(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        self.edges.iter().map(|e| e.iter().map(|v| v + 1).collect())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    pub fn adjacency_tensor(&self) -> Result<DenseHypermatrix> {
        let len = (0..self.r).try_fold(1usize, |acc, _| acc.checked_mul(self.n));
        let len = match len {
            Some(len) if len <= DENSE_ENTRY_CAP => len,
            _ => {
                return Err(Error::InvalidArgument(format!(
                    "adjacency tensor with {}^{} entries exceeds the dense cap of {DENSE_ENTRY_CAP}",
                    self.n, self.r
                )))
            }
        };
        let mut entries = vec![0.0; len];
        let perms = crate::tensor::permutations(self.r);
        for e in &self.edges {
            for perm in &perms {
                let flat = perm.iter().fold(0, |acc, &i| acc * self.n + e[i]);
                entries[flat] = 1.0;
            }
        }
        DenseHypermatrix::new_nonnegative(vec![self.n; self.r], entries)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n={} r={}\n", self.n, self.r);
        for e in self.edges() {
            let line: Vec<String> = e.iter().map(ToString::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Parses the edge-list format described in the module docs. Errors carry the
/// 1-based line number of the offending line.
pub fn parse_edge_list(text: &str) -> Result<UniformHypergraph> {
    let mut graph: Option<UniformHypergraph> = None;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse { line: line_no, message };
        match graph.as_mut() {
            None => {
                let (mut n, mut r) = (None, None);
                for field in line.split_whitespace() {
                    let (key, value) = field
                        .split_once('=')
                        .ok_or_else(|| parse_err(format!("expected `n=<int> r=<int>`, found `{field}`")))?;
                    let value: usize =
                        value.parse().map_err(|_| parse_err(format!("`{value}` is not a non-negative integer")))?;
                    match key {
                        "n" => n = Some(value),
                        "r" => r = Some(value),
                        _ => return Err(parse_err(format!("unknown header key `{key}`"))),
                    }
                }
                let (Some(n), Some(r)) = (n, r) else {
                    return Err(parse_err("header must give both n and r".into()));
                };
                graph = Some(UniformHypergraph::empty(n, r).map_err(|e| parse_err(e.to_string()))?);
            }
            Some(g) => {
                let edge = line
                    .split_whitespace()
                    .map(|tok| tok.parse::<usize>().map_err(|_| parse_err(format!("`{tok}` is not a vertex number"))))
                    .collect::<Result<Vec<_>>>()?;
                g.add_edge(&edge).map_err(parse_err)?;
            }
        }
    }
    graph.ok_or(Error::Parse { line: 1, message: "missing `n=<int> r=<int>` header".into() })
}
