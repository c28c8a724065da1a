//! p-norms and p-spectral radii of dense hypermatrices.
//!
//! * [`tensor`]: dense r-matrices, multilinear forms, contractions and
//!   symmetry tools.
//! * [`optimize`]: block-coordinate Hölder-dual ascent for `‖A‖_p` and
//!   `ρ^(p)(A)`, with optional equality constraints between positions.
//! * [`oracle`]: brute-force verifiers independent of the ascent.
//! * [`bounds`]: slice-sum and degree lower bounds on `ρ^(p)`.
//! * [`hypergraph`]: r-uniform hypergraphs and their adjacency tensors.
//! * [`cli`]: the `hypernorm` command line.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod hypergraph;
pub mod optimize;
pub mod oracle;
pub mod tensor;
pub mod verify;

pub use error::{Error, Result};
pub use optimize::{maximize_pnorm, p_spectral_radius, AscentConfig, AscentResult, EqualityConstraint};
pub use tensor::{DenseHypermatrix, VectorTuple};
