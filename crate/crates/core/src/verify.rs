//! Seeded randomized suites that check the symmetry theorems on small
//! instances, one diagnostic record per case.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::optimize::{maximize_pnorm, AscentConfig, EqualityConstraint};
use crate::oracle::{exact_2norm_2matrix, find_counterexample, Counterexample};
use crate::tensor::{lp_norm, normalize_lp, random, symmetrize_pair};

/// Agreement demanded between constrained and unconstrained optima.
pub const AGREEMENT_TOL: f64 = 1e-6;
/// Slack allowed in the pointwise symmetrization inequality.
pub const DOMINANCE_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// Symmetric nonnegative 2-matrices, `p ≥ 2`: `‖A‖_p = max L_A(x, x)`.
    Th2p,
    /// `(j,k)`-symmetric signed r-matrices at `p = 2`.
    Thr2,
    /// `(j,k)`-symmetric nonnegative r-matrices, `p ≥ 2`.
    Thrp,
    /// Pointwise `L_B(x, y) ≤ L_B(z, z)` for the merged vector `z`.
    Symmetrization,
    /// `‖DAD‖_p = ‖A‖_p` for a `±1` diagonal `D`.
    SignFlip,
    /// The equality fails without the hypotheses.
    Counterexample,
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "th2p" => Theorem::Th2p,
            "thr2" => Theorem::Thr2,
            "thrp" => Theorem::Thrp,
            "symmetrization" => Theorem::Symmetrization,
            "sign-flip" => Theorem::SignFlip,
            "counterexample" => Theorem::Counterexample,
            other => {
                return Err(Error::InvalidArgument(format!(
                    "unknown theorem `{other}` (expected th2p, thr2, thrp, symmetrization, sign-flip, counterexample)"
                )))
            }
        })
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Theorem::Th2p => "th2p",
            Theorem::Thr2 => "thr2",
            Theorem::Thrp => "thrp",
            Theorem::Symmetrization => "symmetrization",
            Theorem::SignFlip => "sign-flip",
            Theorem::Counterexample => "counterexample",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteParams {
    pub r: usize,
    pub n: usize,
    pub p: f64,
    pub cases: usize,
    pub seed: u64,
    pub restarts: usize,
}

impl Default for SuiteParams {
    fn default() -> Self {
        Self { r: 3, n: 3, p: 2.0, cases: 20, seed: 0, restarts: 20 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub case: usize,
    pub pass: bool,
    /// The larger side (unconstrained optimum, dominating value, …).
    pub reference: f64,
    /// The side compared against it.
    pub candidate: f64,
    pub difference: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub theorem: String,
    pub params: SuiteParams,
    pub passed: usize,
    pub total: usize,
    pub cases: Vec<CaseReport>,
    #[serde(skip)]
    pub witness: Option<Counterexample>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total
    }
}

pub fn run(theorem: Theorem, params: &SuiteParams) -> Result<SuiteReport> {
    check_hypotheses(theorem, params)?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut witness = None;
    let cases = match theorem {
        Theorem::Counterexample => {
            let found = find_counterexample(params.p, params.cases.max(1), params.n, params.seed)?;
            let case = match &found {
                Some(w) => CaseReport {
                    case: w.trial,
                    pass: true,
                    reference: w.unconstrained,
                    candidate: w.constrained,
                    difference: w.gap,
                    tolerance: crate::oracle::COUNTEREXAMPLE_GAP,
                },
                None => CaseReport {
                    case: params.cases,
                    pass: false,
                    reference: f64::NAN,
                    candidate: f64::NAN,
                    difference: 0.0,
                    tolerance: crate::oracle::COUNTEREXAMPLE_GAP,
                },
            };
            witness = found;
            vec![case]
        }
        _ => (0..params.cases)
            .map(|case| run_case(theorem, params, case, &mut rng))
            .collect::<Result<Vec<_>>>()?,
    };
    let passed = cases.iter().filter(|c| c.pass).count();
    Ok(SuiteReport { theorem: theorem.to_string(), params: params.clone(), passed, total: cases.len(), cases, witness })
}

fn check_hypotheses(theorem: Theorem, params: &SuiteParams) -> Result<()> {
    if params.n == 0 || params.r < 2 {
        return Err(Error::InvalidArgument("need n ≥ 1 and r ≥ 2".into()));
    }
    match theorem {
        Theorem::Th2p | Theorem::Thrp | Theorem::Symmetrization if !(params.p >= 2.0) => Err(
            Error::HypothesisViolation(format!("{theorem} needs p ≥ 2, got {}", params.p)),
        ),
        Theorem::Thr2 if params.p != 2.0 => {
            Err(Error::HypothesisViolation(format!("thr2 is a statement about p = 2, got {}", params.p)))
        }
        Theorem::SignFlip if !(params.p >= 1.0) => {
            Err(Error::InvalidArgument(format!("p must be at least 1, got {}", params.p)))
        }
        _ => Ok(()),
    }
}

fn ascent(p: f64, restarts: usize, seed: u64, nonneg: bool, constraint: Option<EqualityConstraint>) -> AscentConfig {
    AscentConfig { restarts, seed, nonneg_mode: nonneg, constraint, ..AscentConfig::with_p(p) }
}

fn compare(case: usize, reference: f64, candidate: f64, tolerance: f64) -> CaseReport {
    let difference = reference - candidate;
    CaseReport { case, pass: difference.abs() <= tolerance, reference, candidate, difference, tolerance }
}

fn run_case(theorem: Theorem, params: &SuiteParams, case: usize, rng: &mut ChaCha8Rng) -> Result<CaseReport> {
    let SuiteParams { r, n, p, restarts, .. } = *params;
    let seed = params.seed.wrapping_add(case as u64);
    match theorem {
        Theorem::Th2p => {
            let a = random::symmetric_nonnegative(n, 2, rng)?;
            let free = maximize_pnorm(&a, &ascent(p, restarts, seed, true, None))?;
            let tied = maximize_pnorm(&a, &ascent(p, restarts, seed, true, Some(EqualityConstraint::all_equal(2))))?;
            Ok(compare(case, free.value, tied.value, AGREEMENT_TOL))
        }
        Theorem::Thr2 | Theorem::Thrp => {
            let nonneg = theorem == Theorem::Thrp;
            let dims = vec![n; r];
            let a = random::jk_symmetric(dims, r - 2, r - 1, nonneg, rng)?;
            let pair = EqualityConstraint::pair(r, r - 2, r - 1)?;
            let free = maximize_pnorm(&a, &ascent(p, restarts, seed, nonneg, None))?;
            let tied = maximize_pnorm(&a, &ascent(p, restarts, seed, nonneg, Some(pair)))?;
            let mut report = compare(case, free.value, tied.value, AGREEMENT_TOL);
            if theorem == Theorem::Thr2 {
                // contract the maximizer down to its last two slots; σ_max must reproduce the value
                let b = a.contract_to_matrix(&free.tuple.vectors, r - 2, r - 1)?;
                let sigma = exact_2norm_2matrix(&b)?;
                report.pass &= (sigma - free.value).abs() <= AGREEMENT_TOL;
            }
            Ok(report)
        }
        Theorem::Symmetrization => {
            let b = random::symmetric_nonnegative(n, 2, rng)?;
            let x = random_nonneg_unit(n, p, rng);
            let y = random_nonneg_unit(n, p, rng);
            let z = symmetrize_pair(&x, &y, p)?;
            let lhs = b.linear_form(&[&x, &y])?;
            let rhs = b.linear_form(&[&z, &z])?;
            let unit = (lp_norm(&z, p) - 1.0).abs() <= DOMINANCE_SLACK;
            Ok(CaseReport {
                case,
                pass: lhs <= rhs + DOMINANCE_SLACK && unit,
                reference: rhs,
                candidate: lhs,
                difference: rhs - lhs,
                tolerance: DOMINANCE_SLACK,
            })
        }
        Theorem::SignFlip => {
            let a = random::symmetric_nonnegative(n, 2, rng)?;
            let s = random::signs(n, rng);
            let b = a.sign_transform(0, 1, &s)?;
            let na = maximize_pnorm(&a, &ascent(p, restarts, seed, false, None))?;
            let nb = maximize_pnorm(&b, &ascent(p, restarts, seed, false, None))?;
            Ok(compare(case, na.value, nb.value, AGREEMENT_TOL))
        }
        Theorem::Counterexample => unreachable!("handled by run"),
    }
}

/// Standard-normal magnitudes rescaled to unit `l^p` norm.
pub fn random_nonneg_unit<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Vec<f64> {
    loop {
        let v: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(StandardNormal).abs()).collect();
        if let Some(u) = normalize_lp(&v, p) {
            return u;
        }
    }
}
