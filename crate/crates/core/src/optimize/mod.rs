//! Block-coordinate Hölder-dual ascent for `‖A‖_p` and `ρ^(p)(A)`.
//!
//! Each sweep visits the constraint groups in order. A group holding a single
//! position is replaced by the exact maximizer of the (linear) objective in
//! that block, [`holder_dual_step`] of its partial gradient. A group tying
//! several positions makes the objective a homogeneous polynomial in the
//! shared vector; there the Hölder step of the summed gradient is tried first,
//! then chord points back towards the current iterate, then shifted steps
//! `step(g + α·sign(u)|u|^{p-1})`. The first candidate that strictly improves
//! is kept, so every sweep is monotone.
//!
//! In signed mode the objective is `|L_A|`: even restarts maximize `L_A`, odd
//! restarts maximize `-L_A`. For `p ≠ 2` with signed tensors this is a
//! best-effort search.

mod constraint;
mod holder;

pub use constraint::EqualityConstraint;
pub use holder::{dual_norm, holder_dual_step};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::tensor::{normalize_lp, DenseHypermatrix, VectorTuple, DEFAULT_SYMMETRY_TOL};

const MAX_CHORD_HALVINGS: i32 = 30;
const MAX_SHIFT_DOUBLINGS: i32 = 30;
const MAX_REDRAWS: usize = 8;
const TIED_INNER_STEPS: usize = 16;
const MIN_MOMENTUM: f64 = 0.25;
const MAX_MOMENTUM: f64 = 64.0;

#[derive(Debug, Clone)]
pub struct AscentConfig {
    pub p: f64,
    pub max_sweeps: usize,
    /// Objective-stagnation threshold for one full sweep.
    pub tol: f64,
    pub restarts: usize,
    pub seed: u64,
    /// `None` leaves every vector free.
    pub constraint: Option<EqualityConstraint>,
    /// Restrict iterates to the nonnegative orthant (needs a nonnegative tensor).
    pub nonneg_mode: bool,
}

impl Default for AscentConfig {
    fn default() -> Self {
        Self {
            p: 2.0,
            max_sweeps: 500,
            tol: 1e-10,
            restarts: 20,
            seed: 0,
            constraint: None,
            nonneg_mode: false,
        }
    }
}

impl AscentConfig {
    pub fn with_p(p: f64) -> Self {
        Self { p, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.p >= 1.0) || !self.p.is_finite() {
            return Err(Error::InvalidArgument(format!("p must be a finite real ≥ 1, got {}", self.p)));
        }
        if self.max_sweeps == 0 || self.restarts == 0 {
            return Err(Error::InvalidArgument("max_sweeps and restarts must be at least 1".into()));
        }
        if !(self.tol > 0.0) {
            return Err(Error::InvalidArgument(format!("tol must be positive, got {}", self.tol)));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct AscentResult {
    /// Best `|L_A|` over all restarts, evaluated at `tuple`.
    pub value: f64,
    /// `L_A` at `tuple` (carries the sign the maximizer realizes).
    pub signed_value: f64,
    pub tuple: VectorTuple,
    pub sweeps_used: usize,
    pub converged: bool,
    pub kkt_residual: f64,
    /// `kkt_residual / value`, or the absolute residual when `value == 0`.
    pub kkt_residual_relative: f64,
    pub restart_values: Vec<f64>,
    pub best_restart: usize,
    /// Objective after every sweep of the best restart, starting with the
    /// initial point.
    pub trace: Vec<f64>,
    /// Largest decrease caused by any single block update in any restart
    /// (negative or zero when the ascent was monotone).
    pub worst_step_decrease: f64,
}

/// `‖A‖_p`, or the constrained maximum when `cfg.constraint` ties positions.
pub fn maximize_pnorm(a: &DenseHypermatrix, cfg: &AscentConfig) -> Result<AscentResult> {
    cfg.validate()?;
    let problem = Problem::new(a, cfg)?;
    if a.is_zero() {
        return Ok(zero_result(a, cfg));
    }
    let outcomes: Vec<Outcome> = (0..cfg.restarts)
        .into_par_iter()
        .map(|restart| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(restart as u64);
            let sign = if problem.nonneg || restart % 2 == 0 { 1.0 } else { -1.0 };
            let start = problem.random_start(&mut rng);
            problem.ascend(start, sign, cfg, &mut rng)
        })
        .collect();
    let (best_restart, _) = outcomes
        .iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |(bi, bv), (i, o)| if o.objective > bv { (i, o.objective) } else { (bi, bv) });
    let restart_values = outcomes.iter().map(|o| o.objective).collect();
    let worst_step_decrease = outcomes.iter().map(|o| o.worst_decrease).fold(f64::NEG_INFINITY, f64::max);
    let best = outcomes.into_iter().nth(best_restart).expect("at least one restart");
    Ok(problem.finish(best, best_restart, restart_values, worst_step_decrease))
}

/// Runs a single ascent from `start`, keeping its sign of `L_A`.
///
/// Positions tied by the constraint take the vector at the group's first
/// position.
pub fn maximize_from(a: &DenseHypermatrix, start: &VectorTuple, cfg: &AscentConfig) -> Result<AscentResult> {
    cfg.validate()?;
    let problem = Problem::new(a, cfg)?;
    a.check_compatible(&start.vectors)?;
    if a.is_zero() {
        return Ok(zero_result(a, cfg));
    }
    let mut groups = Vec::with_capacity(problem.groups.len());
    for group in &problem.groups {
        let v = normalize_lp(&start.vectors[group[0]], cfg.p)
            .ok_or_else(|| Error::InvalidArgument("start vector is zero".into()))?;
        if problem.nonneg && v.iter().any(|&x| x < 0.0) {
            return Err(Error::InvalidArgument("start vector leaves the nonnegative orthant".into()));
        }
        groups.push(v);
    }
    let l = a.linear_form_unchecked(&problem.expand(&groups));
    let sign = if problem.nonneg || l >= 0.0 { 1.0 } else { -1.0 };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let outcome = problem.ascend(groups, sign, cfg, &mut rng);
    let value = outcome.objective;
    let worst = outcome.worst_decrease;
    Ok(problem.finish(outcome, 0, vec![value], worst))
}

/// `ρ^(p)(A) = max_{|x|_p = 1} |L_A(x, …, x)|` for symmetric `A`.
pub fn p_spectral_radius(a: &DenseHypermatrix, cfg: &AscentConfig) -> Result<AscentResult> {
    if !a.is_symmetric(DEFAULT_SYMMETRY_TOL) {
        return Err(Error::NotSymmetric("the p-spectral radius needs a symmetric tensor".into()));
    }
    let cfg = AscentConfig { constraint: Some(EqualityConstraint::all_equal(a.order())), ..cfg.clone() };
    maximize_pnorm(a, &cfg)
}

/// Largest violation of the stationarity system `λ·sign(x_i)|x_i|^{p-1} = g_i`
/// over all positions, where `g` is the partial gradient at that position.
pub fn kkt_residual<V: AsRef<[f64]>>(a: &DenseHypermatrix, vectors: &[V], lambda: f64, p: f64) -> Result<f64> {
    a.check_compatible(vectors)?;
    let mut worst = 0.0_f64;
    for m in 0..a.order() {
        let g = a.partial_gradient(vectors, m)?;
        for (x, gi) in vectors[m].as_ref().iter().zip(&g) {
            let phi = if *x == 0.0 { 0.0 } else { x.signum() * x.abs().powf(p - 1.0) };
            worst = worst.max((lambda * phi - gi).abs());
        }
    }
    Ok(worst)
}

struct Problem<'a> {
    a: &'a DenseHypermatrix,
    groups: Vec<Vec<usize>>,
    p: f64,
    nonneg: bool,
}

struct Outcome {
    /// `sign · L_A` at `groups`.
    objective: f64,
    groups: Vec<Vec<f64>>,
    sweeps: usize,
    converged: bool,
    worst_decrease: f64,
    trace: Vec<f64>,
}

impl<'a> Problem<'a> {
    fn new(a: &'a DenseHypermatrix, cfg: &AscentConfig) -> Result<Self> {
        let constraint = cfg.constraint.clone().unwrap_or_else(|| EqualityConstraint::free(a.order()));
        constraint.validate_for(a.dims())?;
        if cfg.nonneg_mode && !a.is_nonnegative() {
            return Err(Error::HypothesisViolation("nonnegative mode needs a nonnegative tensor".into()));
        }
        Ok(Self { a, groups: constraint.groups().to_vec(), p: cfg.p, nonneg: cfg.nonneg_mode })
    }

    fn dim(&self, group: usize) -> usize {
        self.a.dims()[self.groups[group][0]]
    }

    fn random_unit<R: Rng>(&self, n: usize, rng: &mut R) -> Vec<f64> {
        loop {
            let v: Vec<f64> = (0..n)
                .map(|_| {
                    let z: f64 = rng.sample(StandardNormal);
                    if self.nonneg {
                        z.abs()
                    } else {
                        z
                    }
                })
                .collect();
            if let Some(u) = normalize_lp(&v, self.p) {
                return u;
            }
        }
    }

    fn random_start<R: Rng>(&self, rng: &mut R) -> Vec<Vec<f64>> {
        (0..self.groups.len()).map(|g| self.random_unit(self.dim(g), rng)).collect()
    }

    fn expand(&self, groups: &[Vec<f64>]) -> Vec<Vec<f64>> {
        let mut tuple = vec![Vec::new(); self.a.order()];
        for (group, v) in self.groups.iter().zip(groups) {
            for &m in group {
                tuple[m] = v.clone();
            }
        }
        tuple
    }

    fn set_group(&self, tuple: &mut [Vec<f64>], group: usize, v: &[f64]) {
        for &m in &self.groups[group] {
            tuple[m].copy_from_slice(v);
        }
    }

    fn ascend<R: Rng>(&self, groups: Vec<Vec<f64>>, sign: f64, cfg: &AscentConfig, rng: &mut R) -> Outcome {
        let mut tuple = self.expand(&groups);
        let mut current = groups;
        let mut f = sign * self.a.linear_form_unchecked(&tuple);
        let mut worst_decrease = f64::NEG_INFINITY;
        let mut trace = vec![f];
        let mut converged = false;
        let mut sweeps = 0;
        let mut buf = Vec::new();
        let mut beta = 1.0;
        while sweeps < cfg.max_sweeps {
            sweeps += 1;
            let sweep_start = f;
            let previous = current.clone();
            for gi in 0..self.groups.len() {
                let n = self.dim(gi);
                let tied = self.groups[gi].len() > 1;
                // A tied group's step is only a power-type step; repeat it so
                // the group is near its own optimum before moving on.
                for _ in 0..if tied { TIED_INNER_STEPS } else { 1 } {
                    let mut grad = vec![0.0; n];
                    for &m in &self.groups[gi] {
                        buf.resize(n, 0.0);
                        self.a.partial_gradient_into(&tuple, m, &mut buf);
                        for (g, b) in grad.iter_mut().zip(&buf) {
                            *g += sign * b;
                        }
                    }
                    let before = f;
                    if !tied {
                        let next = match holder_dual_step(&grad, self.p) {
                            Ok(x) => x,
                            Err(_) => {
                                // objective is 0 here; a redraw or its negation is never worse
                                let mut x = self.random_unit(n, rng);
                                self.set_group(&mut tuple, gi, &x);
                                if sign * self.a.linear_form_unchecked(&tuple) < 0.0 && !self.nonneg {
                                    x.iter_mut().for_each(|v| *v = -*v);
                                }
                                x
                            }
                        };
                        self.set_group(&mut tuple, gi, &next);
                        f = sign * self.a.linear_form_unchecked(&tuple);
                        current[gi] = next;
                        worst_decrease = worst_decrease.max(before - f);
                    } else if let Some((next, value)) =
                        self.improve_group(&mut tuple, gi, &current[gi], &grad, f, sign, rng)
                    {
                        current[gi] = next;
                        f = value;
                        worst_decrease = worst_decrease.max(before - f);
                        if f - before < cfg.tol {
                            break;
                        }
                    } else {
                        self.set_group(&mut tuple, gi, &current[gi]);
                        break;
                    }
                }
            }
            // Momentum along the last sweep's displacement, kept only if it
            // improves; this rescues the slow linear rate near tied spectra.
            if sweeps > 1 {
                if let Some(value) = self.extrapolate(&mut tuple, &mut current, &previous, beta, f, sign) {
                    f = value;
                    beta = (beta * 1.5).min(MAX_MOMENTUM);
                } else {
                    beta = (beta * 0.5).max(MIN_MOMENTUM);
                }
            }
            trace.push(f);
            if f - sweep_start < cfg.tol {
                converged = true;
                break;
            }
        }
        Outcome { objective: f, groups: current, sweeps, converged, worst_decrease, trace }
    }

    /// Tries `normalize(x + β(x - x_prev))` for every group at once. On
    /// success updates `tuple` and `current` and returns the new objective;
    /// otherwise restores `tuple`.
    fn extrapolate(
        &self,
        tuple: &mut [Vec<f64>],
        current: &mut [Vec<f64>],
        previous: &[Vec<f64>],
        beta: f64,
        f: f64,
        sign: f64,
    ) -> Option<f64> {
        let mut candidate = Vec::with_capacity(current.len());
        for (x, x0) in current.iter().zip(previous) {
            let mut y: Vec<f64> = x.iter().zip(x0).map(|(a, b)| a + beta * (a - b)).collect();
            if self.nonneg {
                y.iter_mut().for_each(|v| *v = v.max(0.0));
            }
            candidate.push(normalize_lp(&y, self.p)?);
        }
        for (gi, y) in candidate.iter().enumerate() {
            self.set_group(tuple, gi, y);
        }
        let value = sign * self.a.linear_form_unchecked(tuple);
        if value > f {
            current.clone_from_slice(&candidate);
            Some(value)
        } else {
            for (gi, x) in current.iter().enumerate() {
                self.set_group(tuple, gi, x);
            }
            None
        }
    }

    /// Searches for a strictly better vector for a tied group. Leaves `tuple`
    /// in an unspecified state for that group; the caller restores it.
    #[allow(clippy::too_many_arguments)]
    fn improve_group<R: Rng>(
        &self,
        tuple: &mut [Vec<f64>],
        gi: usize,
        u: &[f64],
        grad: &[f64],
        f: f64,
        sign: f64,
        rng: &mut R,
    ) -> Option<(Vec<f64>, f64)> {
        let try_candidate = |x: Vec<f64>, tuple: &mut [Vec<f64>]| {
            self.set_group(tuple, gi, &x);
            let value = sign * self.a.linear_form_unchecked(tuple);
            (value > f).then_some((x, value))
        };

        let Ok(step) = holder_dual_step(grad, self.p) else {
            for _ in 0..MAX_REDRAWS {
                let x = self.random_unit(u.len(), rng);
                self.set_group(tuple, gi, &x);
                let value = sign * self.a.linear_form_unchecked(tuple);
                if value >= f {
                    return Some((x, value));
                }
            }
            return None;
        };
        if let Some(hit) = try_candidate(step.clone(), tuple) {
            return Some(hit);
        }
        // No plain step: take the best of the chord and shifted candidates.
        let mut best: Option<(Vec<f64>, f64)> = None;
        let mut consider = |x: Vec<f64>, tuple: &mut [Vec<f64>]| {
            if let Some((x, value)) = try_candidate(x, tuple) {
                if best.as_ref().map_or(true, |b| value > b.1) {
                    best = Some((x, value));
                }
            }
        };
        for k in 1..=MAX_CHORD_HALVINGS {
            let t = 0.5_f64.powi(k);
            let mixed: Vec<f64> = u.iter().zip(&step).map(|(a, b)| (1.0 - t) * a + t * b).collect();
            if let Some(x) = normalize_lp(&mixed, self.p) {
                consider(x, tuple);
            }
        }
        let scale = dual_norm(grad, self.p);
        let phi: Vec<f64> = u
            .iter()
            .map(|&x| if x == 0.0 { 0.0 } else { x.signum() * x.abs().powf(self.p - 1.0) })
            .collect();
        for k in -2..=MAX_SHIFT_DOUBLINGS {
            let alpha = scale * 2f64.powi(k);
            let shifted: Vec<f64> = grad.iter().zip(&phi).map(|(g, v)| g + alpha * v).collect();
            if let Ok(x) = holder_dual_step(&shifted, self.p) {
                consider(x, tuple);
            }
        }
        best
    }

    fn finish(&self, best: Outcome, best_restart: usize, restart_values: Vec<f64>, worst: f64) -> AscentResult {
        let tuple = self.expand(&best.groups);
        let signed_value = self.a.linear_form_unchecked(&tuple);
        let value = signed_value.abs();
        let kkt = kkt_residual(self.a, &tuple, signed_value, self.p).expect("shapes already checked");
        AscentResult {
            value,
            signed_value,
            tuple: VectorTuple { vectors: tuple, p: self.p },
            sweeps_used: best.sweeps,
            converged: best.converged,
            kkt_residual: kkt,
            kkt_residual_relative: if value > 0.0 { kkt / value } else { kkt },
            restart_values,
            best_restart,
            trace: best.trace,
            worst_step_decrease: worst,
        }
    }
}

fn zero_result(a: &DenseHypermatrix, cfg: &AscentConfig) -> AscentResult {
    let tuple = VectorTuple::uniform(a.dims(), cfg.p).expect("p already validated");
    AscentResult {
        value: 0.0,
        signed_value: 0.0,
        tuple,
        sweeps_used: 0,
        converged: true,
        kkt_residual: 0.0,
        kkt_residual_relative: 0.0,
        restart_values: Vec::new(),
        best_restart: 0,
        trace: vec![0.0],
        worst_step_decrease: 0.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::{lp_norm, random};

    fn cfg(p: f64) -> AscentConfig {
        AscentConfig { seed: 11, ..AscentConfig::with_p(p) }
    }

    #[test]
    fn all_ones_matrix_closed_form() {
        let ones = DenseHypermatrix::ones(vec![2, 2]).unwrap();
        let r = maximize_pnorm(&ones, &cfg(4.0)).unwrap();
        assert!((r.value - 2f64.powf(1.5)).abs() < 1e-9, "{}", r.value);
        assert!(r.converged);
        for n in [3usize, 4] {
            for p in [1.0, 2.0, 3.0] {
                let ones = DenseHypermatrix::ones(vec![n, n]).unwrap();
                let r = maximize_pnorm(&ones, &cfg(p)).unwrap();
                let expected = (n as f64).powf(2.0 - 2.0 / p);
                assert!((r.value - expected).abs() < 1e-8 * expected, "n={n} p={p}: {}", r.value);
            }
        }
    }

    #[test]
    fn identity_matrix() {
        let eye = DenseHypermatrix::diagonal(2, 2).unwrap();
        assert!((maximize_pnorm(&eye, &cfg(2.0)).unwrap().value - 1.0).abs() < 1e-9);
        // the maximizer spreads mass evenly for p > 2
        assert!((maximize_pnorm(&eye, &cfg(4.0)).unwrap().value - 2f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn spectral_radius_examples() {
        let cube = DenseHypermatrix::ones(vec![2, 2, 2]).unwrap();
        assert!((p_spectral_radius(&cube, &cfg(3.0)).unwrap().value - 4.0).abs() < 1e-9);
        let swap = DenseHypermatrix::from_rows(&[vec![0.0, 1.0], vec![1.0, 0.0]]).unwrap();
        let r = p_spectral_radius(&swap, &cfg(2.0)).unwrap();
        assert!((r.value - 1.0).abs() < 1e-9, "{}", r.value);
        let skew = DenseHypermatrix::from_rows(&[vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        assert!(matches!(p_spectral_radius(&skew, &cfg(2.0)), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn zero_tensor_short_circuits() {
        let z = DenseHypermatrix::zeros(vec![2, 3]).unwrap();
        let r = maximize_pnorm(&z, &cfg(3.0)).unwrap();
        assert_eq!(r.value, 0.0);
        assert!(r.converged);
        assert!(r.tuple.is_feasible(1e-12));
    }

    #[test]
    fn config_validation() {
        let eye = DenseHypermatrix::diagonal(2, 2).unwrap();
        assert!(maximize_pnorm(&eye, &cfg(0.5)).is_err());
        assert!(maximize_pnorm(&eye, &AscentConfig { restarts: 0, ..cfg(2.0) }).is_err());
        assert!(maximize_pnorm(&eye, &AscentConfig { tol: 0.0, ..cfg(2.0) }).is_err());
        let signed = DenseHypermatrix::from_rows(&[vec![1.0, -1.0], vec![0.0, 1.0]]).unwrap();
        assert!(matches!(
            maximize_pnorm(&signed, &AscentConfig { nonneg_mode: true, ..cfg(2.0) }),
            Err(Error::HypothesisViolation(_))
        ));
    }

    #[test]
    fn kkt_examples() {
        let ones = DenseHypermatrix::ones(vec![2, 2]).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!(kkt_residual(&ones, &[[h, h], [h, h]], 2.0, 2.0).unwrap() < 1e-15);
        assert_eq!(kkt_residual(&ones, &[[1.0, 0.0], [1.0, 0.0]], 1.0, 2.0).unwrap(), 1.0);
    }

    #[test]
    fn converged_results_are_stationary_and_consistent() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..10 {
            let a = random::nonnegative(vec![3, 2, 3], &mut rng).unwrap();
            let r = maximize_pnorm(&a, &AscentConfig { nonneg_mode: true, ..cfg(3.0) }).unwrap();
            assert!(r.converged);
            assert!(r.kkt_residual <= 1e-6 * r.value, "kkt {} value {}", r.kkt_residual, r.value);
            assert!(r.tuple.is_feasible(1e-12));
            for m in 0..3 {
                let g = a.partial_gradient(&r.tuple.vectors, m).unwrap();
                let inner: f64 = g.iter().zip(&r.tuple.vectors[m]).map(|(x, y)| x * y).sum();
                assert!((inner - r.signed_value).abs() <= 1e-12 * r.value);
            }
            assert!(r.worst_step_decrease <= 1e-12);
            assert!(r.trace.windows(2).all(|w| w[1] >= w[0] - 1e-12));
        }
    }

    #[test]
    fn constrained_never_beats_free() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for p in [1.5, 2.0, 3.0] {
            let a = random::signed(vec![2, 3, 3], &mut rng).unwrap();
            let free = maximize_pnorm(&a, &cfg(p)).unwrap();
            let tied = maximize_pnorm(
                &a,
                &AscentConfig { constraint: Some(EqualityConstraint::pair(3, 1, 2).unwrap()), ..cfg(p) },
            )
            .unwrap();
            assert!(tied.value <= free.value + 1e-9);
            assert_eq!(tied.tuple.vectors[1], tied.tuple.vectors[2]);
            assert!((lp_norm(&tied.tuple.vectors[1], p) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn same_seed_same_answer() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let a = random::signed(vec![3, 3, 3], &mut rng).unwrap().symmetrized().unwrap();
        let c = AscentConfig { restarts: 8, ..cfg(2.5) };
        let r1 = p_spectral_radius(&a, &c).unwrap();
        let r2 = p_spectral_radius(&a, &c).unwrap();
        assert_eq!(r1.value.to_bits(), r2.value.to_bits());
        assert_eq!(r1.restart_values, r2.restart_values);
    }

    #[test]
    fn maximize_from_polishes_a_start() {
        let ones = DenseHypermatrix::ones(vec![3, 3]).unwrap();
        let start = VectorTuple::new(vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]], 2.0).unwrap();
        let r = maximize_from(&ones, &start, &cfg(2.0)).unwrap();
        assert!((r.value - 3.0).abs() < 1e-9);
        assert_eq!(r.restart_values.len(), 1);
    }
}
