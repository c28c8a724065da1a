use hypernorm::optimize::{dual_norm, holder_dual_step};
use hypernorm::tensor::{lp_norm, normalize_lp, random, symmetrize_pair};
use hypernorm::{maximize_pnorm, AscentConfig, DenseHypermatrix, EqualityConstraint};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

fn vectors(dims: &[usize], rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    use rand::Rng;
    dims.iter().map(|&n| (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()).collect()
}

fn dims_strategy() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1usize..=4, 2..=4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn linear_form_is_multilinear(dims in dims_strategy(), seed in any::<u64>(), c in -3.0f64..3.0, axis in 0usize..4) {
        let axis = axis % dims.len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random::signed(dims.clone(), &mut rng).unwrap();
        let xs = vectors(&dims, &mut rng);
        let w = vectors(&dims, &mut rng).swap_remove(axis);
        let mut combo = xs.clone();
        combo[axis] = xs[axis].iter().zip(&w).map(|(x, w)| c * x + w).collect();
        let mut other = xs.clone();
        other[axis] = w;
        let lhs = a.linear_form(&combo).unwrap();
        let rhs = c * a.linear_form(&xs).unwrap() + a.linear_form(&other).unwrap();
        prop_assert!(close(lhs, rhs, 1e-12));
    }

    #[test]
    fn gradient_reproduces_the_form(dims in dims_strategy(), seed in any::<u64>(), axis in 0usize..4) {
        let axis = axis % dims.len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random::signed(dims.clone(), &mut rng).unwrap();
        let xs = vectors(&dims, &mut rng);
        let g = a.partial_gradient(&xs, axis).unwrap();
        let via_grad: f64 = g.iter().zip(&xs[axis]).map(|(g, x)| g * x).sum();
        prop_assert!(close(via_grad, a.linear_form(&xs).unwrap(), 1e-12));
    }

    #[test]
    fn contraction_matches_the_form(dims in prop::collection::vec(1usize..=3, 3..=4), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random::signed(dims.clone(), &mut rng).unwrap();
        let xs = vectors(&dims, &mut rng);
        let (j, k) = (0, dims.len() - 1);
        let b = a.contract_to_matrix(&xs, j, k).unwrap();
        let via_matrix = b.linear_form(&[&xs[j], &xs[k]]).unwrap();
        prop_assert!(close(via_matrix, a.linear_form(&xs).unwrap(), 1e-12));
    }

    #[test]
    fn symmetrized_pair_dominates(n in 1usize..=5, p in 2.0f64..6.0, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = random::symmetric_nonnegative(n, 2, &mut rng).unwrap();
        let x = hypernorm::verify::random_nonneg_unit(n, p, &mut rng);
        let y = hypernorm::verify::random_nonneg_unit(n, p, &mut rng);
        let z = symmetrize_pair(&x, &y, p).unwrap();
        prop_assert!((lp_norm(&z, p) - 1.0).abs() <= 1e-12);
        prop_assert!(b.linear_form(&[&x, &y]).unwrap() <= b.linear_form(&[&z, &z]).unwrap() + 1e-12);
    }

    #[test]
    fn holder_step_attains_the_dual_norm(g in prop::collection::vec(-10.0f64..10.0, 1..8), p in 1.0f64..12.0) {
        prop_assume!(g.iter().any(|&v| v != 0.0));
        let x = holder_dual_step(&g, p).unwrap();
        let achieved: f64 = g.iter().zip(&x).map(|(a, b)| a * b).sum();
        prop_assert!(close(achieved, dual_norm(&g, p), 1e-12));
        prop_assert!((lp_norm(&x, p) - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn sign_transform_is_an_involution(n in 1usize..=4, order in 2usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random::symmetric_signed(n, order, &mut rng).unwrap();
        let s = random::signs(n, &mut rng);
        let twice = a.sign_transform(0, 1, &s).unwrap().sign_transform(0, 1, &s).unwrap();
        prop_assert_eq!(twice.entries(), a.entries());
    }

    #[test]
    fn normalized_vectors_are_unit(x in prop::collection::vec(-5.0f64..5.0, 1..8), p in 1.0f64..10.0) {
        if let Some(u) = normalize_lp(&x, p) {
            prop_assert!((lp_norm(&u, p) - 1.0).abs() <= 1e-12);
        } else {
            prop_assert!(x.iter().all(|&v| v == 0.0));
        }
    }
}

// Signed tensors are only checked at p = 2; away from it the signed ascent is
// best-effort and can stall at a local maximum below the tied one.
#[test]
fn constrained_optimum_never_exceeds_the_free_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for case in 0..30u64 {
        let nonneg = random::symmetric_nonnegative(3, 3, &mut rng).unwrap();
        let signed = random::symmetric_signed(3, 3, &mut rng).unwrap();
        for (a, p) in [(&nonneg, 1.5), (&nonneg, 2.0), (&nonneg, 3.0), (&signed, 2.0)] {
            let cfg = AscentConfig { seed: case, nonneg_mode: a.is_nonnegative(), ..AscentConfig::with_p(p) };
            let free = maximize_pnorm(&a, &cfg).unwrap().value;
            for c in [EqualityConstraint::pair(3, 0, 1).unwrap(), EqualityConstraint::all_equal(3)] {
                let tied = maximize_pnorm(&a, &AscentConfig { constraint: Some(c), ..cfg.clone() }).unwrap().value;
                assert!(tied <= free + 1e-9, "case {case} p {p}: tied {tied} > free {free}");
            }
        }
    }
}

#[test]
fn ascent_value_is_realized_by_its_tuple() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let a = random::signed(vec![2, 3, 4], &mut rng).unwrap();
    let r = maximize_pnorm(&a, &AscentConfig::with_p(2.5)).unwrap();
    assert!(r.tuple.is_feasible(1e-12));
    assert!((a.linear_form(&r.tuple.vectors).unwrap().abs() - r.value).abs() < 1e-12);
    assert!(r.kkt_residual_relative < 1e-4);
}

#[test]
fn diagonal_norm_follows_the_power_mean() {
    // ‖I_n‖_p = 1 for p ≤ 2 and n^{1-2/p} for p ≥ 2
    let eye = DenseHypermatrix::diagonal(3, 2).unwrap();
    for p in [1.5, 2.0, 3.0] {
        let v = maximize_pnorm(&eye, &AscentConfig::with_p(p)).unwrap().value;
        let expect = if p <= 2.0 { 1.0 } else { 3f64.powf(1.0 - 2.0 / p) };
        assert!((v - expect).abs() < 1e-7, "p {p}: {v} vs {expect}");
    }
}
