//! ‖A‖_p of a small signed 3-matrix, free and with two positions tied.
//!
//!     cargo run --example pnorm -- 3.0

use hypernorm::tensor::random;
use hypernorm::{maximize_pnorm, AscentConfig, EqualityConstraint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> hypernorm::Result<()> {
    let p: f64 = std::env::args().nth(1).map_or(Ok(3.0), |s| s.parse()).expect("p must be a number");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let a = random::jk_symmetric(vec![2, 3, 3], 1, 2, false, &mut rng)?;

    let free = maximize_pnorm(&a, &AscentConfig::with_p(p))?;
    println!("‖A‖_{p} ≈ {:.12}  (converged: {}, sweeps: {})", free.value, free.converged, free.sweeps_used);
    for (m, x) in free.tuple.vectors.iter().enumerate() {
        println!("  x^({}) = {x:.6?}", m + 1);
    }
    println!("  KKT residual {:.2e}", free.kkt_residual);

    let cfg = AscentConfig { constraint: Some(EqualityConstraint::pair(3, 1, 2)?), ..AscentConfig::with_p(p) };
    let tied = maximize_pnorm(&a, &cfg)?;
    println!("with x^(2) = x^(3):  {:.12}", tied.value);
    println!("restart values: {:.6?}", free.restart_values);
    Ok(())
}
