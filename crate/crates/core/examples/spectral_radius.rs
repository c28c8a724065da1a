//! p-spectral radius of a random symmetric nonnegative 3-matrix next to its
//! slice-sum lower bound.

use hypernorm::bounds::slice_sum_lower_bound;
use hypernorm::tensor::random;
use hypernorm::{p_spectral_radius, AscentConfig};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> hypernorm::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let a = random::symmetric_nonnegative(4, 3, &mut rng)?;
    println!("slice sums: {:.4?}", a.slice_sums());
    println!("{:>5} {:>16} {:>16}", "p", "ρ^(p)", "lower bound");
    for p in [2.0, 2.5, 3.0, 4.0, 8.0] {
        let cfg = AscentConfig { nonneg_mode: true, ..AscentConfig::with_p(p) };
        let rho = p_spectral_radius(&a, &cfg)?;
        println!("{p:>5} {:>16.12} {:>16.12}", rho.value, slice_sum_lower_bound(&a, p)?);
    }
    Ok(())
}
