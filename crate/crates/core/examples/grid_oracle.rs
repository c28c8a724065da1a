//! Cross-checks the ascent against the brute-force grid and, for p = 2,
//! against the exact largest singular value.

use hypernorm::oracle::{exact_2norm_2matrix, grid_max, GridSpec};
use hypernorm::tensor::random;
use hypernorm::{maximize_pnorm, AscentConfig, EqualityConstraint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> hypernorm::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let a = random::signed(vec![3, 3], &mut rng)?;
    println!("exact σ_max:      {:.12}", exact_2norm_2matrix(&a)?);
    for p in [1.0, 2.0, 3.0] {
        let ascent = maximize_pnorm(&a, &AscentConfig::with_p(p))?;
        for k in [8, 16, 64] {
            let g = grid_max(&a, p, &GridSpec::new(k, false), &EqualityConstraint::free(2))?;
            println!(
                "p = {p}  K = {k:>2}: grid {:.9} ({} evaluations)  ascent {:.9}  deficit {:.2e}",
                g.grid_value,
                g.evaluations,
                ascent.value,
                ascent.value - g.grid_value
            );
        }
    }

    let b = random::symmetric_nonnegative(3, 3, &mut rng)?;
    let tied = EqualityConstraint::all_equal(3);
    let g = grid_max(&b, 2.5, &GridSpec::new(64, true).refined(), &tied)?;
    println!("ρ^(2.5) of a 3×3×3: grid {:.9}, refined {:.12}", g.grid_value, g.value);
    Ok(())
}
