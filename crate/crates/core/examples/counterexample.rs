//! Searches for symmetric matrices where the diagonal restriction
//! max |L_A(x, x)| falls short of ‖A‖_p.

use hypernorm::oracle::find_counterexample;

fn main() -> hypernorm::Result<()> {
    for p in [1.0, 1.5, 3.0, 4.0] {
        match find_counterexample(p, 10, 2, 0)? {
            Some(w) => {
                println!("p = {p}: trial {} matrix {:?}", w.trial, w.matrix.entries());
                println!("    ‖A‖_p ≈ {:.6}, max |L(x,x)| ≈ {:.6}, gap {:.6}", w.unconstrained, w.constrained, w.gap);
                println!("    x = {:.4?}, y = {:.4?}", w.unconstrained_tuple.vectors[0], w.unconstrained_tuple.vectors[1]);
            }
            None => println!("p = {p}: no gap above threshold in 10 trials"),
        }
    }
    Ok(())
}
