//! Runs every randomized verification suite with a handful of cases.

use hypernorm::verify::{run, SuiteParams, Theorem};

fn main() -> hypernorm::Result<()> {
    let suites = [
        (Theorem::Th2p, 3.0),
        (Theorem::Thr2, 2.0),
        (Theorem::Thrp, 4.0),
        (Theorem::Symmetrization, 2.5),
        (Theorem::SignFlip, 3.0),
    ];
    for (theorem, p) in suites {
        let report = run(theorem, &SuiteParams { p, cases: 10, seed: 42, ..SuiteParams::default() })?;
        let worst = report.cases.iter().map(|c| c.difference.abs()).fold(0.0, f64::max);
        println!("{theorem:<15} p = {p:<4} {}/{} passed, worst |difference| {worst:.2e}", report.passed, report.total);
    }

    // below p = 2 the hypothesis is rejected outright
    match run(Theorem::Th2p, &SuiteParams { p: 1.5, ..SuiteParams::default() }) {
        Err(e) => println!("th2p at p = 1.5: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
