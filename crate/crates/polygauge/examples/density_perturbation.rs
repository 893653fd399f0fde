//! Operators with a discontinuous negative are dense: any continuous H can
//! be moved by an arbitrarily small ε·(p⊗e) so that -(H + T) leaves the
//! continuous cone. The perturbation norm is exactly ε and the
//! discontinuity ray re-checks by evaluation.
//!
//! Run with: cargo run --example density_perturbation

use polygauge::gauge::fixtures;
use polygauge::operators::{self, LinearOperator};
use polygauge::report::perturb_report;
use polygauge::scalar::{int, rat};

fn main() -> polygauge::Result<()> {
    let upper = fixtures::upper_real();

    // H = 0 with shrinking epsilons
    let zero = LinearOperator::zero(upper.clone(), upper.clone());
    for eps in [int(1), rat(1, 10), rat(1, 1000)] {
        let p = operators::perturb_nonsymmetric(&zero, &eps)?;
        print!("{}", perturb_report(&p, &eps).render_text());
        println!();
    }

    // a nonzero continuous H out of the referee plane
    let h = LinearOperator::new(
        vec![vec![rat(3, 2), int(2)]],
        fixtures::referee_plane(),
        upper.clone(),
    )?;
    let eps = rat(1, 100);
    let p = operators::perturb_nonsymmetric(&h, &eps)?;
    print!("{}", perturb_report(&p, &eps).render_text());
    Ok(())
}
