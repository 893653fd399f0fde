//! The operator space as a gauge space: for c(X) > 0 the asymmetric
//! operator norm is itself a polyhedral gauge on matrices, built from
//! codomain generators tensored with domain ball vertices. Its index of
//! symmetry never drops below c(X).
//!
//! Run with: cargo run --example operator_space_gauge

use polygauge::gauge::fixtures;
use polygauge::operators::{self, LinearOperator};
use polygauge::scalar::format_rat;
use polygauge::symmetry;
use polygauge::verify::sampling;
use rand::SeedableRng;

fn main() -> polygauge::Result<()> {
    let pairs = [
        (fixtures::weighted_linf(2)?, fixtures::upper_real()),
        (fixtures::weighted_linf(2)?, fixtures::weighted_linf(2)?),
        (fixtures::linf_sym(2)?, fixtures::referee_plane()),
    ];
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for (x, y) in pairs {
        let og = operators::operator_space_gauge(&x, &y)?;
        let (c_x, _) = symmetry::index(&x);
        let (c_op, _) = symmetry::index(&og);
        println!(
            "{:?}: dim {}, {} generators, c(X) = {}, c(Lc) = {}",
            og.label(),
            og.dim(),
            og.generators().len(),
            format_rat(&c_x),
            format_rat(&c_op),
        );
        // the gauge reproduces the LP-computed norm on random matrices
        for _ in 0..3 {
            let m = sampling::random_matrix(&mut rng, y.dim(), x.dim());
            let op = LinearOperator::new(m.clone(), x.clone(), y.clone())?;
            let direct = operators::lc_norm(&op).lc_norm;
            let via = og.eval(&operators::flatten_matrix(&m))?;
            println!("  ‖T| = {direct} = gauge value {}", format_rat(&via));
            assert_eq!(direct, polygauge::ExtendedRat::Finite(via));
        }
    }
    Ok(())
}
