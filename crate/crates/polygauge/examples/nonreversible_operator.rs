//! When is L_c(X, Y) a vector space?  Exactly when not both indices vanish.
//! For c(X) = c(Y) = 0 a witness exists: a continuous T whose negative is
//! discontinuous, assembled from a support functional of X and a non-T1
//! direction of Y through the rank-one embedding p⊗e.
//!
//! Run with: cargo run --example nonreversible_operator

use polygauge::gauge::fixtures;
use polygauge::operators;
use polygauge::report::witness_report;

fn main() -> polygauge::Result<()> {
    let pairs = [
        (
            "upper_real -> upper_real",
            fixtures::upper_real(),
            fixtures::upper_real(),
        ),
        (
            "referee_plane -> upper_real",
            fixtures::referee_plane(),
            fixtures::upper_real(),
        ),
        (
            "sup_gauge(3) -> referee_plane",
            fixtures::sup_gauge(3)?,
            fixtures::referee_plane(),
        ),
    ];
    for (name, x, y) in pairs {
        println!("== {name}");
        println!(
            "L_c is a vector space: {}",
            operators::lc_is_vector_space(&x, &y)
        );
        let w = operators::nonreversible_witness(&x, &y)?;
        print!("{}", witness_report(&w).render_text());
        println!();
    }

    // with c(X) > 0 the hypotheses fail and the construction refuses
    let err =
        operators::nonreversible_witness(&fixtures::weighted_linf(2)?, &fixtures::upper_real());
    println!("weighted_linf(2) -> upper_real: {}", err.unwrap_err());
    Ok(())
}
