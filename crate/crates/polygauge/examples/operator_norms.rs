//! Asymmetric operator norms with certificates.
//!
//! The identity on the upper real line has ‖T| = 1, while its negative is
//! discontinuous: the certificate is the ray -1, of norm 0, whose image has
//! positive norm. The symmetric norm ‖T‖ between the associated normed
//! spaces is finite for both.
//!
//! Run with: cargo run --example operator_norms

use polygauge::gauge::fixtures;
use polygauge::operators::{self, LinearOperator};
use polygauge::scalar::int;

fn main() -> polygauge::Result<()> {
    let upper = fixtures::upper_real();
    let identity = LinearOperator::new(vec![vec![int(1)]], upper.clone(), upper.clone())?;

    for (name, op) in [("T = id", identity.clone()), ("-T", identity.negated())] {
        let r = operators::lc_norm(&op);
        println!(
            "{name}: ‖T| = {}, ‖T‖s = {}, certificate {}",
            r.lc_norm,
            polygauge::scalar::format_rat(&r.ls_norm),
            r.certificate
        );
    }

    // a row functional out of the referee plane
    let row = LinearOperator::new(
        vec![vec![int(0), int(1)]],
        fixtures::referee_plane(),
        upper.clone(),
    )?;
    let r = operators::lc_norm(&row);
    println!(
        "referee -> upper, T = (0 1): ‖T| = {}, ‖T‖s = {}",
        r.lc_norm,
        polygauge::scalar::format_rat(&r.ls_norm)
    );
    let (continuous, back) = operators::is_continuous(&row.negated());
    println!(
        "-T continuous: {continuous} (certificate {})",
        back.certificate
    );
    Ok(())
}
