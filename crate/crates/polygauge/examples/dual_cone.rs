//! The dual cone X♭: flat norms with certificates, membership, support
//! functionals, and the fullness test.
//!
//! On the upper real line the functional p = 1 is continuous with
//! ‖p|♭ = 1, but -p is not: the flat norm diverges along the ray -1, which
//! has norm 0. This is the smallest picture of X♭ being a cone and not a
//! vector space; the fullness test (equivalent to T1) separates the two
//! worlds.
//!
//! Run with: cargo run --example dual_cone

use polygauge::dual;
use polygauge::gauge::fixtures;
use polygauge::scalar::int;

fn main() -> polygauge::Result<()> {
    let upper = fixtures::upper_real();
    for p in [vec![int(1)], vec![int(-1)]] {
        let (member, value, cert) = dual::in_dual_cone(&upper, &p)?;
        println!(
            "upper_real, p = {}: ‖p|♭ = {value}, {} ({cert})",
            polygauge::scalar::format_vec(&p),
            if member { "p ∈ X♭" } else { "p ∉ X♭" },
        );
    }

    // evaluation functionals on the discretized sup-norm space
    let sup = fixtures::sup_gauge(5)?;
    let delta = polygauge::linalg::unit(5, 2);
    let (v, _) = dual::flat_norm(&sup, &delta)?;
    let (neg_member, _, ray) = dual::in_dual_cone(&sup, &polygauge::linalg::neg(&delta))?;
    println!("sup_gauge(5): ‖delta|♭ = {v}, -delta in X♭: {neg_member} ({ray})");

    // a Hahn-Banach support functional at a sphere point
    let referee = fixtures::referee_plane();
    let x0 = vec![int(0), int(1)];
    let f = dual::support_functional(&referee, &x0)?;
    println!(
        "referee_plane: support functional at (0, 1) is p = {} with ‖p|♭ = {}",
        polygauge::scalar::format_vec(&f.p),
        f.flat_norm,
    );

    for g in [&upper, &referee, &fixtures::weighted_linf(3)?] {
        println!(
            "dual cone of {:?} is the full dual space: {}",
            g.label(),
            dual::dual_cone_full(g)
        );
    }
    Ok(())
}
