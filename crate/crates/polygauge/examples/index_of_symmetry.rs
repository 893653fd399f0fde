//! The index of symmetry along the weighted ℓ∞ family: c = 1/n with the
//! n-th basis vector as minimizer, and the exact product identity
//! (sup ‖-x|)(inf ‖-x|) = 1 over the unit sphere.
//!
//! As n grows the truncations become "more asymmetric" (c → 0) while every
//! single truncation stays T1 — the finite-dimensional shadow of a space
//! that is T1 with c = 0.
//!
//! Run with: cargo run --example index_of_symmetry

use polygauge::gauge::fixtures;
use polygauge::scalar::format_rat;
use polygauge::symmetry;

fn main() -> polygauge::Result<()> {
    for n in 2..=8 {
        let g = fixtures::weighted_linf(n)?;
        let (c, minimizer) = symmetry::index(&g);
        let (sup, _) = symmetry::sup_reverse(&g);
        let identity = symmetry::check_identity(&g)?;
        println!(
            "n = {n}: c = {}, minimizer = {}, sup = {}, (sup)(inf) = 1: {}",
            format_rat(&c),
            polygauge::scalar::format_vec(&minimizer),
            sup,
            identity,
        );
    }
    Ok(())
}
