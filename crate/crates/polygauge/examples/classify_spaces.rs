//! Classify the bundled example spaces: index of symmetry, T1 flag with
//! certificate, and the type I / type III verdict.
//!
//! Run with: cargo run --example classify_spaces

use polygauge::gauge::fixtures;
use polygauge::report::classify_report;

fn main() -> polygauge::Result<()> {
    let spaces = vec![
        fixtures::upper_real(),
        fixtures::referee_plane(),
        fixtures::weighted_linf(4)?,
        fixtures::sup_gauge(5)?,
        fixtures::linf_sym(2)?,
        fixtures::upper_real().sum_with_symmetric(),
    ];
    for g in spaces {
        print!("{}", classify_report(&g).render_text());
        println!();
    }
    Ok(())
}
