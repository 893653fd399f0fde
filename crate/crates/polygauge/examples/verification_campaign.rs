//! Run a small seeded verification campaign programmatically.
//!
//! Run with: cargo run --example verification_campaign

use polygauge::verify::{run_campaign, RunConfig};

fn main() {
    let config = RunConfig {
        seed: 42,
        cases: 25,
        dims: (1, 3),
    };
    let report = run_campaign(&config);
    print!("{}", report.render_text());
    std::process::exit(if report.ok { 0 } else { 1 });
}
