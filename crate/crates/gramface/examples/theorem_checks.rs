//! Runs a few of the registered verification checks on seeded random
//! instances and prints their reports.
//!
//! Run with `cargo run --release --example theorem_checks`.

use gramface::harness::{registered_checks, verify, CheckParams};

fn main() {
    println!("registered checks:");
    for def in registered_checks() {
        println!("  {:<24} {}", def.id, def.summary);
    }
    println!();

    let mut params = CheckParams::new(4, 3, 1);
    params.trials = 20;
    params.seed = 7;
    let report = verify("codim1-bp", &params).unwrap();
    print!("{}", report.render_text());

    let mut params = CheckParams::new(3, 4, 2);
    params.trials = 25;
    params.seed = 1;
    let report = verify("deg-reduction", &params).unwrap();
    print!("{}", report.render_text());

    let mut params = CheckParams::new(4, 3, 4);
    params.trials = 20;
    params.seed = 5;
    let report = verify("restriction-dichotomy", &params).unwrap();
    print!("{}", report.render_text());

    // Machine-readable records, one JSON object per trial.
    let mut params = CheckParams::new(3, 2, 2);
    params.trials = 3;
    params.seed = 2;
    let report = verify("lift-formula", &params).unwrap();
    println!("\nrecords for lift-formula:");
    print!("{}", report.render_records());
}
