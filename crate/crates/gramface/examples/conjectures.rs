//! Computes m(k,k,k) and m(3k,k,k) for small k and prints them next to the
//! conjectured closed forms, without asserting them.
//!
//! Run with `cargo run --release --example conjectures`.

use gramface::harness::conjecture_mkkk;

fn main() {
    let report = conjecture_mkkk(4, Some(2_000_000_000));
    print!("{}", report.render_text());
}
