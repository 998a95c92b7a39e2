//! Recomputes the worked examples and compares them to their published
//! numbers.
//!
//! Run with `cargo run --release --example gallery`.

use gramface::harness::example_gallery;

fn main() {
    let report = example_gallery();
    print!("{}", report.render_text());
    println!(
        "gallery: {}",
        if report.all_match() {
            "all match"
        } else {
            "MISMATCH"
        }
    );
}
