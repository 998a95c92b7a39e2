//! Builds a small table of maximal square codimensions m(n, d, k) with the
//! witness complements, and diffs one block against the shipped reference
//! values.
//!
//! Run with `cargo run --release --example mtable`.

use gramface::cli::golden_value;
use gramface::stable::{m_table, m_value, MCell};

fn main() {
    let n_values = [3usize, 4];
    let d_values = [2u32, 3, 4, 5];
    let k_values = [1usize, 2, 3, 4, 5];
    let table = m_table(&n_values, &d_values, &k_values, None);

    for &n in &n_values {
        println!("m({n}, d, k):");
        print!("{:>10}", "k \\ d");
        for &d in &d_values {
            print!("{d:>6}");
        }
        println!();
        for &k in &k_values {
            print!("{k:>10}");
            for &d in &d_values {
                match table.cell(n, d, k) {
                    Some(MCell::Computed { value, .. }) => print!("{value:>6}"),
                    _ => print!("{:>6}", "-"),
                }
            }
            println!();
        }
        println!();
    }

    // Every cell above is covered by the published reference table.
    let mut mismatches = 0;
    for &n in &n_values {
        for &d in &d_values {
            for &k in &k_values {
                let (computed, reference) = (table.value(n, d, k), golden_value(n, d, k));
                if let (Some(c), Some(r)) = (computed, reference) {
                    if c as u32 != r {
                        println!("MISMATCH at m({n},{d},{k}): {c} vs {r}");
                        mismatches += 1;
                    }
                }
            }
        }
    }
    println!("reference comparison: {mismatches} mismatches");

    let (value, witness) = m_value(3, 5, 5).expect("feasible cell");
    println!("\nm(3, 5, 5) = {value}, achieved by excluding {witness}");
}
