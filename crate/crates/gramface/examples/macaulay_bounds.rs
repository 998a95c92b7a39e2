//! The Macaulay representation calculus: unique binomial expansions, the
//! growth bound, Gotzmann persistence, and Green's restriction bound.
//!
//! Run with `cargo run --release --example macaulay_bounds`.

use num::BigUint;

use gramface::macaulay::{
    gotzmann_persists, gotzmann_prediction, green_restriction_bound, macaulay_growth_bound,
    macaulay_rep,
};

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn main() {
    for (a, d) in [(5u64, 2u32), (10, 3), (21, 4), (100, 5)] {
        let rep = macaulay_rep(&big(a), d);
        let terms: Vec<String> = rep
            .terms()
            .map(|(top, bottom)| format!("C({top},{bottom})"))
            .collect();
        println!("{a} in degree {d}: {}", terms.join(" + "));
    }

    println!();
    for (h, i) in [(2u64, 2u32), (6, 2), (10, 3), (4, 4)] {
        println!(
            "largest h_{} after h_{i} = {h}: {}",
            i + 1,
            macaulay_growth_bound(&big(h), i)
        );
    }

    // A space of codimension k <= d has constant growth bound k, and hitting
    // it pins the whole tail of the Hilbert function.
    println!();
    let (k, d) = (3u64, 5u32);
    println!(
        "h_{d} = {k} (k <= d): growth bound {}, persistent? {}",
        macaulay_growth_bound(&big(k), d),
        gotzmann_persists(&big(k), &big(k), d),
    );
    for l in 1..=3 {
        println!(
            "  predicted h_{} = {}",
            d + l,
            gotzmann_prediction(&big(k), d, l)
        );
    }

    // Green's bound: restricting to a generic hyperplane kills everything
    // when the codimension is small, and drops one block otherwise.
    println!();
    for (h, d) in [(3u64, 3u32), (4, 3), (15, 3), (34, 4)] {
        println!(
            "restriction bound for h_{d} = {h}: {}",
            green_restriction_bound(&big(h), d)
        );
    }
}
