//! Enumerates Borel-down-closed complements and scores each one
//! combinatorially, cross-checked by exact linear algebra.
//!
//! Run with `cargo run --release --example stable_enumeration`.

use gramface::formspace::FormSpace;
use gramface::order::MonomialOrder;
use gramface::stable::enumerate_stable_complements;

fn main() {
    let (n, d, k) = (3usize, 3u32, 5usize);
    let complements = enumerate_stable_complements(n, d, k);
    println!(
        "{} Borel-down-closed {k}-subsets of the degree-{d} monomials in {n} variables:",
        complements.len()
    );
    let order = MonomialOrder::default_for(n);
    let mut best = 0;
    for w in &complements {
        let combinatorial = w.square_codim();
        // The same number through the linear algebra route.
        let space = FormSpace::monomial_complement_span(n, d, &order, &w.member_set()).unwrap();
        let algebraic = space.square().codim();
        assert_eq!(combinatorial, algebraic);
        println!("  {w} -> codim U^2 = {combinatorial}");
        best = best.max(combinatorial);
    }
    println!("maximum over all complements: m({n},{d},{k}) = {best}");
}
