//! Loads form subspaces from interchange text, then reports dimensions,
//! square codimension, Hilbert function, base-point certificate, and face
//! dimension.
//!
//! Run with `cargo run --release --example space_report`.

use gramface::formspace::face_dimension;
use gramface::hilbert::{base_point_certificate, hilbert_table, BasePointVerdict};
use gramface::interchange::{read_space, write_space};

const BINOMIAL_PERP: &str = r#"{
  "n": 3,
  "d": 2,
  "order": { "kind": "lex", "small_to_large": [1, 2, 3] },
  "generators": [
    { "x1^2": "1", "x2^2": "1" }
  ]
}"#;

const MISSING_POWER: &str = r#"{
  "n": 3,
  "d": 3,
  "order": { "kind": "lex", "small_to_large": [1, 2, 3] },
  "complement_monomials": ["x1^3"]
}"#;

fn report(label: &str, text: &str, complement: bool) {
    let loaded = read_space(text).expect("valid interchange text");
    // The first file stores W; the space of interest is its apolar
    // complement. The second stores the complement monomials directly.
    let space = if complement {
        loaded.apolar_complement()
    } else {
        loaded
    };
    let (n, d) = (space.n(), space.d());
    println!("== {label}");
    println!("dim U = {} (codim {})", space.dim(), space.codim());
    let square = space.square();
    println!("codim U^2 = {}", square.codim());
    let t = 2 * d + 2;
    let table = hilbert_table(&space, t);
    println!("hilbert function up to {t}: {:?}", table.values());
    match base_point_certificate(&space, t).verdict {
        BasePointVerdict::BasePointFree { at_degree } => {
            println!("base-point-free (witnessed in degree {at_degree})")
        }
        BasePointVerdict::HasBasePoints { witness } => println!("has base points: {witness:?}"),
        BasePointVerdict::Inconclusive { bound } => println!("inconclusive up to {bound}"),
    }
    println!(
        "face dimension for this subspace: {}",
        face_dimension(space.dim(), n, d, square.codim())
    );
    println!();
}

fn main() {
    report("U = (x1^2 + x2^2)^perp in 3 variables", BINOMIAL_PERP, true);
    report("U = all cubics except x1^3", MISSING_POWER, false);

    // Round trip: re-emitting a loaded space is byte-identical.
    let space = read_space(MISSING_POWER).expect("valid");
    let emitted = write_space(&space);
    let again = write_space(&read_space(&emitted).expect("self-emitted"));
    println!("round trip byte-identical: {}", emitted == again);
}
