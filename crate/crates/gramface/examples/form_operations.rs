//! The exact linear algebra toolkit on form subspaces: apolarity, squares,
//! ideal quotients, coordinate changes, initial subspaces, generic initial
//! monomials, intersection with a coordinate subring, and lifting.
//!
//! Run with `cargo run --release --example form_operations`.

use gramface::formspace::{eval_pairing, Form, FormSpace};
use gramface::matrix::RatMatrix;
use gramface::monomial::Monomial;
use gramface::order::MonomialOrder;
use gramface::Rat;

fn rat(v: i64) -> Rat {
    Rat::from_integer(v.into())
}

fn main() {
    let order = MonomialOrder::default_for(3);

    // The apolarity pairing is diagonal on monomials with weight alpha!/d!,
    // and pairs d-th powers with evaluation.
    let x1x2 = Form::monomial(Monomial::new(vec![1, 1, 0]));
    println!("<x1x2, x1x2> = {}", eval_pairing(&x1x2, &x1x2).unwrap());
    let l = Form::linear(&[rat(2), rat(-1), rat(3)]);
    let f = Form::from_terms(
        3,
        2,
        [
            (Monomial::new(vec![2, 0, 0]), rat(1)),
            (Monomial::new(vec![0, 1, 1]), rat(5)),
        ],
    )
    .unwrap();
    println!(
        "<l^2, f> = {} = f(2, -1, 3) = {}",
        eval_pairing(&l.pow(2), &f).unwrap(),
        f.eval(&[rat(2), rat(-1), rat(3)])
    );

    // U = (x1^2 + x2^2)^perp: square codimension 2 at any n >= 3.
    let q = Form::from_terms(
        3,
        2,
        [
            (Monomial::new(vec![2, 0, 0]), rat(1)),
            (Monomial::new(vec![0, 2, 0]), rat(1)),
        ],
    )
    .unwrap();
    let u = FormSpace::span(3, 2, &order, &[q])
        .unwrap()
        .apolar_complement();
    println!("\ndim U = {}, codim U^2 = {}", u.dim(), u.square().codim());
    println!(
        "initial monomials of U: {:?}",
        u.initial_subspace(&order).unwrap()
    );
    println!(
        "generic initial monomials in degree 2: {:?}",
        u.generic_initial_monomials(2, 17, 100, 5).unwrap()
    );

    // Ideal quotient by a linear form preserves codimension generically.
    let l = Form::linear(&[rat(1), rat(2), rat(5)]);
    let quotient = u.ideal_quotient_by_linear(&l).unwrap();
    println!(
        "\ncodim (U : l) = {} (codim U = {})",
        quotient.codim(),
        u.codim()
    );

    // Coordinate changes act by substitution and preserve dimensions.
    let g = RatMatrix::from_integer_rows(&[vec![1, 1, 0], vec![0, 1, 0], vec![2, 0, 1]]);
    let moved = u.apply_coordinate_change(&g).unwrap();
    println!(
        "after a coordinate change: dim {} codim U^2 {}",
        moved.dim(),
        moved.square().codim()
    );

    // Intersection with the first variables, and lifting into more.
    let restricted = moved.intersect_with_first_vars(2).unwrap();
    println!(
        "intersected with 2 variables: dim {} of {}",
        restricted.dim(),
        restricted.ambient_dim()
    );
    for levels in 1..=3 {
        let lifted = u.lift(levels);
        println!(
            "lift by {levels}: n = {}, codim = {}, codim U^2 = {}",
            lifted.n(),
            lifted.codim(),
            lifted.square().codim()
        );
    }
}
