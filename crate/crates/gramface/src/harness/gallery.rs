//! Reconstructions of the worked examples, each compared against its
//! published numbers.

use crate::echelon::Rat;
use crate::formspace::{face_dimension, Form, FormSpace};
use crate::hilbert::hilbert_table;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::stable::{m_value, monomial_square_codim};

#[derive(Clone, Debug)]
pub struct GalleryEntry {
    pub name: String,
    pub expected: String,
    pub computed: String,
}

impl GalleryEntry {
    pub fn matches(&self) -> bool {
        self.expected == self.computed
    }
}

#[derive(Clone, Debug)]
pub struct GalleryReport {
    pub entries: Vec<GalleryEntry>,
}

impl GalleryReport {
    pub fn all_match(&self) -> bool {
        self.entries.iter().all(GalleryEntry::matches)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&format!(
                "{} {}\n  expected: {}\n  computed: {}\n",
                if e.matches() { "ok " } else { "FAIL" },
                e.name,
                e.expected,
                e.computed,
            ));
        }
        out
    }
}

fn mono(exps: &[u8]) -> Monomial {
    Monomial::new(exps.to_vec())
}

fn entry(name: &str, expected: impl ToString, computed: impl ToString) -> GalleryEntry {
    GalleryEntry {
        name: name.to_string(),
        expected: expected.to_string(),
        computed: computed.to_string(),
    }
}

/// Recomputes every worked example exactly.
pub fn example_gallery() -> GalleryReport {
    let mut entries = Vec::new();

    // Ternary quartics: the largest face dimension per rank. The interior
    // has rank 6 and dimension 6; ranks 5, 4, 3 are capped by the maximal
    // square codimensions, and dimensions 4 and 5 never occur.
    {
        let mut max_dims = Vec::new();
        for rank in (1..=6usize).rev() {
            let k = 6 - rank;
            let codim_sq = if k == 0 {
                0
            } else {
                m_value(3, 2, k).expect("feasible").0
            };
            max_dims.push(face_dimension(rank, 3, 2, codim_sq));
        }
        entries.push(entry(
            "ternary quartics: max face dimension for ranks 6..1",
            "[6, 3, 1, 1, 0, 0]",
            format!("{max_dims:?}"),
        ));
        let gap_free = !max_dims.contains(&4) && !max_dims.contains(&5);
        entries.push(entry(
            "ternary quartics: no faces of dimension 4 or 5",
            true,
            gap_free,
        ));
    }

    // Quaternary quadrics: a generic codimension-2 subspace has
    // dim U^2 = 34 < 35, exhibited by a pencil of diagonal quadrics.
    {
        let order = MonomialOrder::default_for(4);
        let diag = |a: [i64; 4]| {
            Form::from_terms(
                4,
                2,
                (0..4).map(|i| {
                    (
                        Monomial::pure_power(4, i, 2),
                        Rat::from_integer(a[i].into()),
                    )
                }),
            )
            .expect("diagonal quadric")
        };
        let w = FormSpace::span(4, 2, &order, &[diag([1, 1, 1, 1]), diag([1, 2, 3, 4])])
            .expect("pencil");
        let u = w.apolar_complement();
        entries.push(entry(
            "quaternary quadrics: dim U^2 for generic codimension 2",
            34,
            u.square().dim(),
        ));
    }

    // The initial subspace of U = (x1^2 + x2^2)^perp misses only x1^2; its
    // monomial square has codimension n while U^2 has codimension 2.
    {
        let n = 3;
        let order = MonomialOrder::default_for(n);
        let q = Form::from_terms(
            n,
            2,
            [
                (Monomial::pure_power(n, 0, 2), Rat::from_integer(1.into())),
                (Monomial::pure_power(n, 1, 2), Rat::from_integer(1.into())),
            ],
        )
        .expect("binomial");
        let u = FormSpace::span(n, 2, &order, &[q])
            .expect("span")
            .apolar_complement();
        let codim_sq = u.square().codim();
        let initial = u.initial_subspace(&order).expect("same order");
        let missing: Vec<Monomial> = crate::monomial::monomial_basis(n, 2, &order)
            .into_iter()
            .filter(|m| !initial.contains(m))
            .collect();
        let initial_sq_codim = monomial_square_codim(n, 2, &missing.iter().cloned().collect());
        entries.push(entry(
            "initial subspace example: (codim U^2, codim in(U)^2)",
            format!("(2, {n})"),
            format!("({codim_sq}, {initial_sq_codim})"),
        ));
    }

    // The almost complete intersection generated by four cubes and one mixed
    // cubic: Hilbert function (1, 4, 10, 15, 15, 7, 1), and every lift adds
    // 7 to the square codimension per new variable.
    {
        let order = MonomialOrder::default_for(4);
        let mixed = Form::from_terms(
            4,
            3,
            [
                (mono(&[2, 1, 0, 0]), Rat::from_integer(1.into())),
                (mono(&[0, 0, 2, 1]), Rat::from_integer(1.into())),
            ],
        )
        .expect("mixed cubic");
        let u = FormSpace::span(
            4,
            3,
            &order,
            &[
                Form::monomial(mono(&[3, 0, 0, 0])),
                Form::monomial(mono(&[0, 3, 0, 0])),
                Form::monomial(mono(&[0, 0, 3, 0])),
                Form::monomial(mono(&[0, 0, 0, 3])),
                mixed,
            ],
        )
        .expect("five generators");
        entries.push(entry(
            "almost complete intersection: codimension",
            15,
            u.codim(),
        ));
        let table = hilbert_table(&u, 6);
        entries.push(entry(
            "almost complete intersection: Hilbert function",
            "[1, 4, 10, 15, 15, 7, 1]",
            format!("{:?}", table.values()),
        ));
        let base = u.square().codim();
        let mut offsets = Vec::new();
        for n in 5..=8usize {
            let lifted = u.lift(n - 4);
            offsets.push(lifted.square().codim() as i64 - base as i64);
        }
        entries.push(entry(
            "almost complete intersection: codim V^2 - codim U^2 at n = 5..8",
            "[7, 14, 21, 28]",
            format!("{offsets:?}"),
        ));
    }

    GalleryReport { entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gallery_matches_published_numbers() {
        let report = example_gallery();
        assert!(report.all_match(), "\n{}", report.render_text());
    }
}
