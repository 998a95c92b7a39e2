//! Experiments around the conjectured closed forms `m(k,k,k) =
//! (k^3 + 3k^2 + 2k)/6` and `m(3k,k,k) = 2k^2 + (k^3 + 3k^2 + 2k)/6`.
//!
//! The report prints the raw computed values next to the conjectured ones;
//! it never asserts the formulas.

use std::collections::BTreeSet;

use crate::monomial::Monomial;
use crate::stable::{m_value_budgeted, monomial_square_codim};

#[derive(Clone, Debug)]
pub struct ConjectureEntry {
    pub k: usize,
    /// `m(k, k, k)`, when computed within budget.
    pub m_kkk: Option<usize>,
    pub formula_kkk: usize,
    /// `m(3k, k, k)`, when computed within budget.
    pub m_3kkk: Option<usize>,
    pub formula_3kkk: usize,
    /// Square codimension of the witness complement
    /// `{x1^k} + {x1^{k-1} x_j : j = 2..k}` in `k` variables.
    pub witness_value: usize,
}

impl ConjectureEntry {
    fn label(computed: Option<usize>, formula: usize) -> &'static str {
        match computed {
            None => "not computed",
            Some(v) if v == formula => "match",
            Some(_) => "mismatch",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub entries: Vec<ConjectureEntry>,
}

impl ConjectureReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(
            "k | m(k,k,k) | (k^3+3k^2+2k)/6 | m(3k,k,k) | 2k^2 + (k^3+3k^2+2k)/6 | witness\n",
        );
        for e in &self.entries {
            let fmt = |v: Option<usize>| match v {
                Some(v) => v.to_string(),
                None => "not computed".into(),
            };
            out.push_str(&format!(
                "{} | {} ({}) | {} | {} ({}) | {} | {}\n",
                e.k,
                fmt(e.m_kkk),
                ConjectureEntry::label(e.m_kkk, e.formula_kkk),
                e.formula_kkk,
                fmt(e.m_3kkk),
                ConjectureEntry::label(e.m_3kkk, e.formula_3kkk),
                e.formula_3kkk,
                e.witness_value,
            ));
        }
        out.push_str("values are observations only; the closed forms are unproven\n");
        out
    }
}

fn formula(k: usize) -> usize {
    (k * k * k + 3 * k * k + 2 * k) / 6
}

/// The complement `span(x1^d, x1^{d-1} x2, ..., x1^{d-1} x_n)` in `n = k`
/// variables at degree `d = k`, whose square codimension realizes the
/// conjectured value.
fn witness_complement(k: usize) -> BTreeSet<Monomial> {
    let mut w = BTreeSet::new();
    w.insert(Monomial::pure_power(k, 0, k as u8));
    for j in 1..k {
        let mut exps = vec![0u8; k];
        exps[0] = k as u8 - 1;
        exps[j] = 1;
        w.insert(Monomial::new(exps));
    }
    w
}

/// Computes `m(k,k,k)` and `m(3k,k,k)` for `k = 1..=k_max` where the work
/// budget allows, and scores them against the conjectured formulas.
pub fn conjecture_mkkk(k_max: usize, max_units_per_cell: Option<u64>) -> ConjectureReport {
    let mut entries = Vec::new();
    for k in 1..=k_max {
        let m_kkk = m_value_budgeted(k, k as u32, k, max_units_per_cell)
            .ok()
            .flatten()
            .map(|(v, _)| v);
        let m_3kkk = m_value_budgeted(3 * k, k as u32, k, max_units_per_cell)
            .ok()
            .flatten()
            .map(|(v, _)| v);
        let witness_value = monomial_square_codim(k, k as u32, &witness_complement(k));
        entries.push(ConjectureEntry {
            k,
            m_kkk,
            formula_kkk: formula(k),
            m_3kkk,
            formula_3kkk: 2 * k * k + formula(k),
            witness_value,
        });
    }
    ConjectureReport { entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_k_observations() {
        let report = conjecture_mkkk(3, None);
        let e2 = &report.entries[1];
        assert_eq!(e2.k, 2);
        assert_eq!(e2.m_kkk, Some(4));
        assert_eq!(e2.formula_kkk, 4);
        assert_eq!(e2.m_3kkk, Some(12));
        assert_eq!(e2.formula_3kkk, 12);
        assert_eq!(e2.witness_value, 4);
        let e3 = &report.entries[2];
        assert_eq!(e3.m_kkk, Some(10));
        assert_eq!(e3.formula_kkk, 10);
        assert_eq!(e3.formula_3kkk, 28);
        assert_eq!(e3.witness_value, 10);
    }

    #[test]
    fn budget_marks_not_computed() {
        let report = conjecture_mkkk(2, Some(1));
        assert_eq!(report.entries[1].m_kkk, None);
    }
}
