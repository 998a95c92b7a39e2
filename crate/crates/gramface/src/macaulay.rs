//! The integer calculus of Macaulay representations.
//!
//! Every non-negative integer `a` has a unique expansion in a fixed degree
//! `d` as a sum of binomials with strictly decreasing tops,
//!
//! ```text
//! a = C(k_d, d) + C(k_{d-1}, d-1) + ... + C(k_j, j),   k_d > ... > k_j >= j,
//! ```
//!
//! where every stored term is positive (zero-valued trailing binomials are
//! omitted). Shifting tops and bottoms of this expansion yields the growth
//! bound of Macaulay's theorem, the persistence prediction of Gotzmann's
//! theorem and the hyperplane-restriction bound of Green's theorem. All
//! arithmetic is arbitrary precision.

use num::bigint::BigUint;
use num::traits::{One, Zero};

/// `C(n, k)` over arbitrary-precision integers, with `C(n, k) = 0` for
/// `n < k` and for negative arguments.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if k < 0 || n < k {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from((n - i) as u64);
        acc /= BigUint::from((i + 1) as u64);
    }
    acc
}

/// The degree-`d` Macaulay representation of an integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MacaulayRep {
    degree: u32,
    /// `tops[j]` is the top of the binomial at position `d - j`, so the
    /// sequence is strictly decreasing and each term is positive.
    tops: Vec<u64>,
}

impl MacaulayRep {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `(top, bottom)` pairs from position `d` downwards.
    pub fn terms(&self) -> impl Iterator<Item = (u64, u32)> + '_ {
        self.tops
            .iter()
            .enumerate()
            .map(move |(j, &k)| (k, self.degree - j as u32))
    }

    /// The represented integer.
    pub fn value(&self) -> BigUint {
        self.terms()
            .map(|(k, i)| binomial(k as i64, i as i64))
            .sum()
    }

    /// The shift operator: `sum C(k_i + s, i + t)`.
    ///
    /// Representations store no zero-valued binomials; a shift with `s > t`
    /// could turn an omitted zero term into a positive one and is therefore
    /// representation-dependent, so it is rejected.
    pub fn shift(&self, s: i64, t: i64) -> BigUint {
        assert!(
            s <= t,
            "macaulay shift with s > t depends on omitted zero terms"
        );
        self.terms()
            .map(|(k, i)| binomial(k as i64 + s, i64::from(i) + t))
            .sum()
    }
}

/// The unique degree-`d` Macaulay representation of `a` (greedy expansion);
/// `a = 0` yields the empty representation.
pub fn macaulay_rep(a: &BigUint, d: u32) -> MacaulayRep {
    assert!(d >= 1, "representation degree must be at least 1");
    let mut tops = Vec::new();
    let mut rest = a.clone();
    let mut prev: Option<u64> = None;
    for i in (1..=d).rev() {
        if rest.is_zero() {
            break;
        }
        let k = largest_top(&rest, i);
        if let Some(p) = prev {
            debug_assert!(k < p, "greedy tops must strictly decrease");
        }
        rest -= binomial(k as i64, i64::from(i));
        tops.push(k);
        prev = Some(k);
    }
    debug_assert!(
        rest.is_zero(),
        "greedy expansion must terminate by degree 1"
    );
    MacaulayRep { degree: d, tops }
}

/// Largest `k` with `C(k, i) <= a`, assuming `a >= 1`.
fn largest_top(a: &BigUint, i: u32) -> u64 {
    let i = u64::from(i);
    let mut lo = i; // C(i, i) = 1 <= a
    let mut hi = i + 1;
    while binomial(hi as i64, i as i64) <= *a {
        lo = hi;
        hi *= 2;
    }
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if binomial(mid as i64, i as i64) <= *a {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Macaulay's growth bound: the largest possible `h_{i+1}` given `h_i = h`.
pub fn macaulay_growth_bound(h: &BigUint, i: u32) -> BigUint {
    macaulay_rep(h, i).shift(1, 1)
}

/// Green's restriction bound: the largest possible `c_d` when restricting to
/// a generic hyperplane, given `h_d = h`.
pub fn green_restriction_bound(h: &BigUint, d: u32) -> BigUint {
    macaulay_rep(h, d).shift(-1, 0)
}

/// Whether the growth from `h_d` to `h_d1` is extremal, in which case
/// persistence pins every later value to [`gotzmann_prediction`].
pub fn gotzmann_persists(h_d: &BigUint, h_d1: &BigUint, d: u32) -> bool {
    *h_d1 == macaulay_growth_bound(h_d, d)
}

/// The persistent value `h_{d+l}` predicted for an extremal-growth ideal.
pub fn gotzmann_prediction(h_d: &BigUint, d: u32, l: u32) -> BigUint {
    macaulay_rep(h_d, d).shift(i64::from(l), i64::from(l))
}
