//! Random instance generation and the decision procedures the checks need:
//! base-point-free subspaces by rejection sampling, quotients modulo a
//! generic linear form, and power-of-a-linear-form membership for small
//! complement dimensions.

use num::traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha12Rng;

use crate::echelon::Rat;
use crate::formspace::{Form, FormSpace};
use crate::hilbert::{base_point_certificate, BasePointVerdict};
use crate::monomial::{monomial_basis, Monomial};
use crate::order::MonomialOrder;
use crate::Error;

/// A dense form with integer coefficients uniform in `[-height, height]`,
/// resampled until nonzero.
pub fn random_form(n: usize, d: u32, height: i64, rng: &mut ChaCha12Rng) -> Form {
    let order = MonomialOrder::default_for(n);
    loop {
        let f = Form::from_terms(
            n,
            d,
            monomial_basis(n, d, &order)
                .into_iter()
                .map(|m| (m, Rat::from_integer(rng.gen_range(-height..=height).into()))),
        )
        .expect("uniform terms");
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn random_linear_form(n: usize, height: i64, rng: &mut ChaCha12Rng) -> Form {
    random_form(n, 1, height, rng)
}

/// A random linear form whose last-variable coefficient is nonzero, as
/// [`bar_modulo_linear`] requires.
pub fn random_linear_form_with_last(n: usize, height: i64, rng: &mut ChaCha12Rng) -> Form {
    loop {
        let l = random_linear_form(n, height, rng);
        if !l.coeff(&Monomial::pure_power(n, n - 1, 1)).is_zero() {
            return l;
        }
    }
}

/// `k` independent random forms spanning `W`, plus `U = W^perp`.
pub fn random_full_space(
    n: usize,
    d: u32,
    k: usize,
    height: i64,
    rng: &mut ChaCha12Rng,
) -> (FormSpace, FormSpace) {
    let order = MonomialOrder::default_for(n);
    loop {
        let forms: Vec<Form> = (0..k).map(|_| random_form(n, d, height, rng)).collect();
        let w = FormSpace::span(n, d, &order, &forms).expect("uniform forms");
        if w.dim() == k {
            let u = w.apolar_complement();
            return (u, w);
        }
    }
}

/// A random codimension-`k` subspace certified base-point-free within the
/// Hilbert bound, by rejection; returns `(U, W, rejections)`.
pub fn random_bpf_complement_space(
    n: usize,
    d: u32,
    k: usize,
    height: i64,
    t_bound: u32,
    max_rejections: u32,
    rng: &mut ChaCha12Rng,
) -> Result<(FormSpace, FormSpace, u32), Error> {
    let mut rejections = 0;
    loop {
        let (u, w) = random_full_space(n, d, k, height, rng);
        let certificate = base_point_certificate(&u, t_bound);
        if matches!(certificate.verdict, BasePointVerdict::BasePointFree { .. }) {
            return Ok((u, w, rejections));
        }
        rejections += 1;
        if rejections > max_rejections {
            return Err(Error::Genericity {
                attempts: rejections,
                what: format!("no base-point-free instance found (n={n} d={d} k={k})"),
            });
        }
    }
}

/// The image of `W` in the quotient modulo a linear form `l` with a nonzero
/// last coefficient, expressed over the first `n - 1` variables.
pub fn bar_modulo_linear(w_forms: &[Form], l: &Form) -> Result<Vec<Form>, Error> {
    let n = l.n();
    let last = Monomial::pure_power(n, n - 1, 1);
    let c_last = l.coeff(&last);
    if c_last.is_zero() {
        return Err(Error::InvalidArgument(
            "quotient form must involve the last variable".into(),
        ));
    }
    // x_n -> -(1/c_n) * (rest of l); all other variables fixed.
    let mut rows: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row = vec![Rat::zero(); n];
            if i < n - 1 {
                row[i] = Rat::one();
            }
            row
        })
        .collect();
    for (j, slot) in rows[n - 1][..n - 1].iter_mut().enumerate() {
        let c = l.coeff(&Monomial::pure_power(n, j, 1));
        *slot = -c / &c_last;
    }
    let substitution = crate::matrix::RatMatrix::from_rows(rows);
    w_forms
        .iter()
        .map(|w| {
            w.substitute(&substitution)
                .restrict_vars(n - 1)
                .ok_or_else(|| Error::InvalidArgument("substitution left the last variable".into()))
        })
        .collect()
}

/// Outcome of the power-of-a-linear-form membership test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PowerVerdict {
    /// Certified: the span contains a `d`-th power of a linear form.
    ContainsPower,
    /// Certified: it contains none.
    PowerFree,
    /// All sampled candidates failed; certification unavailable at this
    /// dimension.
    HeuristicPowerFree,
}

impl PowerVerdict {
    pub fn certified(self) -> bool {
        !matches!(self, PowerVerdict::HeuristicPowerFree)
    }

    pub fn contains_power(self) -> bool {
        matches!(self, PowerVerdict::ContainsPower)
    }
}

/// Decides whether the span of `w_forms` contains a `d`-th power of a linear
/// form. Certified for spans of dimension at most 2: dimension 1 is a
/// catalecticant rank test, dimension 2 reduces to the gcd of the 2x2 minors
/// of the pencil's first catalecticant, a binary-forms computation. Larger
/// spans are sampled and labeled heuristic.
///
/// Inputs are canonicalized through their span first; the pencil test needs
/// an independent basis.
pub fn contains_power_of_linear(w_forms: &[Form], rng: &mut ChaCha12Rng) -> PowerVerdict {
    let Some(first) = w_forms.first() else {
        return PowerVerdict::PowerFree;
    };
    let (n, d) = (first.n(), first.d());
    let order = MonomialOrder::default_for(n);
    let space = FormSpace::span(n, d, &order, w_forms).expect("uniform forms");
    let basis = space.basis_forms();
    match basis.len() {
        0 => PowerVerdict::PowerFree,
        1 => {
            if first_catalecticant_rank_le_1(&basis[0]) {
                PowerVerdict::ContainsPower
            } else {
                PowerVerdict::PowerFree
            }
        }
        2 => pencil_power_test(&basis[0], &basis[1]),
        _ => {
            // Heuristic: a small-height exhaustive sweep of candidate linear
            // forms, random integer sampling, and the certified pencil test
            // on random 2-dimensional subspaces.
            let mut direction = vec![0i64; n];
            loop {
                let mut carry = true;
                for slot in direction.iter_mut() {
                    if carry {
                        *slot += 1;
                        if *slot > 2 {
                            *slot = -2;
                        } else {
                            carry = false;
                        }
                    }
                }
                if carry {
                    break;
                }
                // Normalize to first nonzero entry positive.
                match direction.iter().find(|&&c| c != 0) {
                    Some(&c) if c > 0 => {}
                    _ => continue,
                }
                let l = Form::linear(
                    &direction
                        .iter()
                        .map(|&c| Rat::from_integer(c.into()))
                        .collect::<Vec<_>>(),
                );
                if space.contains(&l.pow(d)).expect("degree d power") {
                    return PowerVerdict::ContainsPower;
                }
            }
            for _ in 0..200 {
                let l = random_linear_form(n, 5, rng);
                if space.contains(&l.pow(d)).expect("degree d power") {
                    return PowerVerdict::ContainsPower;
                }
            }
            for _ in 0..20 {
                let a = random_combination(&basis, rng);
                let b = random_combination(&basis, rng);
                if FormSpace::span(n, d, &order, &[a.clone(), b.clone()])
                    .expect("uniform")
                    .dim()
                    != 2
                {
                    continue;
                }
                if let PowerVerdict::ContainsPower = pencil_power_test(&a, &b) {
                    return PowerVerdict::ContainsPower;
                }
            }
            PowerVerdict::HeuristicPowerFree
        }
    }
}

fn random_combination(forms: &[Form], rng: &mut ChaCha12Rng) -> Form {
    let mut acc = Form::zero(forms[0].n(), forms[0].d());
    for f in forms {
        let c = Rat::from_integer(rng.gen_range(-9i64..=9).into());
        acc = acc.add(&f.scale(&c)).expect("uniform");
    }
    acc
}

/// Coefficient rows of the first partial derivatives; `p` is a pure power
/// exactly when this matrix has rank at most 1.
fn catalecticant_rows(p: &Form) -> Vec<Vec<Rat>> {
    let n = p.n();
    let d = p.d();
    let order = MonomialOrder::default_for(n);
    let lower = monomial_basis(n, d - 1, &order);
    let col: std::collections::HashMap<&Monomial, usize> =
        lower.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = vec![vec![Rat::zero(); lower.len()]; n];
    for (m, v) in p.coeffs() {
        for (var, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] -= 1;
            let target = Monomial::new(exps);
            rows[var][col[&target]] = v * Rat::from_integer(i64::from(e).into());
        }
    }
    rows
}

fn first_catalecticant_rank_le_1(p: &Form) -> bool {
    let rows = catalecticant_rows(p);
    // All 2x2 minors must vanish.
    let anchors: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(i, r)| {
            r.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(j, _)| (i, j))
        })
        .take(1)
        .collect();
    let Some(&(ai, aj)) = anchors.first() else {
        return true; // zero form
    };
    // With a nonzero anchor, vanishing of every minor through it forces each
    // entry onto the rank-1 surface spanned by the anchor row and column.
    for (i, row) in rows.iter().enumerate() {
        for (j, _) in row.iter().enumerate() {
            if i == ai || j == aj {
                continue;
            }
            let det = &rows[ai][aj] * &rows[i][j] - &rows[ai][j] * &rows[i][aj];
            if !det.is_zero() {
                return false;
            }
        }
    }
    true
}

/// A homogeneous binary form in `(s, t)`: coefficient of `s^i t^(deg-i)` at
/// index `i`, plus the multiplicity of the root at infinity `(1:0)`.
#[derive(Clone, Debug, PartialEq)]
struct BinForm {
    /// Dehomogenized coefficients in `s`, lowest degree first; no trailing
    /// zeros.
    coeffs: Vec<Rat>,
    /// Multiplicity of `t = 0`.
    inf_mult: u32,
}

impl BinForm {
    fn from_dense(mut coeffs: Vec<Rat>, degree: u32) -> Option<BinForm> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return None; // identically zero
        }
        let inf_mult = degree - (coeffs.len() as u32 - 1);
        Some(BinForm { coeffs, inf_mult })
    }

    fn is_constant(&self) -> bool {
        self.coeffs.len() == 1 && self.inf_mult == 0 && !self.coeffs[0].is_zero()
    }
}

fn poly_gcd(mut a: Vec<Rat>, mut b: Vec<Rat>) -> Vec<Rat> {
    let trim = |v: &mut Vec<Rat>| {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b
        while a.len() >= b.len() && !a.is_empty() {
            let factor = a.last().unwrap() / b.last().unwrap();
            let shift = a.len() - b.len();
            for (i, c) in b.iter().enumerate() {
                let delta = c * &factor;
                a[shift + i] -= delta;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(lead) = a.last().cloned() {
        for c in &mut a {
            *c /= &lead;
        }
    }
    a
}

fn binform_gcd(a: &BinForm, b: &BinForm) -> Option<BinForm> {
    let coeffs = poly_gcd(a.coeffs.clone(), b.coeffs.clone());
    let inf_mult = a.inf_mult.min(b.inf_mult);
    if coeffs.is_empty() {
        return None;
    }
    Some(BinForm { coeffs, inf_mult })
}

/// Certified decision for a 2-dimensional span: the pencil `s p + t q`
/// contains a power iff all 2x2 minors of its first catalecticant share a
/// projective root, i.e. their gcd as binary forms is nonconstant.
fn pencil_power_test(p: &Form, q: &Form) -> PowerVerdict {
    let rows_p = catalecticant_rows(p);
    let rows_q = catalecticant_rows(q);
    let nrows = rows_p.len();
    let ncols = rows_p[0].len();
    // Entry (i, j) is the linear binary form rows_p[i][j] * s + rows_q[i][j] * t.
    let minor = |i1: usize, j1: usize, i2: usize, j2: usize| -> Option<BinForm> {
        let (a1, b1) = (&rows_p[i1][j1], &rows_q[i1][j1]);
        let (a2, b2) = (&rows_p[i2][j2], &rows_q[i2][j2]);
        let (a3, b3) = (&rows_p[i1][j2], &rows_q[i1][j2]);
        let (a4, b4) = (&rows_p[i2][j1], &rows_q[i2][j1]);
        // (a1 s + b1 t)(a2 s + b2 t) - (a3 s + b3 t)(a4 s + b4 t)
        let c2 = a1 * a2 - a3 * a4;
        let c1 = a1 * b2 + b1 * a2 - (a3 * b4 + b3 * a4);
        let c0 = b1 * b2 - b3 * b4;
        BinForm::from_dense(vec![c0, c1, c2], 2)
    };
    let mut gcd: Option<BinForm> = None;
    let fold = |m: Option<BinForm>, gcd: &mut Option<BinForm>| -> bool {
        // Returns true when the gcd has become trivial.
        let Some(m) = m else { return false };
        match gcd {
            None => *gcd = Some(m),
            Some(g) => match binform_gcd(g, &m) {
                Some(next) => *gcd = Some(next),
                None => unreachable!("gcd of nonzero forms is nonzero"),
            },
        }
        gcd.as_ref().is_some_and(BinForm::is_constant)
    };
    // Anchored minors first: cheap and usually decisive.
    'anchor: for i1 in 0..nrows {
        for j1 in 0..ncols {
            if rows_p[i1][j1].is_zero() && rows_q[i1][j1].is_zero() {
                continue;
            }
            for i2 in 0..nrows {
                if i2 == i1 {
                    continue;
                }
                for j2 in 0..ncols {
                    if j2 == j1 {
                        continue;
                    }
                    if fold(minor(i1, j1, i2, j2), &mut gcd) {
                        return PowerVerdict::PowerFree;
                    }
                }
            }
            break 'anchor;
        }
    }
    // Candidate root survives the anchored minors; confirm on all of them.
    for i1 in 0..nrows {
        for i2 in i1 + 1..nrows {
            for j1 in 0..ncols {
                for j2 in j1 + 1..ncols {
                    if fold(minor(i1, j1, i2, j2), &mut gcd) {
                        return PowerVerdict::PowerFree;
                    }
                }
            }
        }
    }
    // Either every minor vanishes (the whole pencil has catalecticant rank
    // at most 1) or a common root remains: both mean a power is present.
    PowerVerdict::ContainsPower
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::rng_for;

    fn linear(coeffs: &[i64]) -> Form {
        Form::linear(
            &coeffs
                .iter()
                .map(|&c| Rat::from_integer(c.into()))
                .collect::<Vec<_>>(),
        )
    }

    #[test]
    fn rank_test_detects_powers() {
        let l = linear(&[1, 2, -1]);
        assert!(first_catalecticant_rank_le_1(&l.pow(4)));
        let mut rng = rng_for(3, 0);
        for _ in 0..10 {
            let p = random_form(3, 3, 50, &mut rng);
            // A random dense cubic is essentially never a pure power.
            assert!(!first_catalecticant_rank_le_1(&p));
        }
    }

    #[test]
    fn pencil_test_certifies_both_ways() {
        let mut rng = rng_for(4, 0);
        // Pencil spanned by two honest powers contains powers.
        let a = linear(&[1, 0, 2]).pow(3);
        let b = linear(&[0, 1, -1]).pow(3);
        assert_eq!(pencil_power_test(&a, &b), PowerVerdict::ContainsPower);
        // A power hidden in a generic-looking pencil.
        let p = linear(&[2, 1, 1]).pow(3);
        let q = p.add(&linear(&[1, 1, 0]).pow(3)).unwrap();
        assert_eq!(pencil_power_test(&p, &q), PowerVerdict::ContainsPower);
        // Random pencils of dense cubics are power-free.
        for _ in 0..5 {
            let p = random_form(3, 3, 50, &mut rng);
            let q = random_form(3, 3, 50, &mut rng);
            assert_eq!(pencil_power_test(&p, &q), PowerVerdict::PowerFree);
        }
    }

    #[test]
    fn contains_power_dispatches_by_dimension() {
        let mut rng = rng_for(5, 0);
        let p = random_form(4, 3, 30, &mut rng);
        assert_eq!(
            contains_power_of_linear(std::slice::from_ref(&p), &mut rng),
            PowerVerdict::PowerFree
        );
        let power = linear(&[1, 1, 1, 1]).pow(3);
        assert_eq!(
            contains_power_of_linear(std::slice::from_ref(&power), &mut rng),
            PowerVerdict::ContainsPower
        );
        // Dimension 3 with an embedded power: the heuristic sampler must
        // still find rational powers via the pencil subtests.
        let q = random_form(4, 3, 30, &mut rng);
        let verdict = contains_power_of_linear(&[p, q, power], &mut rng);
        assert_eq!(verdict, PowerVerdict::ContainsPower);
    }

    #[test]
    fn bar_substitutes_the_last_variable() {
        let w = Form::monomial(Monomial::new(vec![1, 0, 1]));
        let l = linear(&[1, 1, 1]);
        let bar = bar_modulo_linear(&[w], &l).unwrap();
        // x1 x3 -> x1 * -(x1 + x2) = -x1^2 - x1 x2.
        let expected = Form::from_terms(
            2,
            2,
            [
                (Monomial::new(vec![2, 0]), -Rat::one()),
                (Monomial::new(vec![1, 1]), -Rat::one()),
            ],
        )
        .unwrap();
        assert_eq!(bar[0], expected);
    }

    #[test]
    fn bpf_generation_certifies() {
        let mut rng = rng_for(6, 0);
        let (u, w, _) = random_bpf_complement_space(4, 3, 2, 50, 8, 20, &mut rng).unwrap();
        assert_eq!(u.codim(), 2);
        assert_eq!(w.dim(), 2);
        let cert = base_point_certificate(&u, 8);
        assert!(matches!(
            cert.verdict,
            BasePointVerdict::BasePointFree { .. }
        ));
    }
}
