//! The registered checks, one per constructive statement.

use num::BigUint;
use rand::Rng;
use rand_chacha::ChaCha12Rng;

use super::random::{
    bar_modulo_linear, contains_power_of_linear, random_bpf_complement_space, random_form,
    random_full_space, random_linear_form, random_linear_form_with_last,
};
use super::{with_agreement, CheckDef, CheckParams, TrialOutcome, TrialRecord};
use crate::formspace::{Form, FormSpace};
use crate::hilbert::hilbert_table;
use crate::interchange::write_space;
use crate::macaulay::{green_restriction_bound, macaulay_growth_bound};
use crate::monomial::{dim_forms, Monomial};
use crate::order::MonomialOrder;
use crate::Error;

const MAX_REJECTIONS: u32 = 200;

fn ord(n: usize) -> MonomialOrder {
    MonomialOrder::default_for(n)
}

/// `l * A_{d-1}`, the degree-`d` slice of the principal ideal.
fn linear_times_forms(l: &Form, d: u32) -> FormSpace {
    let n = l.n();
    FormSpace::span(n, 1, &ord(n), std::slice::from_ref(l))
        .expect("linear form")
        .product_space(&FormSpace::full(n, d - 1, &ord(n)))
        .expect("compatible")
}

fn persist(record: &mut TrialRecord, role: &str, space: &FormSpace) {
    record.payloads.push((role.to_string(), write_space(space)));
}

fn persist_failure_spaces(record: &mut TrialRecord, u: &FormSpace, w: &FormSpace) {
    persist(record, "complement", w);
    if u.dim() <= 200 {
        persist(record, "space", u);
    }
}

/// Marks a trial whose genericity protocol exhausted its budget; reported as
/// a violation, never as a theorem failure.
fn genericity_exhausted(record: &mut TrialRecord, err: &Error) {
    record.outcome = TrialOutcome::OutsideHypothesis;
    record.genericity_resamples += 1;
    record.observe("genericity_exhausted", err);
}

fn require(cond: bool, msg: &str) -> Result<(), Error> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidArgument(msg.to_string()))
    }
}

fn base_validate(p: &CheckParams) -> Result<(), Error> {
    require(p.n >= 2, "need at least two variables")?;
    require(p.d >= 2, "need degree at least two")?;
    require(p.height >= 1, "coefficient height must be positive")?;
    require(
        p.genericity_budget >= 1,
        "genericity budget must be positive",
    )
}

fn validate_k(p: &CheckParams) -> Result<(), Error> {
    base_validate(p)?;
    require(p.k >= 1, "need codimension at least one")?;
    require(
        p.k < dim_forms(p.n, p.d),
        "codimension must leave a nonzero subspace",
    )
}

// --- codimension 1 -------------------------------------------------------

fn run_codim1_bpf(p: &CheckParams, _t: u64, rng: &mut ChaCha12Rng, rec: &mut TrialRecord) {
    // W = span(q) with q certified not a power, so U = q^perp is
    // base-point-free of codimension 1.
    let mut rejections = 0;
    let (u, w) = loop {
        let q = random_form(p.n, p.d, p.height, rng);
        if contains_power_of_linear(std::slice::from_ref(&q), rng).contains_power() {
            rejections += 1;
            if rejections > MAX_REJECTIONS {
                genericity_exhausted(
                    rec,
                    &Error::Genericity {
                        attempts: rejections,
                        what: "power-free quadric generation".into(),
                    },
                );
                return;
            }
            continue;
        }
        let w = FormSpace::span(p.n, p.d, &ord(p.n), &[q]).expect("one form");
        break (w.apolar_complement(), w);
    };
    rec.rejected_instances = rejections;
    let c = u.square().codim();
    rec.observe("codim_usq", c);
    let bound = if p.d >= 3 { 1 } else { 2 };
    if c > bound {
        rec.outcome = TrialOutcome::Fail;
        persist_failure_spaces(rec, &u, &w);
    }
}

fn run_codim1_bp(p: &CheckParams, _t: u64, rng: &mut ChaCha12Rng, rec: &mut TrialRecord) {
    let l = random_linear_form(p.n, p.height, rng);
    let power = l.pow(p.d);
    let w = FormSpace::span(p.n, p.d, &ord(p.n), &[power]).expect("one form");
    let u = w.apolar_complement();
    let c = u.square().codim();
    rec.observe("codim_usq", c);
    if c != p.n {
        rec.outcome = TrialOutcome::Fail;
        persist_failure_spaces(rec, &u, &w);
    }
}

fn run_codim2_bpf(p: &CheckParams, _t: u64, rng: &mut ChaCha12Rng, rec: &mut TrialRecord) {
    let (u, w, rejections) = match random_bpf_complement_space(
        p.n,
        p.d,
        2,
        p.height,
        p.hilbert_bound(),
        MAX_REJECTIONS,
        rng,
    ) {
        Ok(v) => v,
        Err(e) => return genericity_exhausted(rec, &e),
    };
    rec.rejected_instances = rejections;
    let c = u.square().codim();
    rec.observe("codim_usq", c);
    let bound = if p.d == 2 { 6 } else { 4 };
    if c > bound {
        rec.outcome = TrialOutcome::Fail;
        persist_failure_spaces(rec, &u, &w);
    }
}

// --- variable and degree reduction ---------------------------------------

fn run_var_reduction(p: &CheckParams, _t: u64, rng: &mut ChaCha12Rng, rec: &mut TrialRecord) {
    let m = p.m.unwrap_or(p.k.max(2));
    // The hypothesis requires codim U' = codim U; random coordinates achieve
    // it for k <= m, and violations are resampled.
    let mut resamples = 0;
    let (u, u_prime) = loop {
        let (u, _) = random_full_space(p.n, p.d, p.k, p.height, rng);
        let u_prime = u.intersect_with_first_vars(m).expect("m validated");
        if u_prime.codim() == p.k {
            break (u, u_prime);
        }
        resamples += 1;
        if resamples >= p.genericity_budget {
            return genericity_exhausted(
                rec,
                &Error::Genericity {
                    attempts: resamples,
                    what: "intersection kept dropping codimension".into(),
                },
            );
        }
    };
    rec.genericity_resamples = resamples;
    let lhs = u.square().codim();
    let mixed = u_prime
        .product_space(&FormSpace::full(m, p.d - 1, &ord(m)))
        .expect("compatible")
        .codim();
    let rhs = (p.n - m) * mixed + u_prime.square().codim();
    rec.observe("codim_usq", lhs);
    rec.observe("mixed_codim", mixed);
    rec.observe("bound", rhs);
    if lhs > rhs {
        rec.outcome = TrialOutcome::Fail;
        persist(rec, "space", &u);
    }
}

fn run_quotient_generic(p: &CheckParams, _t: u64, rng: &mut ChaCha12Rng, rec: &mut TrialRecord) {
    let (u, w) = random_full_space(p.n, p.d, p.k, p.height, rng);
    let sampled = with_agreement(p.genericity_budget, || {
        let l = random_linear_form(p.n, p.height, rng);
        let sum_dim = u.sum(&linear_times_forms(&l, p.d))?.dim();
        let quotient_codim = u.ideal_quotient_by_linear(&l)?.codim();
        Ok((sum_dim, quotient_codim))
    });
    let ((sum_dim, quotient_codim), violations) = match sampled {
        Ok(v) => v,
        Err(e) => return genericity_exhausted(rec, &e),
    };
    rec.genericity_resamples = violations;
    rec.observe("sum_dim", sum_dim);
    rec.observe("quotient_codim", quotient_codim);
    if sum_dim != dim_forms(p.n, p.d) || quotient_codim != p.k {
        rec.outcome = TrialOutcome::Fail;
        persist_failure_spaces(rec, &u, &w);
    }
}

fn run_deg_reduction(p: &CheckParams, _t: u64, rng: &mut ChaCha12Rng, rec: &mut TrialRecord) {
    let (u, w) = random_full_space(p.n, p.d, p.k, p.height, rng);
    let c_usq = u.square().codim();
    let sampled = with_agreement(p.genericity_budget, || {
        let l = random_linear_form(p.n, p.height, rng);
        let v = u.ideal_quotient_by_linear(&l)?;
        let c_uv = u.product_space(&v)?.codim();
        let c_vsq = v.square().codim();
        Ok((v.codim(), c_uv, c_vsq))
    });
    let ((v_codim, c_uv, c_vsq), violations) = match sampled {
        Ok(v) => v,
        Err(e) => return genericity_exhausted(rec, &e),
    };
    rec.genericity_resamples = violations;
    rec.observe("codim_usq", c_usq);
    rec.observe("codim_uv", c_uv);
    rec.observe("codim_vsq", c_vsq);
    rec.observe("v_codim", v_codim);
    let mut ok = c_usq <= c_uv;
    if p.k < p.d as usize {
        ok &= c_usq <= c_vsq;
    }
    if !ok {
        rec.outcome = TrialOutcome::Fail;
        persist_failure_spaces(rec, &u, &w);
    }
}

// --- lifting ---------------------------------------------------------------

fn run_lift_formula(p: &CheckParams, t: u64, rng: &mut ChaCha12Rng, rec: &mut TrialRecord) {
    // Alternate between fully random complements and complements forced to
    // contain a power, so the correction term h_{2d-1} is exercised both at
    // zero and at positive values.
    let (u, w) = if t % 2 == 1 {
        loop {
            let l = random_linear_form(p.n, p.height, rng);
            let mut forms = vec![l.pow(p.d)];
            for _ in 1..p.k {
                forms.push(random_form(p.n, p.d, p.height, rng));
            }
            let w = FormSpace::span(p.n, p.d, &ord(p.n), &forms).expect("uniform");
            if w.dim() == p.k {
                break (w.apolar_complement(), w);
            }
        }
    } else {
        random_full_space(p.n, p.d, p.k, p.height, rng)
    };
    let base = u.square().codim();
    let h = hilbert_table(&u, 2 * p.d - 1).value(2 * p.d - 1);
    let lifted = u.lift(p.levels);
    let lifted_codim = lifted.codim();
    let lifted_square = lifted.square().codim();
    rec.observe("codim_usq", base);
    rec.observe("h_2d_minus_1", h);
    rec.observe("lifted_codim_usq", lifted_square);
    if lifted_codim != u.codim() || lifted_square != base + p.levels * h {
        rec.outcome = TrialOutcome::Fail;
        persist_failure_spaces(rec, &u, &w);
    }
}

fn run_hf_codim2_quadrics(p: &CheckParams, _t: u64, rng: &mut ChaCha12Rng, rec: &mut TrialRecord) {
    let (u, w, rejections) =
        match random_bpf_complement_space(p.n, 2, 2, p.height, 6, MAX_REJECTIONS, rng) {
            Ok(v) => v,
            Err(e) => return genericity_exhausted(rec, &e),
        };
    rec.rejected_instances = rejections;
    let table = hilbert_table(&u, 4);
    rec.observe(
        "hilbert",
        table
            .values()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(","),
    );
    if table.values() != [1, p.n, 2, 0, 0] {
        rec.outcome = TrialOutcome::Fail;
        persist_failure_spaces(rec, &u, &w);
    }
}

// --- the dual problem -------------------------------------------------------

/// `F * A_1` for a given `F`.
fn times_linear_space(f: &Form) -> FormSpace {
    let n = f.n();
    FormSpace::span(n, f.d(), &ord(n), std::slice::from_ref(f))
        .expect("one form")
        .product_space(&FormSpace::full(n, 1, &ord(n)))
        .expect("compatible")
}

/// Whether `W = F A_1` for some `F`; decided through the common quotient
/// `C = cap_i (W : x_i)`, which is nonzero exactly for that shape when the
/// dimensions already match.
fn product_shape_witness(w: &FormSpace) -> Option<Form> {
    let n = w.n();
    let mut common: Option<FormSpace> = None;
    for var in 0..n {
        let x = Form::monomial(Monomial::pure_power(n, var, 1));
        let q = w.ideal_quotient_by_linear(&x).expect("nonzero variable");
        common = Some(match common {
            None => q,
            Some(c) => c.intersect(&q).expect("same degree"),
        });
    }
    let common = common.expect("at least one variable");
    common
        .basis_forms()
        .into_iter()
        .find(|f| times_linear_space(f) == *w)
}

fn run_restriction_dichotomy(
    p: &CheckParams,
    t: u64,
    rng: &mut ChaCha12Rng,
    rec: &mut TrialRecord,
) {
    // Even trials draw a random W of dimension k; odd trials with k = n force
    // the exceptional shape W = F A_1.
    let w = if t % 2 == 1 && p.k == p.n {
        loop {
            let f = random_form(p.n, p.d - 1, p.height, rng);
            let w = times_linear_space(&f);
            if w.dim() == p.n {
                rec.observe("flavor", "product-shape");
                break w;
            }
        }
    } else {
        rec.observe("flavor", "random");
        random_full_space(p.n, p.d, p.k, p.height, rng).1
    };
    let w_forms = w.basis_forms();
    let sampled = with_agreement(p.genericity_budget, || {
        let l = random_linear_form_with_last(p.n, p.height, rng);
        let bar = bar_modulo_linear(&w_forms, &l)?;
        Ok(FormSpace::span(p.n - 1, p.d, &ord(p.n - 1), &bar)?.dim())
    });
    let (bar_dim, violations) = match sampled {
        Ok(v) => v,
        Err(e) => return genericity_exhausted(rec, &e),
    };
    rec.genericity_resamples = violations;
    rec.observe("bar_dim", bar_dim);
    let ok = if bar_dim == p.k {
        true
    } else if bar_dim + 1 == p.k {
        // Dropping dimension is allowed only for the product shape.
        product_shape_witness(&w).is_some()
    } else {
        false
    };
    if !ok {
        rec.outcome = TrialOutcome::Fail;
        persist(rec, "complement", &w);
    }
}

fn run_quotient_vanishes(p: &CheckParams, _t: u64, rng: &mut ChaCha12Rng, rec: &mut TrialRecord) {
    let (_, w) = random_full_space(p.n, p.d, p.k, p.height, rng);
    let sampled = with_agreement(p.genericity_budget, || {
        let l = random_linear_form(p.n, p.height, rng);
        Ok(w.ideal_quotient_by_linear(&l)?.dim())
    });
    let (dim_quotient, violations) = match sampled {
        Ok(v) => v,
        Err(e) => return genericity_exhausted(rec, &e),
    };
    rec.genericity_resamples = violations;
    rec.observe("quotient_dim", dim_quotient);
    if dim_quotient != 0 {
        rec.outcome = TrialOutcome::Fail;
        persist(rec, "complement", &w);
    }
}

fn run_gin_counting(p: &CheckParams, _t: u64, rng: &mut ChaCha12Rng, rec: &mut TrialRecord) {
    let (u, w) = random_full_space(p.n, p.d, p.k, p.height, rng);
    let gin_seed: u64 = rng.gen();
    let gin = match u.generic_initial_monomials(p.d, gin_seed, p.height, p.genericity_budget) {
        Ok(g) => g,
        Err(e) => return genericity_exhausted(rec, &e),
    };
    let complement_divisible = crate::monomial::monomial_basis(p.n, p.d, &ord(p.n))
        .into_iter()
        .filter(|m| !gin.contains(m) && m.exp(p.n - 1) > 0)
        .count();
    let sampled = with_agreement(p.genericity_budget, || {
        let l = random_linear_form(p.n, p.height, rng);
        Ok(w.ideal_quotient_by_linear(&l)?.dim())
    });
    let (dim_quotient, violations) = match sampled {
        Ok(v) => v,
        Err(e) => return genericity_exhausted(rec, &e),
    };
    rec.genericity_resamples = violations;
    rec.observe("gin_complement_divisible", complement_divisible);
    rec.observe("quotient_dim", dim_quotient);
    if complement_divisible != dim_quotient {
        rec.outcome = TrialOutcome::Fail;
        persist_failure_spaces(rec, &u, &w);
    }
}

fn sample_power_free_w(
    p: &CheckParams,
    rng: &mut ChaCha12Rng,
    rec: &mut TrialRecord,
) -> Option<FormSpace> {
    let mut rejections = 0;
    loop {
        let (_, w) = random_full_space(p.n, p.d, p.k, p.height, rng);
        let verdict = contains_power_of_linear(&w.basis_forms(), rng);
        if !verdict.contains_power() {
            rec.observe(
                "power_test",
                if verdict.certified() {
                    "certified"
                } else {
                    "heuristic"
                },
            );
            rec.rejected_instances = rejections;
            return Some(w);
        }
        rejections += 1;
        if rejections > MAX_REJECTIONS {
            genericity_exhausted(
                rec,
                &Error::Genericity {
                    attempts: rejections,
                    what: "power-free complement generation".into(),
                },
            );
            return None;
        }
    }
}

/// Bars `W` by an agreed generic linear form and reports whether the image
/// contains a power (certified flag included in the agreement).
fn bar_power_outcome(
    p: &CheckParams,
    w_forms: &[Form],
    rng: &mut ChaCha12Rng,
) -> Result<((bool, bool), u32), Error> {
    with_agreement(p.genericity_budget, || {
        let l = random_linear_form_with_last(p.n, p.height, rng);
        let bar = bar_modulo_linear(w_forms, &l)?;
        let verdict = contains_power_of_linear(&bar, rng);
        Ok((verdict.contains_power(), verdict.certified()))
    })
}

fn run_stay_bpf(p: &CheckParams, _t: u64, rng: &mut ChaCha12Rng, rec: &mut TrialRecord) {
    let Some(w) = sample_power_free_w(p, rng, rec) else {
        return;
    };
    let outcome = match bar_power_outcome(p, &w.basis_forms(), rng) {
        Ok(v) => v,
        Err(e) => return genericity_exhausted(rec, &e),
    };
    let ((bar_has_power, certified), violations) = outcome;
    rec.genericity_resamples += violations;
    rec.observe("bar_has_power", bar_has_power);
    rec.observe(
        "bar_test",
        if certified { "certified" } else { "heuristic" },
    );
    if p.n > 3 * p.k {
        if bar_has_power {
            rec.outcome = TrialOutcome::Fail;
            persist(rec, "complement", &w);
        }
    } else {
        rec.outcome = TrialOutcome::OutsideHypothesis;
    }
}

fn m_3k_k_k(k: usize) -> usize {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<usize, usize>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&v) = cache.lock().unwrap().get(&k) {
        return v;
    }
    let v = crate::stable::m_value(3 * k, k as u32, k)
        .expect("feasible bound cell")
        .0;
    cache.lock().unwrap().insert(k, v);
    v
}

fn run_main_bound(p: &CheckParams, _t: u64, rng: &mut ChaCha12Rng, rec: &mut TrialRecord) {
    let (u, w, rejections) = match random_bpf_complement_space(
        p.n,
        p.d,
        p.k,
        p.height,
        p.hilbert_bound(),
        MAX_REJECTIONS,
        rng,
    ) {
        Ok(v) => v,
        Err(e) => return genericity_exhausted(rec, &e),
    };
    rec.rejected_instances = rejections;
    let c = u.square().codim();
    let uniform = m_3k_k_k(p.k);
    let sharp = match (p.k, p.d) {
        (1, 2) => Some(2),
        (1, _) => Some(1),
        (2, 2) => Some(6),
        (2, _) => Some(4),
        _ => None,
    };
    rec.observe("codim_usq", c);
    rec.observe("uniform_bound", uniform);
    if let Some(s) = sharp {
        rec.observe("sharp_bound", s);
    }
    if c > uniform || sharp.is_some_and(|s| c > s) {
        rec.outcome = TrialOutcome::Fail;
        persist_failure_spaces(rec, &u, &w);
    }
}

// --- growth bounds -----------------------------------------------------------

fn random_codim(p: &CheckParams, rng: &mut ChaCha12Rng) -> usize {
    let ambient = dim_forms(p.n, p.d);
    rng.gen_range(1..=ambient.saturating_sub(1).clamp(1, 8))
}

fn run_macaulay_growth(p: &CheckParams, _t: u64, rng: &mut ChaCha12Rng, rec: &mut TrialRecord) {
    let k = random_codim(p, rng);
    let (u, w) = random_full_space(p.n, p.d, k, p.height, rng);
    let table = hilbert_table(&u, p.d + 2);
    rec.observe("k", k);
    rec.observe(
        "hilbert",
        table
            .values()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(","),
    );
    let ok = (p.d..p.d + 2).all(|i| {
        BigUint::from(table.value(i + 1))
            <= macaulay_growth_bound(&BigUint::from(table.value(i)), i)
    });
    if !ok {
        rec.outcome = TrialOutcome::Fail;
        persist_failure_spaces(rec, &u, &w);
    }
}

fn run_green_bound(p: &CheckParams, _t: u64, rng: &mut ChaCha12Rng, rec: &mut TrialRecord) {
    let k = random_codim(p, rng);
    let (u, w) = random_full_space(p.n, p.d, k, p.height, rng);
    let sampled = with_agreement(p.genericity_budget, || {
        let l = random_linear_form(p.n, p.height, rng);
        Ok(u.sum(&linear_times_forms(&l, p.d))?.codim())
    });
    let (c_d, violations) = match sampled {
        Ok(v) => v,
        Err(e) => return genericity_exhausted(rec, &e),
    };
    rec.genericity_resamples = violations;
    rec.observe("k", k);
    rec.observe("restricted_codim", c_d);
    if BigUint::from(c_d) > green_restriction_bound(&BigUint::from(k), p.d) {
        rec.outcome = TrialOutcome::Fail;
        persist_failure_spaces(rec, &u, &w);
    }
}

// --- the conjecture ---------------------------------------------------------

/// Certified necessary condition for `W = L^{d-1} * (linear forms)`: all
/// first partials of `W` lie in an at most `(k+1)`-dimensional space.
fn matches_excluded_shape(w: &FormSpace) -> bool {
    let n = w.n();
    let d = w.d();
    let order = ord(n);
    let mut partials = Vec::new();
    for f in w.basis_forms() {
        for var in 0..n {
            let mut terms = Vec::new();
            for (m, v) in f.coeffs() {
                let e = m.exp(var);
                if e == 0 {
                    continue;
                }
                let mut exps = m.exps().to_vec();
                exps[var] -= 1;
                terms.push((
                    Monomial::new(exps),
                    v * crate::Rat::from_integer(i64::from(e).into()),
                ));
            }
            partials.push(Form::from_terms(n, d - 1, terms).expect("uniform"));
        }
    }
    let span = FormSpace::span(n, d - 1, &order, &partials).expect("uniform");
    span.dim() <= w.dim() + 1
}

fn run_conj_bpf_intersection(
    p: &CheckParams,
    _t: u64,
    rng: &mut ChaCha12Rng,
    rec: &mut TrialRecord,
) {
    let Some(w) = sample_power_free_w(p, rng, rec) else {
        return;
    };
    let outcome = match bar_power_outcome(p, &w.basis_forms(), rng) {
        Ok(v) => v,
        Err(e) => return genericity_exhausted(rec, &e),
    };
    let ((bar_has_power, certified), violations) = outcome;
    rec.genericity_resamples += violations;
    rec.observe("bar_has_power", bar_has_power);
    rec.observe(
        "bar_test",
        if certified { "certified" } else { "heuristic" },
    );
    if !bar_has_power {
        return;
    }
    let excluded = p.n == p.k + 1 && matches_excluded_shape(&w);
    rec.observe("excluded_shape", excluded);
    if !excluded {
        rec.outcome = TrialOutcome::Candidate;
        persist(rec, "complement", &w);
    }
}

// --- registry ---------------------------------------------------------------

macro_rules! defaults {
    ($n:expr, $d:expr, $k:expr $(, $field:ident = $value:expr)*) => {{
        fn f() -> CheckParams {
            #[allow(unused_mut)]
            let mut p = CheckParams::new($n, $d, $k);
            $(p.$field = $value;)*
            p
        }
        f
    }};
}

pub(super) static REGISTRY: &[CheckDef] = &[
    CheckDef {
        id: "codim1-bpf",
        summary: "base-point-free codimension 1: codim U^2 <= 1 (d >= 3), <= 2 (d = 2)",
        defaults: defaults!(3, 3, 1),
        validate: |p| base_validate(p),
        run_trial: run_codim1_bpf,
    },
    CheckDef {
        id: "codim1-bp",
        summary: "complement spanned by a d-th power: codim U^2 = n exactly",
        defaults: defaults!(4, 3, 1),
        validate: |p| base_validate(p),
        run_trial: run_codim1_bp,
    },
    CheckDef {
        id: "codim2-bpf",
        summary: "base-point-free codimension 2: codim U^2 <= 6 (d = 2), <= 4 (d >= 3)",
        defaults: defaults!(4, 3, 2),
        validate: |p| {
            base_validate(p)?;
            require(
                p.d >= 3 || p.n >= 3,
                "base-point-free codimension 2 at d = 2 needs n >= 3",
            )
        },
        run_trial: run_codim2_bpf,
    },
    CheckDef {
        id: "var-reduction",
        summary: "variable reduction: codim U^2 <= (n-m) codim U'R_{d-1} + codim U'^2",
        defaults: defaults!(4, 3, 2, m = Some(2)),
        validate: |p| {
            validate_k(p)?;
            let m = p.m.unwrap_or(p.k.max(2));
            require(m >= 2 && m <= p.n, "need 2 <= m <= n")?;
            require(p.k <= m, "need k <= m so the intersection keeps codimension")
        },
        run_trial: run_var_reduction,
    },
    CheckDef {
        id: "quotient-generic",
        summary: "generic linear forms: <U, l>_d = A_d and codim (U : l) = codim U for k <= d",
        defaults: defaults!(3, 4, 2),
        validate: |p| {
            validate_k(p)?;
            require(p.k <= p.d as usize, "needs k <= d")
        },
        run_trial: run_quotient_generic,
    },
    CheckDef {
        id: "deg-reduction",
        summary: "degree reduction: codim U^2 <= codim UV, and <= codim V^2 for k <= d-1",
        defaults: defaults!(3, 4, 2),
        validate: |p| {
            validate_k(p)?;
            require(p.k <= p.d as usize, "needs k <= d")
        },
        run_trial: run_deg_reduction,
    },
    CheckDef {
        id: "lift-formula",
        summary: "lifting: codim (U^(l))^2 = codim U^2 + l * h_{2d-1}",
        defaults: defaults!(3, 2, 2, levels = 2),
        validate: |p| validate_k(p),
        run_trial: run_lift_formula,
    },
    CheckDef {
        id: "hf-codim2-quadrics",
        summary: "base-point-free codimension-2 quadrics have Hilbert function (1, n, 2)",
        defaults: defaults!(4, 2, 2),
        validate: |p| {
            base_validate(p)?;
            require(p.d == 2, "statement is about quadrics")?;
            require(p.n >= 3, "needs n >= 3 for base-point-free instances")
        },
        run_trial: run_hf_codim2_quadrics,
    },
    CheckDef {
        id: "restriction-dichotomy",
        summary: "generic restriction: dim W-bar is k, or k-1 with W = F A_1",
        defaults: defaults!(4, 3, 4),
        validate: |p| {
            validate_k(p)?;
            require(p.k <= p.n, "needs k <= n")
        },
        run_trial: run_restriction_dichotomy,
    },
    CheckDef {
        id: "quotient-vanishes",
        summary: "dim (W : l) = 0 for dim W = k < n and generic l",
        defaults: defaults!(4, 3, 2),
        validate: |p| {
            validate_k(p)?;
            require(p.k < p.n, "needs k < n")
        },
        run_trial: run_quotient_vanishes,
    },
    CheckDef {
        id: "gin-counting",
        summary: "monomials of gin(U)_d^perp divisible by x_n count dim (W : l)",
        defaults: defaults!(3, 2, 2),
        validate: |p| validate_k(p),
        run_trial: run_gin_counting,
    },
    CheckDef {
        id: "stay-bpf",
        summary: "for n >= 3k+1 a power-free W stays power-free modulo a generic linear form",
        defaults: defaults!(4, 3, 1),
        validate: |p| {
            validate_k(p)?;
            require(p.n >= 3, "needs n >= 3")
        },
        run_trial: run_stay_bpf,
    },
    CheckDef {
        id: "main-bound",
        summary: "base-point-free codimension k <= d-1: codim U^2 <= m(3k, k, k)",
        defaults: defaults!(4, 2, 1),
        validate: |p| {
            validate_k(p)?;
            require(
                p.k < p.d as usize,
                "uniform bound needs k <= d - 1",
            )
        },
        run_trial: run_main_bound,
    },
    CheckDef {
        id: "macaulay-growth",
        summary: "measured Hilbert growth never exceeds the Macaulay bound",
        defaults: defaults!(4, 3, 1),
        validate: |p| base_validate(p),
        run_trial: run_macaulay_growth,
    },
    CheckDef {
        id: "green-bound",
        summary: "measured generic restriction never exceeds the Green bound",
        defaults: defaults!(4, 3, 1),
        validate: |p| base_validate(p),
        run_trial: run_green_bound,
    },
    CheckDef {
        id: "conj-bpf-intersection",
        summary: "search for power-free W whose generic restriction gains a power outside the known shape",
        defaults: defaults!(4, 3, 2),
        validate: |p| {
            validate_k(p)?;
            require(p.n >= 3, "needs n >= 3")?;
            require(p.k < p.d as usize, "needs k <= d - 1")?;
            require(p.k < p.n, "needs k <= n - 1; the statement fails at k = n")
        },
        run_trial: run_conj_bpf_intersection,
    },
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::rng_for;

    #[test]
    fn variable_reduction_is_equality_on_the_full_space() {
        // The trivial instance: U = A_d has square A_{2d}, and so does every
        // restriction, giving 0 <= 0 with equality.
        for (n, d, m) in [(3usize, 2u32, 2usize), (4, 3, 2), (4, 3, 3)] {
            let u = FormSpace::full(n, d, &ord(n));
            let restricted = u.intersect_with_first_vars(m).unwrap();
            assert_eq!(restricted.codim(), 0);
            let lhs = u.square().codim();
            let mixed = restricted
                .product_space(&FormSpace::full(m, d - 1, &ord(m)))
                .unwrap()
                .codim();
            let rhs = (n - m) * mixed + restricted.square().codim();
            assert_eq!(lhs, 0);
            assert_eq!(rhs, 0);
        }
    }

    #[test]
    fn product_shape_witness_detection() {
        let mut rng = rng_for(77, 0);
        // W = F A_1 is recognized and the factor recovered up to scale.
        let f = random_form(3, 2, 20, &mut rng);
        let w = times_linear_space(&f);
        assert_eq!(w.dim(), 3);
        let witness = product_shape_witness(&w).expect("shape recognized");
        assert_eq!(times_linear_space(&witness), w);
        // A random 3-dimensional space of cubics is not of that shape.
        let (_, random_w) = random_full_space(3, 3, 3, 20, &mut rng);
        assert!(product_shape_witness(&random_w).is_none());
    }

    #[test]
    fn excluded_shape_condition() {
        let mut rng = rng_for(78, 0);
        let f = Form::linear(&[
            crate::Rat::from_integer(1.into()),
            crate::Rat::from_integer(2.into()),
            crate::Rat::from_integer(1.into()),
        ])
        .pow(3);
        let shaped = times_linear_space(&f);
        assert!(matches_excluded_shape(&shaped));
        let (_, random_w) = random_full_space(4, 4, 4, 20, &mut rng);
        assert!(!matches_excluded_shape(&random_w));
    }

    #[test]
    fn dual_problem_boundary_example() {
        // W = x3^{d-1} * span(x1, x2) in three variables is power-free, yet
        // every generic restriction acquires a power: the known boundary case
        // at n = k + 1, recognized by the shape condition.
        use crate::monomial::Monomial;
        let d = 4u32;
        let w_forms = vec![
            Form::monomial(Monomial::new(vec![1, 0, 3])),
            Form::monomial(Monomial::new(vec![0, 1, 3])),
        ];
        let mut rng = rng_for(79, 0);
        let verdict = contains_power_of_linear(&w_forms, &mut rng);
        assert!(verdict.certified() && !verdict.contains_power());
        let l = random_linear_form_with_last(3, 50, &mut rng);
        let bar = bar_modulo_linear(&w_forms, &l).unwrap();
        let verdict = contains_power_of_linear(&bar, &mut rng);
        assert!(verdict.certified() && verdict.contains_power());
        let w = FormSpace::span(3, d, &ord(3), &w_forms).unwrap();
        assert!(matches_excluded_shape(&w));
    }
}
