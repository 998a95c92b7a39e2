//! Exponent-vector monomials, Borel moves, divisor enumeration and the
//! monomial basis of a fixed degree.
//!
//! Variables are indexed from 0 internally; all printed and parsed forms use
//! the 1-based names `x1, x2, ...`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;

use crate::order::MonomialOrder;
use crate::Error;

/// A monomial of fixed total degree in `n` variables.
///
/// The exponent vector always has length `n` and the cached degree equals the
/// sum of the entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u8>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u8>) -> Self {
        assert!(!exps.is_empty(), "monomial needs at least one variable");
        let degree = exps.iter().map(|&e| u32::from(e)).sum();
        Monomial { exps, degree }
    }

    /// The constant monomial in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial::new(vec![0; n])
    }

    /// `x_{var}^d` (0-based `var`).
    pub fn pure_power(n: usize, var: usize, d: u8) -> Self {
        let mut exps = vec![0u8; n];
        exps[var] = d;
        Monomial::new(exps)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exps(&self) -> &[u8] {
        &self.exps
    }

    pub fn exp(&self, var: usize) -> u8 {
        self.exps[var]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.nvars(), other.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial::new(exps)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.nvars() == other.nvars() && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, or `None` when `self` does not divide `other`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(b, a)| b - a)
            .collect();
        Some(Monomial::new(exps))
    }

    /// Extends the variable count to `n`, padding new variables with
    /// exponent 0. New variables are appended at the high end.
    pub fn extend_vars(&self, n: usize) -> Monomial {
        assert!(n >= self.nvars());
        let mut exps = self.exps.clone();
        exps.resize(n, 0);
        Monomial::new(exps)
    }

    /// Restricts to the first `m` variables. Fails if any dropped variable
    /// has a positive exponent.
    pub fn restrict_vars(&self, m: usize) -> Option<Monomial> {
        if self.exps[m..].iter().any(|&e| e > 0) {
            return None;
        }
        Some(Monomial::new(self.exps[..m].to_vec()))
    }

    /// Parses the text form, e.g. `x1^2*x3` or `1` for the constant.
    pub fn parse(text: &str, n: usize) -> Result<Monomial, Error> {
        parse_monomial(text, n)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_monomial(text: &str, n: usize) -> Result<Monomial, Error> {
    let s = text.trim();
    let err = |col: usize, msg: String| Error::Parse {
        context: s.to_string(),
        col,
        msg,
    };
    if s.is_empty() {
        return Err(err(0, "empty monomial".into()));
    }
    if s == "1" {
        return Ok(Monomial::one(n));
    }
    let mut exps = vec![0u8; n];
    let bytes = s.as_bytes();
    let mut pos = 0usize;
    loop {
        if pos >= bytes.len() || bytes[pos] != b'x' {
            return Err(err(pos, "expected variable `x<index>`".into()));
        }
        pos += 1;
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if start == pos {
            return Err(err(pos, "expected variable index".into()));
        }
        let idx: usize = s[start..pos]
            .parse()
            .map_err(|_| err(start, "variable index out of range".into()))?;
        if idx == 0 || idx > n {
            return Err(err(start, format!("variable index must be in 1..={n}")));
        }
        let mut exp = 1u8;
        if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            let estart = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if estart == pos {
                return Err(err(pos, "expected exponent".into()));
            }
            exp = s[estart..pos]
                .parse()
                .map_err(|_| err(estart, "exponent out of range".into()))?;
            if exp == 0 {
                return Err(err(estart, "exponent must be positive".into()));
            }
        }
        if exps[idx - 1] != 0 {
            return Err(err(start, format!("duplicate variable x{idx}")));
        }
        exps[idx - 1] = exp;
        if pos == bytes.len() {
            break;
        }
        if bytes[pos] != b'*' {
            return Err(err(pos, "expected `*` between factors".into()));
        }
        pos += 1;
    }
    Ok(Monomial::new(exps))
}

/// Exact binomial coefficient, panicking on (absurd) overflow.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul(u128::from(n - i))
            .expect("binomial overflow");
        acc /= u128::from(i) + 1;
    }
    acc
}

/// `dim A(n)_d = C(n-1+d, d)` as a usize.
pub fn dim_forms(n: usize, d: u32) -> usize {
    usize::try_from(binomial(n as u64 - 1 + u64::from(d), u64::from(d)))
        .expect("dimension exceeds usize")
}

/// All monomials of degree `d` in `n` variables, sorted ascending by `order`.
pub fn monomial_basis(n: usize, d: u32, order: &MonomialOrder) -> Vec<Monomial> {
    assert!(n >= 1);
    let mut out = Vec::with_capacity(dim_forms(n, d));
    let mut exps = vec![0u8; n];
    gen_compositions(&mut exps, 0, d, &mut out);
    out.sort_by(|a, b| order.cmp(a, b));
    out
}

fn gen_compositions(exps: &mut [u8], var: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if var + 1 == exps.len() {
        exps[var] = remaining as u8;
        out.push(Monomial::new(exps.to_vec()));
        exps[var] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[var] = e as u8;
        gen_compositions(exps, var + 1, remaining - e, out);
    }
    exps[var] = 0;
}

/// Visits every degree-`d` divisor of `m`, highest variables filled first, and
/// stops early when the callback breaks.
pub fn for_each_degree_divisor<F>(m: &Monomial, d: u32, f: &mut F) -> ControlFlow<()>
where
    F: FnMut(&Monomial) -> ControlFlow<()>,
{
    let n = m.nvars();
    let mut exps = vec![0u8; n];
    divisor_rec(m, d, n, &mut exps, f)
}

fn divisor_rec<F>(
    m: &Monomial,
    remaining: u32,
    var: usize,
    exps: &mut Vec<u8>,
    f: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&Monomial) -> ControlFlow<()>,
{
    if var == 0 {
        if remaining == 0 {
            return f(&Monomial::new(exps.clone()));
        }
        return ControlFlow::Continue(());
    }
    // Total exponent still available below `var`; prunes dead branches.
    let cap: u32 = m.exps()[..var].iter().map(|&e| u32::from(e)).sum();
    if cap < remaining {
        return ControlFlow::Continue(());
    }
    let hi = u32::from(m.exp(var - 1)).min(remaining);
    for e in (0..=hi).rev() {
        exps[var - 1] = e as u8;
        divisor_rec(m, remaining - e, var - 1, exps, f)?;
        exps[var - 1] = 0;
    }
    ControlFlow::Continue(())
}

/// All unordered pairs `(a, b)` of degree-`d` monomials with `a * b = m`.
pub fn divisor_pairs(m: &Monomial, d: u32) -> Result<BTreeSet<(Monomial, Monomial)>, Error> {
    if m.degree() != 2 * d {
        return Err(Error::DegreeMismatch {
            expected: 2 * d,
            found: m.degree(),
        });
    }
    let mut pairs = BTreeSet::new();
    let _ = for_each_degree_divisor(m, d, &mut |a| {
        let b = a.div(m).expect("divisor enumeration yields divisors");
        if *a <= b {
            pairs.insert((a.clone(), b));
        }
        ControlFlow::Continue(())
    });
    Ok(pairs)
}

/// `x_j * m / x_i` for `j > i` (0-based), the upward Borel exchange.
pub fn borel_move_up(m: &Monomial, i: usize, j: usize) -> Result<Monomial, Error> {
    if j <= i || j >= m.nvars() {
        return Err(Error::BadBorelMove { i: i + 1, j: j + 1 });
    }
    if m.exp(i) == 0 {
        return Err(Error::BadBorelMove { i: i + 1, j: j + 1 });
    }
    let mut exps = m.exps().to_vec();
    exps[i] -= 1;
    exps[j] += 1;
    Ok(Monomial::new(exps))
}

/// Visits every `x_i * m / x_j` with `i < j`, the downward exchanges.
pub fn for_each_borel_down_move<F>(m: &Monomial, f: &mut F) -> ControlFlow<()>
where
    F: FnMut(Monomial) -> ControlFlow<()>,
{
    for j in 0..m.nvars() {
        if m.exp(j) == 0 {
            continue;
        }
        for i in 0..j {
            let mut exps = m.exps().to_vec();
            exps[j] -= 1;
            exps[i] += 1;
            f(Monomial::new(exps))?;
        }
    }
    ControlFlow::Continue(())
}

/// True iff `W` is closed under all downward exchanges (replacing a variable
/// by any smaller one stays inside `W`).
pub fn is_borel_down_closed<'a, I>(members: I) -> Result<bool, Error>
where
    I: IntoIterator<Item = &'a Monomial>,
{
    let set: BTreeSet<&Monomial> = members.into_iter().collect();
    let mut degree = None;
    for m in &set {
        match degree {
            None => degree = Some((m.nvars(), m.degree())),
            Some(sig) if sig != (m.nvars(), m.degree()) => {
                return Err(Error::MixedDegrees);
            }
            _ => {}
        }
    }
    for m in &set {
        let closed = for_each_borel_down_move(m, &mut |down| {
            if set.contains(&down) {
                ControlFlow::Continue(())
            } else {
                ControlFlow::Break(())
            }
        });
        if closed.is_break() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::MonomialOrder;

    fn m(exps: &[u8]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn basis_counts_match_binomial() {
        for n in 1..=6 {
            for d in 0..=9u32 {
                let basis = monomial_basis(n, d, &MonomialOrder::default_for(n));
                assert_eq!(basis.len(), dim_forms(n, d), "n={n} d={d}");
            }
        }
        assert_eq!(dim_forms(6, 9), 2002);
    }

    #[test]
    fn default_order_endpoints() {
        for n in 2..=5 {
            for d in 1..=6u32 {
                let basis = monomial_basis(n, d, &MonomialOrder::default_for(n));
                assert_eq!(basis[0], Monomial::pure_power(n, 0, d as u8));
                assert_eq!(
                    *basis.last().unwrap(),
                    Monomial::pure_power(n, n - 1, d as u8)
                );
            }
        }
    }

    #[test]
    fn basis_n2_d2_ascending() {
        let basis = monomial_basis(2, 2, &MonomialOrder::default_for(2));
        assert_eq!(basis, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
    }

    #[test]
    fn divisor_pairs_pure_power() {
        for d in 2..=6u32 {
            let big = Monomial::pure_power(3, 0, (2 * d) as u8);
            let pairs = divisor_pairs(&big, d).unwrap();
            assert_eq!(pairs.len(), 1);
            let only = pairs.iter().next().unwrap();
            assert_eq!(only.0, only.1);
        }
    }

    #[test]
    fn divisor_pairs_two_factorizations() {
        // x1^{2d-2} x2 x3 factors as x1^d * (x1^{d-2} x2 x3) and
        // (x1^{d-1} x2)(x1^{d-1} x3) once d >= 5.
        for d in 5..=7u32 {
            let mono = m(&[(2 * d - 2) as u8, 1, 1]);
            assert_eq!(divisor_pairs(&mono, d).unwrap().len(), 2);
        }
    }

    #[test]
    fn divisor_pairs_squarefree() {
        let pairs = divisor_pairs(&m(&[1, 1, 1, 1]), 2).unwrap();
        assert_eq!(pairs.len(), 3);
    }

    #[test]
    fn divisor_pairs_against_brute_force() {
        let order = MonomialOrder::default_for(3);
        for d in 1..=3u32 {
            for big in monomial_basis(3, 2 * d, &order) {
                let pairs = divisor_pairs(&big, d).unwrap();
                let mut expected = BTreeSet::new();
                for a in monomial_basis(3, d, &order) {
                    if let Some(b) = a.div(&big) {
                        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
                        expected.insert((lo, hi));
                    }
                }
                assert_eq!(pairs, expected, "m={big}");
            }
        }
    }

    #[test]
    fn divisor_degree_mismatch_rejected() {
        assert!(divisor_pairs(&m(&[2, 1]), 2).is_err());
    }

    #[test]
    fn borel_moves() {
        assert_eq!(borel_move_up(&m(&[2, 0]), 0, 1).unwrap(), m(&[1, 1]));
        assert_eq!(borel_move_up(&m(&[1, 0, 1]), 0, 1).unwrap(), m(&[0, 1, 1]));
        assert_eq!(borel_move_up(&m(&[0, 3, 0]), 1, 2).unwrap(), m(&[0, 2, 1]));
        assert!(borel_move_up(&m(&[0, 2]), 1, 0).is_err());
        assert!(borel_move_up(&m(&[0, 2]), 0, 1).is_err());
    }

    #[test]
    fn down_closure_checks() {
        for d in 1..=4 {
            let w = [Monomial::pure_power(2, 0, d)];
            assert!(is_borel_down_closed(&w).unwrap());
        }
        let w = [m(&[1, 1])];
        assert!(!is_borel_down_closed(&w).unwrap());
        // Complement of the five-monomial maximizer at d=3.
        let w = [
            m(&[3, 0, 0]),
            m(&[2, 1, 0]),
            m(&[2, 0, 1]),
            m(&[1, 2, 0]),
            m(&[1, 1, 1]),
        ];
        assert!(is_borel_down_closed(&w).unwrap());
        let mixed = [m(&[2, 0]), m(&[1, 0])];
        assert!(is_borel_down_closed(&mixed).is_err());
    }

    #[test]
    fn down_closure_matches_fixpoint_closure() {
        // Closing a set under all down moves and comparing with the original
        // set is an independent route to the same predicate.
        let order = MonomialOrder::default_for(3);
        let basis = monomial_basis(3, 3, &order);
        let nsets = 1usize << basis.len().min(10);
        for mask in 0..nsets {
            let w: Vec<Monomial> = basis
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, m)| m.clone())
                .collect();
            let mut closure: BTreeSet<Monomial> = w.iter().cloned().collect();
            loop {
                let mut grew = false;
                for mono in closure.clone() {
                    let _ = for_each_borel_down_move(&mono, &mut |down| {
                        grew |= closure.insert(down);
                        ControlFlow::Continue(())
                    });
                }
                if !grew {
                    break;
                }
            }
            let closed = closure.len() == w.len();
            assert_eq!(is_borel_down_closed(&w).unwrap(), closed, "mask={mask}");
        }
    }

    #[test]
    fn text_roundtrip() {
        let order = MonomialOrder::default_for(4);
        for d in 0..=5u32 {
            for mono in monomial_basis(4, d, &order) {
                let text = mono.to_string();
                assert_eq!(Monomial::parse(&text, 4).unwrap(), mono);
            }
        }
        assert_eq!(Monomial::parse("x1^2*x3", 3).unwrap(), m(&[2, 0, 1]));
        assert_eq!(Monomial::parse("x2", 2).unwrap(), m(&[0, 1]));
        assert!(Monomial::parse("x4", 3).is_err());
        assert!(Monomial::parse("x1*x1", 2).is_err());
        assert!(Monomial::parse("x1^0", 2).is_err());
        assert!(Monomial::parse("", 2).is_err());
        assert!(Monomial::parse("x1+x2", 2).is_err());
    }
}
