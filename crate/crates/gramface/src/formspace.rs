//! Subspaces of fixed-degree forms with exact rational coefficients.
//!
//! A [`FormSpace`] is stored as the canonical reduced row echelon basis over
//! the monomial basis of its degree, columns ordered descending by the active
//! monomial order. Canonical form makes subspace equality a plain comparison.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num::traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::echelon::{echelon_from_rows, Echelon, Rat, SparseRow};
use crate::matrix::RatMatrix;
use crate::monomial::{dim_forms, is_borel_down_closed, monomial_basis, Monomial};
use crate::order::MonomialOrder;
use crate::Error;

/// The monomials of one degree under one order, most significant first,
/// with reverse lookup. Shared and cached per `(n, d, order)`.
pub struct DegreeBasis {
    n: usize,
    d: u32,
    order: MonomialOrder,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
}

impl DegreeBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Monomial at a column (column 0 is the largest monomial).
    pub fn monomial(&self, col: u32) -> &Monomial {
        &self.monomials[col as usize]
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn col(&self, m: &Monomial) -> Option<u32> {
        self.index.get(m).copied()
    }
}

type BasisKey = (usize, u32, String);

fn basis_cache() -> &'static Mutex<HashMap<BasisKey, Arc<DegreeBasis>>> {
    static CACHE: OnceLock<Mutex<HashMap<BasisKey, Arc<DegreeBasis>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The shared degree basis for `(n, d, order)`.
pub fn degree_basis(n: usize, d: u32, order: &MonomialOrder) -> Arc<DegreeBasis> {
    assert_eq!(order.nvars(), n, "order must cover all variables");
    let key = (n, d, order.cache_key());
    if let Some(b) = basis_cache().lock().unwrap().get(&key) {
        return Arc::clone(b);
    }
    let mut monomials = monomial_basis(n, d, order);
    monomials.reverse(); // descending: column 0 holds the largest monomial
    let index = monomials
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i as u32))
        .collect();
    let built = Arc::new(DegreeBasis {
        n,
        d,
        order: order.clone(),
        monomials,
        index,
    });
    basis_cache()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert(built)
        .clone()
}

/// A homogeneous form with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Form {
    n: usize,
    d: u32,
    coeffs: BTreeMap<Monomial, Rat>,
}

impl Form {
    pub fn zero(n: usize, d: u32) -> Self {
        Form {
            n,
            d,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(n: usize, d: u32, terms: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = (Monomial, Rat)>,
    {
        let mut coeffs: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m, v) in terms {
            if m.nvars() != n {
                return Err(Error::VariableMismatch {
                    expected: n,
                    found: m.nvars(),
                });
            }
            if m.degree() != d {
                return Err(Error::DegreeMismatch {
                    expected: d,
                    found: m.degree(),
                });
            }
            let slot = coeffs.entry(m).or_insert_with(Rat::zero);
            *slot += v;
        }
        coeffs.retain(|_, v| !v.is_zero());
        Ok(Form { n, d, coeffs })
    }

    pub fn monomial(m: Monomial) -> Self {
        let n = m.nvars();
        let d = m.degree();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(m, Rat::one());
        Form { n, d, coeffs }
    }

    /// The linear form with the given coefficient vector.
    pub fn linear(coeffs: &[Rat]) -> Self {
        let n = coeffs.len();
        Form::from_terms(
            n,
            1,
            coeffs
                .iter()
                .enumerate()
                .filter(|&(_i, c)| !c.is_zero())
                .map(|(i, c)| (Monomial::pure_power(n, i, 1), c.clone())),
        )
        .expect("linear terms are uniform")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &BTreeMap<Monomial, Rat> {
        &self.coeffs
    }

    pub fn coeff(&self, m: &Monomial) -> Rat {
        self.coeffs.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Form) -> Result<Form, Error> {
        if self.n != other.n {
            return Err(Error::VariableMismatch {
                expected: self.n,
                found: other.n,
            });
        }
        if self.d != other.d {
            return Err(Error::DegreeMismatch {
                expected: self.d,
                found: other.d,
            });
        }
        Form::from_terms(
            self.n,
            self.d,
            self.coeffs
                .iter()
                .chain(other.coeffs.iter())
                .map(|(m, v)| (m.clone(), v.clone())),
        )
    }

    pub fn scale(&self, factor: &Rat) -> Form {
        if factor.is_zero() {
            return Form::zero(self.n, self.d);
        }
        Form {
            n: self.n,
            d: self.d,
            coeffs: self
                .coeffs
                .iter()
                .map(|(m, v)| (m.clone(), v * factor))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Form) -> Form {
        assert_eq!(self.n, other.n);
        let mut coeffs: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (ma, va) in &self.coeffs {
            for (mb, vb) in &other.coeffs {
                let m = ma.mul(mb);
                let slot = coeffs.entry(m).or_insert_with(Rat::zero);
                *slot += va * vb;
            }
        }
        coeffs.retain(|_, v| !v.is_zero());
        Form {
            n: self.n,
            d: self.d + other.d,
            coeffs,
        }
    }

    pub fn pow(&self, e: u32) -> Form {
        let mut acc = Form::from_terms(self.n, 0, [(Monomial::one(self.n), Rat::one())]).unwrap();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.n);
        let mut total = Rat::zero();
        for (m, v) in &self.coeffs {
            let mut term = v.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    term *= &point[i];
                }
            }
            total += term;
        }
        total
    }

    /// `f(Mx)` for a (not necessarily invertible) square matrix.
    pub fn substitute(&self, m: &RatMatrix) -> Form {
        assert_eq!(m.n(), self.n);
        let n = self.n;
        let images: Vec<Form> = (0..n)
            .map(|i| Form::linear(&(0..n).map(|j| m.at(i, j).clone()).collect::<Vec<_>>()))
            .collect();
        // Power tables per variable, built on demand.
        let mut powers: Vec<Vec<Form>> = (0..n)
            .map(|i| {
                vec![
                    Form::from_terms(n, 0, [(Monomial::one(n), Rat::one())]).unwrap(),
                    images[i].clone(),
                ]
            })
            .collect();
        let mut out = Form::zero(n, self.d);
        for (mono, v) in &self.coeffs {
            let mut term = Form::from_terms(n, 0, [(Monomial::one(n), Rat::one())]).unwrap();
            for (i, &e) in mono.exps().iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e]);
            }
            out = out.add(&term.scale(v)).expect("degrees agree");
        }
        out
    }

    /// Drops variables `m..n`; `None` if any appears with positive exponent.
    pub fn restrict_vars(&self, m: usize) -> Option<Form> {
        let mut terms = Vec::with_capacity(self.coeffs.len());
        for (mono, v) in &self.coeffs {
            terms.push((mono.restrict_vars(m)?, v.clone()));
        }
        Some(Form::from_terms(m, self.d, terms).expect("restriction is uniform"))
    }
}

impl std::fmt::Display for Form {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, v)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if v.is_one() && m.degree() > 0 {
                write!(f, "{m}")?;
            } else if m.degree() == 0 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}*{m}")?;
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for Form {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// The apolarity weight of a monomial: `alpha! / d!`.
fn apolar_weight(m: &Monomial) -> Rat {
    let mut num = num::BigInt::one();
    for &e in m.exps() {
        for i in 1..=i64::from(e) {
            num *= num::BigInt::from(i);
        }
    }
    let mut den = num::BigInt::one();
    for i in 1..=i64::from(m.degree()) {
        den *= num::BigInt::from(i);
    }
    Rat::new(num, den)
}

/// The apolarity pairing `<f, g> = (1/d!) f(del)(g)` of two degree-`d` forms.
///
/// On the monomial basis the pairing is diagonal with weight `alpha!/d!`, and
/// `<l^d, f> = f(u)` for a linear form `l` with coefficient vector `u`.
pub fn eval_pairing(f: &Form, g: &Form) -> Result<Rat, Error> {
    if f.n() != g.n() {
        return Err(Error::VariableMismatch {
            expected: f.n(),
            found: g.n(),
        });
    }
    if f.d() != g.d() {
        return Err(Error::DegreeMismatch {
            expected: f.d(),
            found: g.d(),
        });
    }
    let mut total = Rat::zero();
    for (m, a) in f.coeffs() {
        if let Some(b) = g.coeffs().get(m) {
            total += a * b * apolar_weight(m);
        }
    }
    Ok(total)
}

/// A subspace of the degree-`d` forms in `n` variables, held as the unique
/// reduced echelon basis over the descending monomial basis.
#[derive(Clone)]
pub struct FormSpace {
    basis: Arc<DegreeBasis>,
    rows: Vec<SparseRow>,
}

impl PartialEq for FormSpace {
    fn eq(&self, other: &Self) -> bool {
        self.basis.n == other.basis.n
            && self.basis.d == other.basis.d
            && self.basis.order == other.basis.order
            && self.rows == other.rows
    }
}

impl Eq for FormSpace {}

impl std::fmt::Debug for FormSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FormSpace(n={}, d={}, dim={}/{})",
            self.basis.n,
            self.basis.d,
            self.dim(),
            self.ambient_dim()
        )
    }
}

impl FormSpace {
    fn from_echelon(basis: Arc<DegreeBasis>, ech: Echelon) -> Self {
        FormSpace {
            basis,
            rows: ech.into_rows(),
        }
    }

    pub fn zero(n: usize, d: u32, order: &MonomialOrder) -> Self {
        FormSpace {
            basis: degree_basis(n, d, order),
            rows: Vec::new(),
        }
    }

    pub fn full(n: usize, d: u32, order: &MonomialOrder) -> Self {
        let basis = degree_basis(n, d, order);
        let rows = (0..basis.len() as u32).map(SparseRow::unit).collect();
        FormSpace { basis, rows }
    }

    /// The linear span of the given forms, all of the same `(n, d)`.
    pub fn span(n: usize, d: u32, order: &MonomialOrder, forms: &[Form]) -> Result<Self, Error> {
        let basis = degree_basis(n, d, order);
        let mut ech = Echelon::new(basis.len());
        for f in forms {
            if f.n() != n {
                return Err(Error::VariableMismatch {
                    expected: n,
                    found: f.n(),
                });
            }
            if f.d() != d {
                return Err(Error::DegreeMismatch {
                    expected: d,
                    found: f.d(),
                });
            }
            ech.insert(form_to_row(f, &basis));
        }
        Ok(FormSpace::from_echelon(basis, ech))
    }

    /// Span of a set of monomials.
    pub fn monomial_span<'a, I>(
        n: usize,
        d: u32,
        order: &MonomialOrder,
        monomials: I,
    ) -> Result<Self, Error>
    where
        I: IntoIterator<Item = &'a Monomial>,
    {
        let basis = degree_basis(n, d, order);
        let mut ech = Echelon::new(basis.len());
        for m in monomials {
            let col = basis.col(m).ok_or_else(|| Error::DegreeMismatch {
                expected: d,
                found: m.degree(),
            })?;
            ech.insert(SparseRow::unit(col));
        }
        Ok(FormSpace::from_echelon(basis, ech))
    }

    /// Span of every degree-`d` monomial except the given ones.
    pub fn monomial_complement_span(
        n: usize,
        d: u32,
        order: &MonomialOrder,
        excluded: &BTreeSet<Monomial>,
    ) -> Result<Self, Error> {
        for m in excluded {
            if m.nvars() != n {
                return Err(Error::VariableMismatch {
                    expected: n,
                    found: m.nvars(),
                });
            }
            if m.degree() != d {
                return Err(Error::DegreeMismatch {
                    expected: d,
                    found: m.degree(),
                });
            }
        }
        let basis = degree_basis(n, d, order);
        let rows = (0..basis.len() as u32)
            .filter(|&c| !excluded.contains(basis.monomial(c)))
            .map(SparseRow::unit)
            .collect();
        Ok(FormSpace { basis, rows })
    }

    pub fn n(&self) -> usize {
        self.basis.n
    }

    pub fn d(&self) -> u32 {
        self.basis.d
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.basis.order
    }

    pub fn degree_basis(&self) -> &Arc<DegreeBasis> {
        &self.basis
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.len()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn codim(&self) -> usize {
        self.ambient_dim() - self.dim()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn basis_forms(&self) -> Vec<Form> {
        self.rows.iter().map(|r| self.row_to_form(r)).collect()
    }

    pub fn row_to_form(&self, row: &SparseRow) -> Form {
        Form::from_terms(
            self.basis.n,
            self.basis.d,
            row.entries
                .iter()
                .map(|&(c, ref v)| (self.basis.monomial(c).clone(), v.clone())),
        )
        .expect("rows are uniform")
    }

    fn to_echelon(&self) -> Echelon {
        let mut ech = Echelon::new(self.basis.len());
        for row in &self.rows {
            ech.insert(row.clone());
        }
        ech
    }

    pub fn contains(&self, f: &Form) -> Result<bool, Error> {
        if f.n() != self.n() {
            return Err(Error::VariableMismatch {
                expected: self.n(),
                found: f.n(),
            });
        }
        if f.d() != self.d() {
            return Err(Error::DegreeMismatch {
                expected: self.d(),
                found: f.d(),
            });
        }
        Ok(self.to_echelon().contains(form_to_row(f, &self.basis)))
    }

    pub fn contains_space(&self, other: &FormSpace) -> bool {
        if self.n() != other.n() || self.d() != other.d() {
            return false;
        }
        let ech = self.to_echelon();
        other.rows.iter().all(|r| {
            let translated = if self.basis.order == other.basis.order {
                r.clone()
            } else {
                reindex_row(r, &other.basis, &self.basis)
            };
            ech.contains(translated)
        })
    }

    /// True iff the canonical basis consists of monomials.
    pub fn is_monomial_space(&self) -> bool {
        self.rows.iter().all(|r| r.entries.len() == 1)
    }

    pub fn monomial_set(&self) -> Option<BTreeSet<Monomial>> {
        self.is_monomial_space().then(|| {
            self.rows
                .iter()
                .map(|r| self.basis.monomial(r.entries[0].0).clone())
                .collect()
        })
    }

    /// Sum of two subspaces of the same degree.
    pub fn sum(&self, other: &FormSpace) -> Result<FormSpace, Error> {
        self.check_compatible(other)?;
        if self.d() != other.d() {
            return Err(Error::DegreeMismatch {
                expected: self.d(),
                found: other.d(),
            });
        }
        let mut ech = self.to_echelon();
        for r in &other.rows {
            ech.insert(r.clone());
        }
        Ok(FormSpace::from_echelon(Arc::clone(&self.basis), ech))
    }

    /// Intersection of two subspaces of the same degree, via apolar
    /// complements: `(A cap B) = (A^perp + B^perp)^perp`.
    pub fn intersect(&self, other: &FormSpace) -> Result<FormSpace, Error> {
        Ok(self
            .apolar_complement()
            .sum(&other.apolar_complement())?
            .apolar_complement())
    }

    fn check_compatible(&self, other: &FormSpace) -> Result<(), Error> {
        if self.n() != other.n() {
            return Err(Error::VariableMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        if self.basis.order != other.basis.order {
            return Err(Error::OrderMismatch);
        }
        Ok(())
    }

    /// The span of all pairwise products of elements of the two spaces.
    pub fn product_space(&self, other: &FormSpace) -> Result<FormSpace, Error> {
        self.check_compatible(other)?;
        Ok(product_impl(self, other, false))
    }

    /// `U^2`, the span of all products `pq` with `p, q` in the space.
    pub fn square(&self) -> FormSpace {
        product_impl(self, self, true)
    }

    /// The orthogonal complement under the apolarity pairing.
    pub fn apolar_complement(&self) -> FormSpace {
        let basis = Arc::clone(&self.basis);
        let weights: Vec<Rat> = (0..basis.len() as u32)
            .map(|c| apolar_weight(basis.monomial(c)))
            .collect();
        let scaled = self.rows.iter().map(|r| {
            SparseRow::new(
                r.entries
                    .iter()
                    .map(|&(c, ref v)| (c, v * &weights[c as usize]))
                    .collect(),
            )
        });
        let constraint = echelon_from_rows(basis.len(), scaled);
        let kernel = constraint.into_kernel();
        let ech = echelon_from_rows(basis.len(), kernel);
        FormSpace::from_echelon(basis, ech)
    }

    /// `(U : l) = { q : l q in U }` for a nonzero linear form.
    pub fn ideal_quotient_by_linear(&self, l: &Form) -> Result<FormSpace, Error> {
        if l.d() != 1 {
            return Err(Error::DegreeMismatch {
                expected: 1,
                found: l.d(),
            });
        }
        if l.n() != self.n() {
            return Err(Error::VariableMismatch {
                expected: self.n(),
                found: l.n(),
            });
        }
        if l.is_zero() {
            return Err(Error::ZeroLinearForm);
        }
        assert!(self.d() >= 1, "quotient needs degree at least 1");
        let src = degree_basis(self.n(), self.d() - 1, &self.basis.order);
        let ech = self.to_echelon();
        // Free columns of the ambient modulo this space, remapped densely.
        let mut free_pos = vec![u32::MAX; self.basis.len()];
        let mut nfree = 0u32;
        let pivots: BTreeSet<u32> = self.rows.iter().map(|r| r.entries[0].0).collect();
        for c in 0..self.basis.len() as u32 {
            if !pivots.contains(&c) {
                free_pos[c as usize] = nfree;
                nfree += 1;
            }
        }
        // Row per source monomial: the residual of l*x^beta modulo the space,
        // then a marker column identifying beta. Rows whose residual vanishes
        // span the quotient.
        let mut extended = Echelon::new(nfree as usize + src.len());
        for beta in 0..src.len() as u32 {
            let product = l.mul(&Form::monomial(src.monomial(beta).clone()));
            let residual = ech.reduce(form_to_row(&product, &self.basis));
            let mut entries: Vec<(u32, Rat)> = residual
                .entries
                .into_iter()
                .map(|(c, v)| (free_pos[c as usize], v))
                .collect();
            entries.push((nfree + beta, Rat::one()));
            extended.insert(SparseRow::new(entries));
        }
        let rows: Vec<SparseRow> = extended
            .into_rows()
            .into_iter()
            .filter(|r| r.entries[0].0 >= nfree)
            .map(|r| SparseRow::new(r.entries.into_iter().map(|(c, v)| (c - nfree, v)).collect()))
            .collect();
        Ok(FormSpace { basis: src, rows })
    }

    /// The image `{ p(M^{-1} x) : p in U }` of a coordinate change.
    pub fn apply_coordinate_change(&self, g: &RatMatrix) -> Result<FormSpace, Error> {
        if g.n() != self.n() {
            return Err(Error::VariableMismatch {
                expected: self.n(),
                found: g.n(),
            });
        }
        let inv = g.inverse()?;
        let forms: Vec<Form> = self
            .basis_forms()
            .iter()
            .map(|f| f.substitute(&inv))
            .collect();
        let out = FormSpace::span(self.n(), self.d(), &self.basis.order, &forms)?;
        debug_assert_eq!(out.dim(), self.dim());
        Ok(out)
    }

    /// Re-expresses the same subspace over a different monomial order.
    pub fn with_order(&self, order: &MonomialOrder) -> Result<FormSpace, Error> {
        if order.nvars() != self.n() {
            return Err(Error::VariableMismatch {
                expected: self.n(),
                found: order.nvars(),
            });
        }
        if *order == self.basis.order {
            return Ok(self.clone());
        }
        let target = degree_basis(self.n(), self.d(), order);
        let ech = echelon_from_rows(
            target.len(),
            self.rows
                .iter()
                .map(|r| reindex_row(r, &self.basis, &target)),
        );
        Ok(FormSpace::from_echelon(target, ech))
    }

    /// The set of leading monomials `{ in(p) : p in U }` with respect to
    /// `order`; these are the pivot monomials of the echelon basis.
    pub fn initial_subspace(&self, order: &MonomialOrder) -> Result<BTreeSet<Monomial>, Error> {
        let space = self.with_order(order)?;
        Ok(space
            .rows
            .iter()
            .map(|r| space.basis.monomial(r.entries[0].0).clone())
            .collect())
    }

    /// The degree-`t` monomials of the generic initial ideal of the ideal
    /// generated by this space.
    ///
    /// Runs pairs of independent random coordinate changes until two samples
    /// agree and the complement passes the down-closure check; after `budget`
    /// disagreeing pairs the computation fails loudly.
    pub fn generic_initial_monomials(
        &self,
        t: u32,
        seed: u64,
        height: i64,
        budget: u32,
    ) -> Result<BTreeSet<Monomial>, Error> {
        if t < self.d() {
            return Err(Error::InvalidArgument(format!(
                "gin degree {t} below space degree {}",
                self.d()
            )));
        }
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        let mut attempts = 0;
        while attempts < budget {
            attempts += 1;
            let g1 = RatMatrix::random_invertible(self.n(), height, &mut rng);
            let g2 = RatMatrix::random_invertible(self.n(), height, &mut rng);
            let s1 = self.gin_sample(t, &g1)?;
            let s2 = self.gin_sample(t, &g2)?;
            if s1 != s2 {
                continue;
            }
            let target = degree_basis(self.n(), t, &self.basis.order);
            let complement: Vec<Monomial> = target
                .monomials()
                .iter()
                .filter(|m| !s1.contains(*m))
                .cloned()
                .collect();
            if is_borel_down_closed(&complement)? {
                return Ok(s1);
            }
        }
        Err(Error::Genericity {
            attempts,
            what: "generic initial monomials did not stabilize".into(),
        })
    }

    fn gin_sample(&self, t: u32, g: &RatMatrix) -> Result<BTreeSet<Monomial>, Error> {
        let moved = self.apply_coordinate_change(g)?;
        let graded = if t == self.d() {
            moved
        } else {
            FormSpace::full(self.n(), t - self.d(), &self.basis.order).product_space(&moved)?
        };
        graded.initial_subspace(&self.basis.order)
    }

    /// `U  intersect  A(m)_d`, re-expressed over the first `m` variables.
    ///
    /// Solves for basis combinations with zero coefficient on every monomial
    /// involving a dropped variable.
    pub fn intersect_with_first_vars(&self, m: usize) -> Result<FormSpace, Error> {
        if m < 1 || m > self.n() {
            return Err(Error::InvalidArgument(format!(
                "cannot restrict {} variables to {m}",
                self.n()
            )));
        }
        if m == self.n() {
            return Ok(self.clone());
        }
        // Columns whose monomial involves a dropped variable, remapped densely.
        let mut outside_pos = vec![u32::MAX; self.basis.len()];
        let mut noutside = 0u32;
        for c in 0..self.basis.len() as u32 {
            if self.basis.monomial(c).restrict_vars(m).is_none() {
                outside_pos[c as usize] = noutside;
                noutside += 1;
            }
        }
        let dim = self.dim() as u32;
        let mut extended = Echelon::new(noutside as usize + dim as usize);
        for (r, row) in self.rows.iter().enumerate() {
            let mut entries: Vec<(u32, Rat)> = row
                .entries
                .iter()
                .filter(|&&(c, _)| outside_pos[c as usize] != u32::MAX)
                .map(|&(c, ref v)| (outside_pos[c as usize], v.clone()))
                .collect();
            entries.push((noutside + r as u32, Rat::one()));
            extended.insert(SparseRow::new(entries));
        }
        let restricted_order = self.basis.order.restrict(m);
        let target = degree_basis(m, self.d(), &restricted_order);
        let mut ech = Echelon::new(target.len());
        for combo in extended.into_rows() {
            if combo.entries[0].0 < noutside {
                continue;
            }
            // Assemble the combination; it vanishes on all outside columns.
            let mut acc: BTreeMap<u32, Rat> = BTreeMap::new();
            for &(c, ref coeff) in &combo.entries {
                let row = &self.rows[(c - noutside) as usize];
                for &(col, ref v) in &row.entries {
                    let mono = self
                        .basis
                        .monomial(col)
                        .restrict_vars(m)
                        .expect("outside coefficients cancelled");
                    let tcol = target.col(&mono).expect("restricted monomial in basis");
                    let slot = acc.entry(tcol).or_insert_with(Rat::zero);
                    *slot += coeff * v;
                }
            }
            ech.insert(SparseRow::new(acc.into_iter().collect()));
        }
        Ok(FormSpace::from_echelon(target, ech))
    }

    /// The iterated lift: adjoin `levels` new variables `y_i` and take
    /// `y_i * A_{d-1} + U` at each step. Codimension is preserved.
    pub fn lift(&self, levels: usize) -> FormSpace {
        if levels == 0 {
            return self.clone();
        }
        let n2 = self.n() + levels;
        let order2 = self.basis.order.extend(levels);
        let target = degree_basis(n2, self.d(), &order2);
        let mut ech = Echelon::new(target.len());
        for c in 0..target.len() as u32 {
            let mono = target.monomial(c);
            if mono.exps()[self.n()..].iter().any(|&e| e > 0) {
                ech.insert(SparseRow::unit(c));
            }
        }
        for row in &self.rows {
            let entries = row
                .entries
                .iter()
                .map(|&(c, ref v)| {
                    let mono = self.basis.monomial(c).extend_vars(n2);
                    (
                        target.col(&mono).expect("extended monomial in basis"),
                        v.clone(),
                    )
                })
                .collect();
            ech.insert(SparseRow::new(entries));
        }
        FormSpace::from_echelon(target, ech)
    }
}

pub(crate) fn form_to_row(f: &Form, basis: &DegreeBasis) -> SparseRow {
    SparseRow::new(
        f.coeffs()
            .iter()
            .map(|(m, v)| (basis.col(m).expect("form monomial in basis"), v.clone()))
            .collect(),
    )
}

fn reindex_row(row: &SparseRow, from: &DegreeBasis, to: &DegreeBasis) -> SparseRow {
    SparseRow::new(
        row.entries
            .iter()
            .map(|&(c, ref v)| {
                let m = from.monomial(c);
                (to.col(m).expect("same degree basis"), v.clone())
            })
            .collect(),
    )
}

/// Pairwise products of two canonical bases, echelonized. Pairs are processed
/// one representative per leading product monomial first, which makes most
/// insertions immediate pivots; the canonical result is order-independent.
fn product_impl(a: &FormSpace, b: &FormSpace, symmetric: bool) -> FormSpace {
    let n = a.n();
    let target = degree_basis(n, a.d() + b.d(), &a.basis.order);
    let mut ech = Echelon::new(target.len());
    let mut pairs: Vec<(u32, u32, u32)> = Vec::new();
    for i in 0..a.rows.len() as u32 {
        let lead_a = a.basis.monomial(a.rows[i as usize].entries[0].0);
        let j0 = if symmetric { i } else { 0 };
        for j in j0..b.rows.len() as u32 {
            let lead_b = b.basis.monomial(b.rows[j as usize].entries[0].0);
            let lead = target
                .col(&lead_a.mul(lead_b))
                .expect("product monomial in basis");
            pairs.push((lead, i, j));
        }
    }
    pairs.sort_unstable();
    let mut deferred: Vec<(u32, u32)> = Vec::new();
    let mut prev_lead = u32::MAX;
    for &(lead, i, j) in &pairs {
        if lead == prev_lead {
            deferred.push((i, j));
            continue;
        }
        prev_lead = lead;
        ech.insert(product_row(a, b, i, j, &target));
        if ech.is_full() {
            return FormSpace::from_echelon(target, ech);
        }
    }
    for &(i, j) in &deferred {
        ech.insert(product_row(a, b, i, j, &target));
        if ech.is_full() {
            break;
        }
    }
    FormSpace::from_echelon(target, ech)
}

fn product_row(a: &FormSpace, b: &FormSpace, i: u32, j: u32, target: &DegreeBasis) -> SparseRow {
    let ra = &a.rows[i as usize];
    let rb = &b.rows[j as usize];
    let mut acc: BTreeMap<u32, Rat> = BTreeMap::new();
    for &(ca, ref va) in &ra.entries {
        let ma = a.basis.monomial(ca);
        for &(cb, ref vb) in &rb.entries {
            let mb = b.basis.monomial(cb);
            let col = target.col(&ma.mul(mb)).expect("product monomial in basis");
            let slot = acc.entry(col).or_insert_with(Rat::zero);
            *slot += va * vb;
        }
    }
    SparseRow::new(acc.into_iter().collect())
}

/// The dimension formula for a face with subspace dimension `dim_u` and
/// square codimension `codim_usq`:
/// `C(dim_u + 1, 2) - dim A(n)_{2d} + codim_usq`.
pub fn face_dimension(dim_u: usize, n: usize, d: u32, codim_usq: usize) -> i64 {
    let pairs = (dim_u as i64) * (dim_u as i64 + 1) / 2;
    pairs - dim_forms(n, 2 * d) as i64 + codim_usq as i64
}
