//! Monomial orders: lexicographic, graded lexicographic, and block orders
//! with an explicit variable orientation.

use std::cmp::Ordering;

use crate::monomial::Monomial;
use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    GrLex,
}

/// One block of a block order: a set of variables compared together.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderBlock {
    /// 0-based variable indices belonging to this block.
    pub vars: Vec<usize>,
    pub kind: OrderKind,
}

/// A multiplicative total order on the monomials of each fixed degree.
///
/// `small_to_large` lists the variables from least to most significant. The
/// default order is lex with `x1 < x2 < ... < xn`: exponents are scanned from
/// the largest variable down and the first strictly larger exponent wins.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    small_to_large: Vec<usize>,
    /// Blocks from most significant to least; empty means no block structure.
    blocks: Vec<OrderBlock>,
}

impl MonomialOrder {
    /// The default order: lex with `x1 < ... < xn`.
    pub fn default_for(n: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            small_to_large: (0..n).collect(),
            blocks: Vec::new(),
        }
    }

    pub fn simple(kind: OrderKind, small_to_large: Vec<usize>) -> Result<Self, Error> {
        check_permutation(&small_to_large)?;
        Ok(MonomialOrder {
            kind,
            small_to_large,
            blocks: Vec::new(),
        })
    }

    /// A block order; `blocks` are listed from most to least significant and
    /// must partition the variables. Significance inside a block follows
    /// `small_to_large`.
    pub fn block(small_to_large: Vec<usize>, blocks: Vec<OrderBlock>) -> Result<Self, Error> {
        check_permutation(&small_to_large)?;
        let n = small_to_large.len();
        let mut seen = vec![false; n];
        for b in &blocks {
            for &v in &b.vars {
                if v >= n || seen[v] {
                    return Err(Error::InvalidOrder(
                        "blocks must partition the variables".into(),
                    ));
                }
                seen[v] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return Err(Error::InvalidOrder(
                "blocks must cover every variable".into(),
            ));
        }
        Ok(MonomialOrder {
            kind: OrderKind::Lex,
            small_to_large,
            blocks,
        })
    }

    pub fn nvars(&self) -> usize {
        self.small_to_large.len()
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn small_to_large(&self) -> &[usize] {
        &self.small_to_large
    }

    pub fn blocks(&self) -> &[OrderBlock] {
        &self.blocks
    }

    pub fn is_default(&self) -> bool {
        self.kind == OrderKind::Lex
            && self.blocks.is_empty()
            && self.small_to_large.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), self.nvars());
        debug_assert_eq!(b.nvars(), self.nvars());
        if self.blocks.is_empty() {
            return self.cmp_in(&self.small_to_large, self.kind, a, b, true);
        }
        for block in &self.blocks {
            // Scan the block's variables in global significance order.
            let ordered: Vec<usize> = self
                .small_to_large
                .iter()
                .copied()
                .filter(|v| block.vars.contains(v))
                .collect();
            let ord = self.cmp_in(&ordered, block.kind, a, b, false);
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }

    fn cmp_in(
        &self,
        small_to_large: &[usize],
        kind: OrderKind,
        a: &Monomial,
        b: &Monomial,
        full: bool,
    ) -> Ordering {
        if kind == OrderKind::GrLex || !full {
            // On a fixed-degree slice the graded comparison of the full
            // support is a no-op, but block-restricted degrees matter.
            let da: u32 = small_to_large.iter().map(|&v| u32::from(a.exp(v))).sum();
            let db: u32 = small_to_large.iter().map(|&v| u32::from(b.exp(v))).sum();
            if kind == OrderKind::GrLex {
                match da.cmp(&db) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
            }
        }
        for &v in small_to_large.iter().rev() {
            match a.exp(v).cmp(&b.exp(v)) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }

    /// Restriction to the first `m` variables, for spaces re-expressed after
    /// intersecting with a coordinate subring.
    pub fn restrict(&self, m: usize) -> MonomialOrder {
        let small_to_large: Vec<usize> = self
            .small_to_large
            .iter()
            .copied()
            .filter(|&v| v < m)
            .collect();
        let blocks: Vec<OrderBlock> = self
            .blocks
            .iter()
            .filter_map(|b| {
                let vars: Vec<usize> = b.vars.iter().copied().filter(|&v| v < m).collect();
                (!vars.is_empty()).then_some(OrderBlock { vars, kind: b.kind })
            })
            .collect();
        MonomialOrder {
            kind: self.kind,
            small_to_large,
            blocks,
        }
    }

    /// Extension by `extra` new variables appended at the most significant
    /// end (block orders put them in the leading block).
    pub fn extend(&self, extra: usize) -> MonomialOrder {
        let n = self.nvars();
        let mut small_to_large = self.small_to_large.clone();
        small_to_large.extend(n..n + extra);
        let mut blocks = self.blocks.clone();
        if let Some(first) = blocks.first_mut() {
            first.vars.extend(n..n + extra);
        }
        MonomialOrder {
            kind: self.kind,
            small_to_large,
            blocks,
        }
    }

    /// A short stable key used to cache per-order monomial tables.
    pub(crate) fn cache_key(&self) -> String {
        let mut key = format!("{:?}:{:?}", self.kind, self.small_to_large);
        for b in &self.blocks {
            key.push_str(&format!("|{:?}:{:?}", b.kind, b.vars));
        }
        key
    }
}

fn check_permutation(perm: &[usize]) -> Result<(), Error> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &v in perm {
        if v >= n || seen[v] {
            return Err(Error::InvalidOrder(
                "orientation must be a permutation of the variables".into(),
            ));
        }
        seen[v] = true;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{monomial_basis, Monomial};

    fn m(exps: &[u8]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn default_lex_scans_from_top_variable() {
        let ord = MonomialOrder::default_for(3);
        assert_eq!(ord.cmp(&m(&[2, 0, 0]), &m(&[0, 0, 2])), Ordering::Less);
        assert_eq!(ord.cmp(&m(&[1, 1, 0]), &m(&[2, 0, 0])), Ordering::Greater);
        assert_eq!(ord.cmp(&m(&[0, 1, 1]), &m(&[1, 0, 1])), Ordering::Greater);
    }

    #[test]
    fn multiplicative_on_fixed_degree() {
        let ord = MonomialOrder::default_for(3);
        let basis = monomial_basis(3, 2, &ord);
        let q = m(&[1, 0, 1]);
        for a in &basis {
            for b in &basis {
                if ord.cmp(a, b) == Ordering::Greater {
                    assert_eq!(ord.cmp(&a.mul(&q), &b.mul(&q)), Ordering::Greater);
                }
            }
        }
    }

    #[test]
    fn reversed_orientation_flips_extremes() {
        let ord = MonomialOrder::simple(OrderKind::Lex, vec![2, 1, 0]).unwrap();
        let basis = monomial_basis(3, 2, &ord);
        assert_eq!(basis[0], m(&[0, 0, 2]));
        assert_eq!(*basis.last().unwrap(), m(&[2, 0, 0]));
    }

    #[test]
    fn block_order_elevates_leading_block() {
        // Blocks {x1,x2} then {x3,x4}, grlex on each, orientation x1 > x2 > x3 > x4.
        let ord = MonomialOrder::block(
            vec![3, 2, 1, 0],
            vec![
                OrderBlock {
                    vars: vec![0, 1],
                    kind: OrderKind::GrLex,
                },
                OrderBlock {
                    vars: vec![2, 3],
                    kind: OrderKind::GrLex,
                },
            ],
        )
        .unwrap();
        // x2^3 has block-1 degree 3, x1*x3^2 only 1.
        assert_eq!(
            ord.cmp(&m(&[0, 3, 0, 0]), &m(&[1, 0, 2, 0])),
            Ordering::Greater
        );
        // Within the same block degrees, x1 beats x2.
        assert_eq!(
            ord.cmp(&m(&[1, 0, 1, 0]), &m(&[0, 1, 1, 0])),
            Ordering::Greater
        );
        // Ties on block 1 fall through to block 2 where x3 beats x4.
        assert_eq!(
            ord.cmp(&m(&[1, 0, 2, 0]), &m(&[1, 0, 0, 2])),
            Ordering::Greater
        );
    }

    #[test]
    fn block_validation() {
        assert!(MonomialOrder::block(
            vec![0, 1],
            vec![OrderBlock {
                vars: vec![0],
                kind: OrderKind::Lex
            }],
        )
        .is_err());
        assert!(MonomialOrder::simple(OrderKind::Lex, vec![0, 0]).is_err());
    }

    #[test]
    fn restrict_and_extend() {
        let ord = MonomialOrder::default_for(3);
        assert_eq!(ord.restrict(2), MonomialOrder::default_for(2));
        assert_eq!(ord.extend(2), MonomialOrder::default_for(5));
    }
}
