//! Sparse row echelon forms over exact rationals.
//!
//! Rows are sparse vectors over a fixed column range; column 0 is the most
//! significant (largest monomial under the active order). Insertion performs
//! forward elimination only, chasing the leading entry until it either dies
//! or claims a fresh pivot column; a single back-substitution pass at the end
//! produces the canonical reduced form, which is independent of insertion
//! order.

use num::traits::{One, Zero};
use num::BigRational;

pub type Rat = BigRational;

/// A sparse row: entries sorted by ascending column, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseRow {
    pub entries: Vec<(u32, Rat)>,
}

impl SparseRow {
    pub fn new(mut entries: Vec<(u32, Rat)>) -> Self {
        entries.retain(|(_, v)| !v.is_zero());
        entries.sort_by_key(|&(c, _)| c);
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        SparseRow { entries }
    }

    pub fn unit(col: u32) -> Self {
        SparseRow {
            entries: vec![(col, Rat::one())],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn lead(&self) -> Option<u32> {
        self.entries.first().map(|&(c, _)| c)
    }

    pub fn coeff(&self, col: u32) -> Option<&Rat> {
        self.entries
            .binary_search_by_key(&col, |&(c, _)| c)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    pub fn scale(&mut self, factor: &Rat) {
        debug_assert!(!factor.is_zero());
        for (_, v) in &mut self.entries {
            *v *= factor;
        }
    }

    /// `self -= factor * other`, merging sorted supports.
    pub fn sub_mul(&mut self, factor: &Rat, other: &SparseRow) {
        if factor.is_zero() {
            return;
        }
        let mut merged = Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = self.entries.iter();
        let mut b = other.entries.iter();
        let (mut na, mut nb) = (a.next(), b.next());
        loop {
            match (na, nb) {
                (Some(&(ca, ref va)), Some(&(cb, ref vb))) => {
                    if ca < cb {
                        merged.push((ca, va.clone()));
                        na = a.next();
                    } else if ca > cb {
                        merged.push((cb, -(factor * vb)));
                        nb = b.next();
                    } else {
                        let v = va - factor * vb;
                        if !v.is_zero() {
                            merged.push((ca, v));
                        }
                        na = a.next();
                        nb = b.next();
                    }
                }
                (Some(&(ca, ref va)), None) => {
                    merged.push((ca, va.clone()));
                    na = a.next();
                }
                (None, Some(&(cb, ref vb))) => {
                    merged.push((cb, -(factor * vb)));
                    nb = b.next();
                }
                (None, None) => break,
            }
        }
        self.entries = merged;
    }
}

const NO_PIVOT: u32 = u32::MAX;

pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseRow>,
    /// Column -> index of the row pivoting there, or `NO_PIVOT`.
    pivot_row: Vec<u32>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.ncols
    }

    /// Eliminates every pivot-column entry of `row`, smallest column first;
    /// the residual is supported on free columns only.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let hit = row.entries.iter().find_map(|&(c, ref v)| {
                let r = self.pivot_row[c as usize];
                (r != NO_PIVOT).then(|| (r, v.clone()))
            });
            match hit {
                Some((r, v)) => row.sub_mul(&v, &self.rows[r as usize]),
                None => return row,
            }
        }
    }

    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_zero()
    }

    /// Inserts a row by chasing its leading entry; returns `true` when the
    /// rank grew.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        loop {
            let Some(lead) = row.lead() else { return false };
            let holder = self.pivot_row[lead as usize];
            if holder == NO_PIVOT {
                let inv = {
                    let lead_coeff = &row.entries[0].1;
                    Rat::one() / lead_coeff
                };
                row.scale(&inv);
                self.pivot_row[lead as usize] = self.rows.len() as u32;
                self.rows.push(row);
                return true;
            }
            let factor = row.entries[0].1.clone();
            row.sub_mul(&factor, &self.rows[holder as usize]);
        }
    }

    /// Back-substitutes every row against the others, giving the unique
    /// reduced form; rows are processed by descending pivot column so each
    /// referenced row is already final.
    fn canonicalize(&mut self) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_unstable_by_key(|&i| std::cmp::Reverse(self.rows[i].lead().unwrap()));
        for &i in &order {
            let mut row = std::mem::take(&mut self.rows[i]);
            // Snapshot the pivot-column tail entries: finalized rows have
            // free-column tails, so no new pivot columns appear while
            // substituting and the snapshot coefficients stay valid.
            let hits: Vec<(u32, Rat)> = row.entries[1..]
                .iter()
                .filter(|&&(c, _)| self.pivot_row[c as usize] != NO_PIVOT)
                .map(|&(c, ref v)| (c, v.clone()))
                .collect();
            for (c, v) in hits {
                let holder = self.pivot_row[c as usize] as usize;
                row.sub_mul(&v, &self.rows[holder]);
            }
            self.rows[i] = row;
        }
    }

    /// The canonical RREF rows, sorted by pivot column.
    pub fn into_rows(mut self) -> Vec<SparseRow> {
        self.canonicalize();
        self.rows.sort_by_key(|r| r.lead().unwrap());
        self.rows
    }

    /// A canonical basis of the right kernel under the standard dot product,
    /// one vector per free column, sorted by that column.
    pub fn into_kernel(mut self) -> Vec<SparseRow> {
        self.canonicalize();
        let mut per_free: Vec<Vec<(u32, Rat)>> = vec![Vec::new(); self.ncols];
        for row in &self.rows {
            let pivot = row.entries[0].0;
            for &(c, ref v) in &row.entries[1..] {
                per_free[c as usize].push((pivot, -v.clone()));
            }
        }
        let mut vectors: Vec<SparseRow> = Vec::with_capacity(self.ncols - self.rank());
        for col in 0..self.ncols as u32 {
            if self.pivot_row[col as usize] != NO_PIVOT {
                continue;
            }
            let mut entries = std::mem::take(&mut per_free[col as usize]);
            entries.push((col, Rat::one()));
            vectors.push(SparseRow::new(entries));
        }
        vectors
    }
}

/// Builds an echelon from rows.
pub fn echelon_from_rows<I>(ncols: usize, rows: I) -> Echelon
where
    I: IntoIterator<Item = SparseRow>,
{
    let mut ech = Echelon::new(ncols);
    for row in rows {
        ech.insert(row);
    }
    ech
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rat {
        Rat::from_integer(n.into())
    }

    fn row(entries: &[(u32, i64)]) -> SparseRow {
        SparseRow::new(entries.iter().map(|&(c, v)| (c, rat(v))).collect())
    }

    #[test]
    fn rank_and_canonical_form() {
        let rows = vec![
            row(&[(0, 1), (1, 1)]),
            row(&[(1, 1), (2, 1)]),
            row(&[(0, 1), (2, -1)]), // dependent
        ];
        let ech = echelon_from_rows(3, rows);
        assert_eq!(ech.rank(), 2);
        let rows = ech.into_rows();
        assert_eq!(rows[0], row(&[(0, 1), (2, -1)]));
        assert_eq!(rows[1], row(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn canonical_form_is_insertion_order_independent() {
        let base = vec![
            row(&[(0, 2), (2, 4), (3, -2)]),
            row(&[(1, 3), (2, 1)]),
            row(&[(0, 1), (1, 1), (4, 5)]),
            row(&[(2, 7), (4, 1)]),
        ];
        let reference: Vec<SparseRow> = echelon_from_rows(5, base.clone()).into_rows();
        // A few permutations and recombinations must give identical output.
        let mut variant = vec![
            base[3].clone(),
            {
                let mut r = base[0].clone();
                r.sub_mul(&rat(-2), &base[1]);
                r
            },
            base[2].clone(),
            base[1].clone(),
            base[0].clone(),
        ];
        variant.rotate_left(2);
        assert_eq!(echelon_from_rows(5, variant).into_rows(), reference);
    }

    #[test]
    fn kernel_is_orthogonal_and_complementary() {
        let rows = vec![row(&[(0, 1), (2, 2), (3, 1)]), row(&[(1, 1), (3, -1)])];
        let ech = echelon_from_rows(4, rows.clone());
        let kernel = ech.into_kernel();
        assert_eq!(kernel.len(), 2);
        for k in &kernel {
            for r in &rows {
                let dot: Rat = r
                    .entries
                    .iter()
                    .filter_map(|&(c, ref v)| k.coeff(c).map(|w| v * w))
                    .sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn reduce_and_contains() {
        let ech = echelon_from_rows(3, vec![row(&[(0, 1), (1, 1)]), row(&[(1, 2), (2, 2)])]);
        assert!(ech.contains(row(&[(0, 3), (1, 3)])));
        assert!(ech.contains(row(&[(0, 1), (2, -1)])));
        assert!(!ech.contains(row(&[(0, 1)])));
        let residual = ech.reduce(row(&[(0, 1)]));
        assert_eq!(residual, row(&[(2, 1)]));
    }

    #[test]
    fn full_rank_detection() {
        let mut ech = Echelon::new(2);
        assert!(ech.insert(row(&[(0, 5), (1, 1)])));
        assert!(!ech.is_full());
        assert!(ech.insert(row(&[(1, 3)])));
        assert!(ech.is_full());
        assert!(!ech.insert(row(&[(0, 1), (1, 9)])));
    }
}
