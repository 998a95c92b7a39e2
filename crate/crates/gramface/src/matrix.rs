//! Small dense rational matrices for coordinate changes.

use num::traits::{One, Signed, Zero};
use rand::Rng;

use crate::echelon::Rat;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    /// Row-major entries.
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        RatMatrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_integer_rows(rows: &[Vec<i64>]) -> Self {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rat::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        let mut data = vec![Rat::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = Rat::one();
        }
        RatMatrix { n, data }
    }

    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut data = vec![Rat::zero(); n * n];
        for (i, &j) in perm.iter().enumerate() {
            data[i * n + j] = Rat::one();
        }
        RatMatrix { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.n + j]
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut data = vec![Rat::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        data[i * n + j] += a * b;
                    }
                }
            }
        }
        RatMatrix { n, data }
    }

    /// Gauss-Jordan inverse; `Err(SingularMatrix)` when rank drops.
    pub fn inverse(&self) -> Result<RatMatrix, Error> {
        let n = self.n;
        let mut work = self.data.clone();
        let mut inv = RatMatrix::identity(n).data;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !work[r * n + col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for j in 0..n {
                    work.swap(pivot * n + j, col * n + j);
                    inv.swap(pivot * n + j, col * n + j);
                }
            }
            let lead = work[col * n + col].clone();
            for j in 0..n {
                work[col * n + j] /= &lead;
                inv[col * n + j] /= &lead;
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = work[r * n + col].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let w = &work[col * n + j] * &factor;
                    work[r * n + j] -= w;
                    let v = &inv[col * n + j] * &factor;
                    inv[r * n + j] -= v;
                }
            }
        }
        Ok(RatMatrix { n, data: inv })
    }

    pub fn is_invertible(&self) -> bool {
        self.inverse().is_ok()
    }

    /// Random integer matrix with entries uniform in `[-height, height]`,
    /// resampled until invertible.
    pub fn random_invertible<R: Rng>(n: usize, height: i64, rng: &mut R) -> RatMatrix {
        assert!(height >= 1);
        loop {
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-height..=height)).collect())
                .collect();
            let m = RatMatrix::from_integer_rows(&rows);
            if m.is_invertible() {
                return m;
            }
        }
    }
}

impl std::fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                let v = self.at(i, j);
                if v.is_negative() || v.is_zero() {
                    write!(f, "{v}")?;
                } else {
                    write!(f, " {v}")?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha12Rng;

    #[test]
    fn inverse_roundtrip() {
        let m = RatMatrix::from_integer_rows(&[vec![2, 1, 0], vec![1, 1, 1], vec![0, 3, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(3));
        assert_eq!(inv.mul(&m), RatMatrix::identity(3));
    }

    #[test]
    fn singular_rejected() {
        let m = RatMatrix::from_integer_rows(&[vec![1, 2], vec![2, 4]]);
        assert!(m.inverse().is_err());
    }

    #[test]
    fn random_matrices_are_invertible() {
        let mut rng = ChaCha12Rng::seed_from_u64(11);
        for n in 1..=5 {
            let m = RatMatrix::random_invertible(n, 100, &mut rng);
            assert!(m.is_invertible());
        }
    }
}
