//! Hilbert functions of ideals generated by a form subspace, and base-point
//! certificates derived from them.

use num::BigUint;

use crate::formspace::FormSpace;
use crate::macaulay::{gotzmann_prediction, macaulay_growth_bound};
use crate::monomial::{dim_forms, Monomial};

/// Values `h_i = dim (A / <U>)_i` for `i = 0..=t_max`, all exact; the table
/// is truncated at `t_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertTable {
    values: Vec<usize>,
}

impl HilbertTable {
    pub fn t_max(&self) -> u32 {
        self.values.len() as u32 - 1
    }

    pub fn value(&self, i: u32) -> usize {
        self.values[i as usize]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// First degree with `h = 0`, if any.
    pub fn first_zero(&self) -> Option<u32> {
        self.values.iter().position(|&h| h == 0).map(|i| i as u32)
    }
}

/// The Hilbert function of `<U>` up to degree `t_max`, computed by iterated
/// multiplication with the linear forms: `h_i = codim A_{i-d} U` for `i >= d`.
pub fn hilbert_table(space: &FormSpace, t_max: u32) -> HilbertTable {
    assert!(t_max >= space.d(), "truncation degree below space degree");
    let n = space.n();
    let order = space.order().clone();
    let mut values = Vec::with_capacity(t_max as usize + 1);
    for i in 0..space.d() {
        values.push(dim_forms(n, i));
    }
    values.push(space.codim());
    let linear = FormSpace::full(n, 1, &order);
    let mut current = space.clone();
    for _ in space.d()..t_max {
        if *values.last().unwrap() == 0 {
            values.push(0);
            continue;
        }
        current = linear
            .product_space(&current)
            .expect("compatible by construction");
        values.push(current.codim());
    }
    HilbertTable { values }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasePointWitness {
    /// A pure power `x_var^d` is missing from a monomial space, so the
    /// coordinate point `e_var` is an explicit common zero (0-based `var`).
    MissingPurePower { var: usize },
    /// Extremal Macaulay growth at `from_degree` persists forever, keeping
    /// the Hilbert function positive; the zero set is non-empty.
    GotzmannPersistent { from_degree: u32, value: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasePointVerdict {
    /// `h_{t0} = 0`: the ideal contains all of degree `t0`.
    BasePointFree {
        at_degree: u32,
    },
    HasBasePoints {
        witness: BasePointWitness,
    },
    Inconclusive {
        bound: u32,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePointCertificate {
    pub verdict: BasePointVerdict,
    pub evidence: HilbertTable,
}

/// Decides base-point-freeness where a certificate is available.
///
/// Monomial spaces are decided combinatorially (the zero set is empty iff
/// every pure power `x_i^d` is present). General spaces are base-point-free
/// as soon as some `h_{t0}` vanishes for `t0 <= t_max`, and have base points
/// when Gotzmann persistence certifies a forever-positive Hilbert function;
/// otherwise the verdict is inconclusive at the bound.
pub fn base_point_certificate(space: &FormSpace, t_max: u32) -> BasePointCertificate {
    if let Some(monomials) = space.monomial_set() {
        let n = space.n();
        let d = space.d();
        for var in 0..n {
            let power = Monomial::pure_power(n, var, d as u8);
            if !monomials.contains(&power) {
                return BasePointCertificate {
                    verdict: BasePointVerdict::HasBasePoints {
                        witness: BasePointWitness::MissingPurePower { var },
                    },
                    evidence: hilbert_table(space, t_max),
                };
            }
        }
        // All pure powers present: the ideal is Artinian and reaches zero by
        // degree n(d-1)+1; extend past t_max if needed to witness it.
        let latest = n as u32 * (d.saturating_sub(1)) + 1;
        let table = hilbert_table(space, t_max.max(latest));
        let t0 = table
            .first_zero()
            .expect("monomial space with all pure powers is Artinian");
        return BasePointCertificate {
            verdict: BasePointVerdict::BasePointFree { at_degree: t0 },
            evidence: table,
        };
    }
    let table = hilbert_table(space, t_max);
    if let Some(t0) = table.first_zero() {
        return BasePointCertificate {
            verdict: BasePointVerdict::BasePointFree { at_degree: t0 },
            evidence: table,
        };
    }
    // No zero up to the bound; look for certified persistence. The ideal is
    // generated in degree d, so extremal growth at any t >= d persists.
    for t in space.d()..t_max {
        let h_t = BigUint::from(table.value(t));
        let h_t1 = BigUint::from(table.value(t + 1));
        if h_t1 != macaulay_growth_bound(&h_t, t) {
            continue;
        }
        // Check the predicted values match every computed later degree; the
        // shifts of a non-empty representation stay positive forever.
        let consistent = (t + 1..=t_max)
            .all(|i| BigUint::from(table.value(i)) == gotzmann_prediction(&h_t, t, i - t));
        if consistent {
            return BasePointCertificate {
                verdict: BasePointVerdict::HasBasePoints {
                    witness: BasePointWitness::GotzmannPersistent {
                        from_degree: t,
                        value: table.value(t),
                    },
                },
                evidence: table,
            };
        }
    }
    BasePointCertificate {
        verdict: BasePointVerdict::Inconclusive { bound: t_max },
        evidence: table,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::echelon::Rat;
    use crate::formspace::{Form, FormSpace};
    use crate::harness::{random_full_space, rng_for};
    use crate::matrix::RatMatrix;
    use crate::order::MonomialOrder;

    fn ord(n: usize) -> MonomialOrder {
        MonomialOrder::default_for(n)
    }

    #[test]
    fn full_space_table() {
        let full = FormSpace::full(3, 2, &ord(3));
        let table = hilbert_table(&full, 5);
        assert_eq!(table.values(), [1, 3, 0, 0, 0, 0]);
        assert_eq!(table.first_zero(), Some(2));
    }

    #[test]
    fn zero_space_table() {
        let zero = FormSpace::zero(2, 2, &ord(2));
        let table = hilbert_table(&zero, 4);
        assert_eq!(table.values(), [1, 2, 3, 4, 5]);
        assert_eq!(table.first_zero(), None);
    }

    #[test]
    fn monomial_certificates() {
        // Missing pure power: explicit coordinate zero.
        let missing: std::collections::BTreeSet<_> =
            [crate::monomial::Monomial::pure_power(3, 0, 3)].into();
        let u = FormSpace::monomial_complement_span(3, 3, &ord(3), &missing).unwrap();
        let cert = base_point_certificate(&u, 8);
        assert_eq!(
            cert.verdict,
            BasePointVerdict::HasBasePoints {
                witness: BasePointWitness::MissingPurePower { var: 0 }
            }
        );
        // All pure powers present: decided even past the requested bound.
        let powers: Vec<_> = (0..3)
            .map(|v| Form::monomial(crate::monomial::Monomial::pure_power(3, v, 3)))
            .collect();
        let u = FormSpace::span(3, 3, &ord(3), &powers).unwrap();
        let cert = base_point_certificate(&u, 3);
        match cert.verdict {
            BasePointVerdict::BasePointFree { at_degree } => assert_eq!(at_degree, 7),
            other => panic!("expected base-point-free, got {other:?}"),
        }
    }

    #[test]
    fn gotzmann_certificate_for_a_squared_linear_form() {
        // W = span(l^2): the complement has the point dual to l as a base
        // point and its Hilbert function sticks at 1.
        let l = Form::linear(&[
            Rat::from_integer(1.into()),
            Rat::from_integer(2.into()),
            Rat::from_integer((-1).into()),
        ]);
        let u = FormSpace::span(3, 2, &ord(3), &[l.pow(2)])
            .unwrap()
            .apolar_complement();
        let cert = base_point_certificate(&u, 6);
        match cert.verdict {
            BasePointVerdict::HasBasePoints {
                witness: BasePointWitness::GotzmannPersistent { value, .. },
            } => assert_eq!(value, 1),
            other => panic!("expected a persistence witness, got {other:?}"),
        }
    }

    #[test]
    fn bpf_small_codim_decided_by_2d_minus_1() {
        let mut rng = rng_for(23, 0);
        for (n, d, k) in [(3usize, 3u32, 1usize), (4, 3, 2), (3, 4, 2)] {
            for _ in 0..5 {
                let (u, _) = random_full_space(n, d, k, 50, &mut rng);
                let cert = base_point_certificate(&u, 2 * d + 2);
                if let BasePointVerdict::BasePointFree { at_degree } = cert.verdict {
                    assert!(at_degree < 2 * d, "n={n} d={d} k={k}");
                }
            }
        }
    }

    #[test]
    fn table_invariant_under_coordinate_change() {
        let mut rng = rng_for(29, 0);
        for _ in 0..5 {
            let (u, _) = random_full_space(3, 3, 2, 30, &mut rng);
            let g = RatMatrix::random_invertible(3, 20, &mut rng);
            let moved = u.apply_coordinate_change(&g).unwrap();
            assert_eq!(
                hilbert_table(&u, 7).values(),
                hilbert_table(&moved, 7).values()
            );
        }
    }
}
