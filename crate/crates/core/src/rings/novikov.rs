use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::laurent::fmt_exponents_desc;
use super::{LaurentPoly, Ring, RingTag, Q};
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// Finite F2-linear combination of rational powers of `t`.
///
/// The support is stored as a set: a coefficient is one exactly when its
/// exponent is present.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct NovikovElem {
    support: BTreeSet<Q>,
}

impl NovikovElem {
    pub fn from_exponents<I: IntoIterator<Item = Q>>(exps: I) -> Self {
        let mut support = BTreeSet::new();
        for e in exps {
            if !support.remove(&e) {
                support.insert(e);
            }
        }
        NovikovElem { support }
    }

    pub fn monomial(exp: Q) -> Self {
        NovikovElem {
            support: BTreeSet::from([exp]),
        }
    }

    pub fn support(&self) -> &BTreeSet<Q> {
        &self.support
    }

    pub fn min_exponent(&self) -> Option<&Q> {
        self.support.first()
    }

    pub fn max_exponent(&self) -> Option<&Q> {
        self.support.last()
    }

    pub fn mul_t_power(&self, k: &Q) -> Self {
        NovikovElem {
            support: self.support.iter().map(|e| e + k).collect(),
        }
    }

    /// Drops every term with exponent at or above `cutoff`.
    pub fn truncate(&self, cutoff: &Q) -> Self {
        NovikovElem {
            support: self
                .support
                .iter()
                .filter(|e| *e < cutoff)
                .cloned()
                .collect(),
        }
    }

    /// Returns `b` such that every exponent of `a*b - 1` is at least `horizon`.
    pub fn invert_truncated(&self, horizon: &Q) -> Result<Self> {
        let v = self.min_exponent().ok_or(Error::DivisionByZero)?.clone();
        if *horizon <= v {
            return Err(Error::HorizonTooLow {
                horizon: horizon.to_string(),
                min_exponent: v.to_string(),
            });
        }
        // a = t^v (1 + r) with every exponent of r positive
        let unit = self.mul_t_power(&-v.clone());
        let r = unit.clone() + NovikovElem::one();
        let mut series = NovikovElem::one();
        let mut power = NovikovElem::one();
        loop {
            power = (power * r.clone()).truncate(horizon);
            if power.is_zero() {
                break;
            }
            series = series + power.clone();
        }
        Ok(series.mul_t_power(&-v))
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        NovikovElem::from_exponents(p.exponents().into_iter().map(|e| Q::from_integer(e.into())))
    }
}

impl fmt::Display for NovikovElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_exponents_desc(
            self.support.iter().rev().cloned(),
            Q::zero(),
            Q::one(),
        ))
    }
}

impl fmt::Debug for NovikovElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Novikov({self})")
    }
}

impl Serialize for NovikovElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for NovikovElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        super::parse::parse_coefficient(&text).map_err(serde::de::Error::custom)
    }
}

impl Zero for NovikovElem {
    fn zero() -> Self {
        NovikovElem::default()
    }
    fn is_zero(&self) -> bool {
        self.support.is_empty()
    }
}

impl One for NovikovElem {
    fn one() -> Self {
        NovikovElem::monomial(Q::zero())
    }
}

impl Add for NovikovElem {
    type Output = NovikovElem;
    fn add(self, rhs: NovikovElem) -> NovikovElem {
        NovikovElem {
            support: self
                .support
                .symmetric_difference(&rhs.support)
                .cloned()
                .collect(),
        }
    }
}

impl Sub for NovikovElem {
    type Output = NovikovElem;
    fn sub(self, rhs: NovikovElem) -> NovikovElem {
        self + rhs
    }
}

impl Neg for NovikovElem {
    type Output = NovikovElem;
    fn neg(self) -> NovikovElem {
        self
    }
}

impl Mul for NovikovElem {
    type Output = NovikovElem;
    fn mul(self, rhs: NovikovElem) -> NovikovElem {
        NovikovElem::from_exponents(
            self.support
                .iter()
                .flat_map(|a| rhs.support.iter().map(move |b| a + b)),
        )
    }
}

impl Ring for NovikovElem {
    fn ring_tag() -> RingTag {
        RingTag::Lambda
    }
}

/// A cohomology class paired against curves, recorded by its weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistClass {
    #[serde(with = "super::rational::serde_q")]
    pub weight: Q,
    pub nonzero: bool,
}

impl TwistClass {
    pub fn new(weight: Q) -> Self {
        let nonzero = !weight.is_zero();
        TwistClass { weight, nonzero }
    }

    pub fn integer(d: i64) -> Self {
        TwistClass::new(super::qi(d))
    }

    pub fn require_nonzero(&self) -> Result<()> {
        if self.nonzero && !self.weight.is_zero() {
            Ok(())
        } else {
            Err(Error::ZeroTwist)
        }
    }

    /// Action of the `k`-th power of the dual class: multiplication by `t^{k d}`.
    pub fn act(&self, k: i64, x: &NovikovElem) -> NovikovElem {
        x.mul_t_power(&(super::qi(k) * &self.weight))
    }
}

pub fn twist_action(omega: &TwistClass, k: i64, x: &NovikovElem) -> NovikovElem {
    omega.act(k, x)
}

/// Rank over the Novikov field by Gaussian elimination carried out modulo
/// `t^horizon`, after shifting every entry so the smallest exponent is zero.
///
/// Each elimination step is exact in the truncated valuation ring, so the
/// result is the number of elementary divisors with valuation below the
/// horizon. A horizon above `rows * spread` therefore gives the exact rank.
pub fn rank_truncated(m: &Matrix<NovikovElem>, horizon: &Q) -> Result<usize> {
    if !horizon.is_positive() {
        return Err(Error::HorizonTooLow {
            horizon: horizon.to_string(),
            min_exponent: "0".into(),
        });
    }
    let Some(vmin) = m.entries().filter_map(|e| e.min_exponent()).min().cloned() else {
        return Ok(0);
    };
    let mut a: Vec<Vec<NovikovElem>> = (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| m.get(i, j).mul_t_power(&-vmin.clone()).truncate(horizon))
                .collect()
        })
        .collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    let mut live_rows: Vec<usize> = (0..rows).collect();
    let mut live_cols: Vec<usize> = (0..cols).collect();
    loop {
        let mut best: Option<(Q, usize, usize)> = None;
        for &i in &live_rows {
            for &j in &live_cols {
                if let Some(v) = a[i][j].min_exponent() {
                    if best.as_ref().is_none_or(|(bv, _, _)| v < bv) {
                        best = Some((v.clone(), i, j));
                    }
                }
            }
        }
        let Some((v, pi, pj)) = best else { break };
        rank += 1;
        let unit = a[pi][pj].mul_t_power(&-v.clone());
        let unit_inv = unit.invert_truncated(horizon)?;
        live_rows.retain(|&i| i != pi);
        live_cols.retain(|&j| j != pj);
        for &i in &live_rows {
            if a[i][pj].is_zero() {
                continue;
            }
            let factor = (a[i][pj].mul_t_power(&-v.clone()) * unit_inv.clone()).truncate(horizon);
            for &j in &live_cols {
                let delta = (factor.clone() * a[pi][j].clone()).truncate(horizon);
                a[i][j] = a[i][j].clone() + delta;
            }
            a[i][pj] = NovikovElem::zero();
        }
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{q, qi};
    use proptest::prelude::*;

    fn elem(exps: &[(i64, i64)]) -> NovikovElem {
        NovikovElem::from_exponents(exps.iter().map(|&(n, d)| q(n, d)))
    }

    #[test]
    fn half_power_squares() {
        let a = elem(&[(0, 1), (1, 2)]);
        assert_eq!(a.clone() * a, elem(&[(0, 1), (1, 1)]));
        assert_eq!(elem(&[(3, 4)]) * elem(&[(1, 4)]), elem(&[(1, 1)]));
        assert_eq!(
            elem(&[(0, 1), (1, 1)]) + elem(&[(0, 1), (2, 1)]),
            elem(&[(1, 1), (2, 1)])
        );
    }

    #[test]
    fn truncated_inverse_examples() {
        let a = elem(&[(0, 1), (1, 1)]);
        assert_eq!(
            a.invert_truncated(&qi(3)).unwrap(),
            elem(&[(0, 1), (1, 1), (2, 1)])
        );
        assert_eq!(
            elem(&[(-2, 1)]).invert_truncated(&qi(5)).unwrap(),
            elem(&[(2, 1)])
        );
        let b = elem(&[(1, 1), (2, 1)]);
        assert_eq!(
            b.invert_truncated(&qi(2)).unwrap(),
            elem(&[(-1, 1), (0, 1)])
        );
        assert_eq!(
            NovikovElem::zero().invert_truncated(&qi(1)),
            Err(Error::DivisionByZero)
        );
        assert!(matches!(
            b.invert_truncated(&qi(1)),
            Err(Error::HorizonTooLow { .. })
        ));
    }

    #[test]
    fn display_uses_braces_for_fractions() {
        assert_eq!(elem(&[(3, 2), (0, 1)]).to_string(), "t^{3/2}+1");
        assert_eq!(elem(&[(-1, 1)]).to_string(), "t^-1");
    }

    #[test]
    fn twist_examples() {
        let w = TwistClass::integer(1);
        assert_eq!(twist_action(&w, 1, &NovikovElem::one()), elem(&[(1, 1)]));
        let half = TwistClass::new(q(1, 2));
        assert_eq!(twist_action(&half, 2, &elem(&[(1, 2)])), elem(&[(3, 2)]));
        assert_eq!(
            TwistClass::integer(0).require_nonzero(),
            Err(Error::ZeroTwist)
        );
    }

    #[test]
    fn rank_of_singular_matrix() {
        let one_t = elem(&[(0, 1), (1, 1)]);
        let m = Matrix::from_rows(vec![
            vec![one_t.clone(), one_t.clone() * one_t.clone()],
            vec![NovikovElem::one(), one_t],
        ]);
        assert_eq!(rank_truncated(&m, &qi(10)).unwrap(), 1);
    }

    fn novikov() -> impl Strategy<Value = NovikovElem> {
        proptest::collection::vec((-12i64..12, 1i64..4), 1..6)
            .prop_map(|v| NovikovElem::from_exponents(v.into_iter().map(|(n, d)| q(n, d))))
            .prop_filter("nonzero", |a| !a.is_zero())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn inverse_residual_above_horizon(a in novikov(), extra in 1i64..8) {
            let h = a.min_exponent().unwrap() + qi(extra);
            let b = a.invert_truncated(&h).unwrap();
            let residual = a.clone() * b.clone() + NovikovElem::one();
            prop_assert!(residual.support().iter().all(|e| *e >= h));
            prop_assert_eq!(b.min_exponent().cloned(), Some(-a.min_exponent().unwrap().clone()));
        }

        #[test]
        fn twist_action_composes(
            x in novikov(), y in novikov(), k1 in -5i64..5, k2 in -5i64..5, n in -6i64..6, d in 1i64..4
        ) {
            let w = TwistClass::new(q(n, d));
            prop_assert_eq!(w.act(k1, &w.act(k2, &x)), w.act(k1 + k2, &x));
            prop_assert_eq!(w.act(k1, &(x.clone() + y.clone())), w.act(k1, &x) + w.act(k1, &y));
        }
    }
}
