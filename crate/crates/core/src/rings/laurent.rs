use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{EuclideanDomain, F2Poly, Ring, RingTag};

/// Laurent polynomial over F2 in `t`, written `t^shift * body` where
/// `body(0) = 1`. The zero element has an empty body and shift zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    shift: i64,
    body: F2Poly,
}

impl LaurentPoly {
    pub fn new(shift: i64, body: F2Poly) -> Self {
        match body.valuation() {
            None => LaurentPoly::zero(),
            Some(v) => LaurentPoly {
                shift: shift + v as i64,
                body: body.shr(v),
            },
        }
    }

    pub fn t_power(k: i64) -> Self {
        LaurentPoly {
            shift: k,
            body: F2Poly::one(),
        }
    }

    pub fn from_exponents<I: IntoIterator<Item = i64>>(exps: I) -> Self {
        let exps: Vec<i64> = exps.into_iter().collect();
        let Some(&lo) = exps.iter().min() else {
            return LaurentPoly::zero();
        };
        LaurentPoly::new(
            lo,
            F2Poly::from_exponents(exps.iter().map(|e| (e - lo) as usize)),
        )
    }

    pub fn exponents(&self) -> BTreeSet<i64> {
        self.body
            .exponents()
            .map(|e| e as i64 + self.shift)
            .collect()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.shift)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.body.degree().map(|d| d as i64 + self.shift)
    }

    /// Width of the support, which serves as the Euclidean norm.
    pub fn spread(&self) -> usize {
        self.body.degree().unwrap_or(0)
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn body(&self) -> &F2Poly {
        &self.body
    }

    pub fn mul_t_power(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly {
            shift: self.shift + k,
            body: self.body.clone(),
        }
    }

    /// Splits as numerator and denominator polynomials with `t`-power denominator.
    pub fn to_fraction_parts(&self) -> (F2Poly, F2Poly) {
        if self.shift >= 0 {
            (self.body.shl(self.shift as usize), F2Poly::one())
        } else {
            (self.body.clone(), F2Poly::monomial((-self.shift) as usize))
        }
    }

    pub fn eval_at_one(&self) -> bool {
        self.body.eval_at_one()
    }
}

pub(crate) fn fmt_exponents_desc<E: fmt::Display + PartialEq, I>(exps: I, zero: E, one: E) -> String
where
    I: IntoIterator<Item = E>,
{
    let terms: Vec<String> = exps
        .into_iter()
        .map(|e| {
            if e == zero {
                "1".to_string()
            } else if e == one {
                "t".to_string()
            } else {
                let s = e.to_string();
                if s.parse::<i64>().is_ok() {
                    format!("t^{s}")
                } else {
                    format!("t^{{{s}}}")
                }
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_exponents_desc(
            self.exponents().into_iter().rev(),
            0,
            1,
        ))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly {
            shift: 0,
            body: F2Poly::zero(),
        }
    }
    fn is_zero(&self) -> bool {
        self.body.is_zero()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::t_power(0)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let lo = self.shift.min(rhs.shift);
        let a = self.body.shl((self.shift - lo) as usize);
        let b = rhs.body.shl((rhs.shift - lo) as usize);
        LaurentPoly::new(lo, &a + &b)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self + rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        // product of bodies with nonzero constant terms keeps a nonzero constant term
        LaurentPoly {
            shift: self.shift + rhs.shift,
            body: &self.body * &rhs.body,
        }
    }
}

impl Ring for LaurentPoly {
    fn ring_tag() -> RingTag {
        RingTag::Laurent
    }
}

impl EuclideanDomain for LaurentPoly {
    type Norm = usize;

    fn norm(&self) -> usize {
        self.spread()
    }

    fn div_rem(&self, other: &Self) -> (Self, Self) {
        assert!(!other.is_zero(), "division by zero Laurent polynomial");
        if self.is_zero() {
            return (LaurentPoly::zero(), LaurentPoly::zero());
        }
        let (q, r) = self.body.div_rem(&other.body);
        (
            LaurentPoly::new(self.shift - other.shift, q),
            LaurentPoly::new(self.shift, r),
        )
    }

    fn is_unit(&self) -> bool {
        self.body.is_one()
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.is_unit().then(|| LaurentPoly::t_power(-self.shift))
    }

    fn unit_normalizer(&self) -> Self {
        if self.is_zero() {
            LaurentPoly::one()
        } else {
            LaurentPoly::t_power(-self.shift)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn laurent() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::btree_set(-20i64..20, 0..8).prop_map(LaurentPoly::from_exponents)
    }

    #[test]
    fn display_descending() {
        let p = LaurentPoly::from_exponents([-1, 0, 2]);
        assert_eq!(p.to_string(), "t^2+1+t^-1");
    }

    #[test]
    fn monomials_are_units() {
        let p = LaurentPoly::t_power(-3);
        assert!(p.is_unit());
        assert_eq!(p.clone() * p.unit_inverse().unwrap(), LaurentPoly::one());
        assert!(!LaurentPoly::from_exponents([0, 1]).is_unit());
    }

    proptest! {
        #[test]
        fn division_identity(a in laurent(), b in laurent()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(q * b.clone() + r.clone(), a);
            prop_assert!(r.is_zero() || r.norm() < b.norm());
        }

        #[test]
        fn addition_is_symmetric_difference(a in laurent(), b in laurent()) {
            let expected: BTreeSet<i64> =
                a.exponents().symmetric_difference(&b.exponents()).copied().collect();
            prop_assert_eq!((a + b).exponents(), expected);
        }
    }
}
