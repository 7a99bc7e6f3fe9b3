use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{EuclideanDomain, F2Poly, Field, LaurentPoly, Ring, RingTag};

/// Rational function over F2 in `t`, kept reduced.
///
/// Every nonzero Laurent polynomial is invertible in the Novikov field, and
/// every matrix entry the pipelines produce is a Laurent polynomial, so ranks
/// over this field agree with ranks over the Novikov field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: F2Poly,
    den: F2Poly,
}

impl RatFunc {
    pub fn new(num: F2Poly, den: F2Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(RatFunc::zero());
        }
        let g = num.gcd(&den);
        Some(RatFunc {
            num: num.div_rem(&g).0,
            den: den.div_rem(&g).0,
        })
    }

    pub fn from_poly(p: F2Poly) -> Self {
        RatFunc {
            num: p,
            den: F2Poly::one(),
        }
    }

    pub fn t_power(k: i64) -> Self {
        RatFunc::from(LaurentPoly::t_power(k))
    }

    pub fn numer(&self) -> &F2Poly {
        &self.num
    }

    pub fn denom(&self) -> &F2Poly {
        &self.den
    }

    /// The element as a Laurent polynomial, if its denominator is a power of `t`.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if self.den.weight() != 1 {
            return None;
        }
        let k = self.den.degree().unwrap_or(0) as i64;
        Some(LaurentPoly::new(-k, self.num.clone()))
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        let (num, den) = p.to_fraction_parts();
        RatFunc { num, den }
    }
}

fn wrap(s: String, single_term: bool) -> String {
    if single_term {
        s
    } else {
        format!("({s})")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return f.write_str(&self.num.fmt_in("t"));
        }
        write!(
            f,
            "{}/{}",
            wrap(self.num.fmt_in("t"), self.num.weight() <= 1),
            wrap(self.den.fmt_in("t"), self.den.weight() <= 1)
        )
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc {
            num: F2Poly::zero(),
            den: F2Poly::one(),
        }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::from_poly(F2Poly::one())
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den).expect("nonzero denominator");
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Sub for RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: RatFunc) -> RatFunc {
        self + rhs
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        self
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

impl Ring for RatFunc {
    fn ring_tag() -> RingTag {
        RingTag::RatFunc
    }
}

impl EuclideanDomain for RatFunc {
    type Norm = u8;

    fn norm(&self) -> u8 {
        0
    }

    fn div_rem(&self, other: &Self) -> (Self, Self) {
        let inv = other.inv().expect("division by zero rational function");
        (self.clone() * inv, RatFunc::zero())
    }

    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.inv()
    }

    fn unit_normalizer(&self) -> Self {
        self.inv().unwrap_or_else(RatFunc::one)
    }

    fn normalized(&self) -> Self {
        if self.is_zero() {
            RatFunc::zero()
        } else {
            RatFunc::one()
        }
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| RatFunc {
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = F2Poly> {
        proptest::collection::vec(any::<bool>(), 0..12).prop_map(|b| F2Poly::from_bits(&b))
    }

    fn ratfunc() -> impl Strategy<Value = RatFunc> {
        (poly(), poly()).prop_filter_map("zero denominator", |(n, d)| RatFunc::new(n, d))
    }

    #[test]
    fn display_forms() {
        let t = RatFunc::t_power(1);
        let one_plus_t = RatFunc::one() + t.clone();
        assert_eq!(
            (one_plus_t.clone() * t.inv().unwrap()).to_string(),
            "(t+1)/t"
        );
        assert_eq!(RatFunc::t_power(-2).to_string(), "1/t^2");
        assert_eq!(one_plus_t.to_string(), "t+1");
    }

    #[test]
    fn laurent_round_trip() {
        let p = LaurentPoly::from_exponents([-3, 0, 5]);
        assert_eq!(RatFunc::from(p.clone()).to_laurent(), Some(p));
    }

    proptest! {
        #[test]
        fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
            prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c);
            if let Some(ai) = a.inv() {
                prop_assert_eq!(a * ai, RatFunc::one());
            }
        }

        #[test]
        fn reduced_representation(a in ratfunc()) {
            prop_assert!(a.numer().gcd(a.denom()).is_one() || a.is_zero());
        }
    }
}
