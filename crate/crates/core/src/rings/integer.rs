use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{EuclideanDomain, Field, Ring, RingTag, Q};

impl Ring for BigInt {
    fn ring_tag() -> RingTag {
        RingTag::Integers
    }
}

impl EuclideanDomain for BigInt {
    type Norm = num_bigint::BigUint;

    fn norm(&self) -> Self::Norm {
        self.magnitude().clone()
    }

    fn div_rem(&self, other: &Self) -> (Self, Self) {
        // floor division keeps |r| < |other|
        self.div_mod_floor(other)
    }

    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.is_unit().then(|| self.clone())
    }

    fn unit_normalizer(&self) -> Self {
        if self.sign() == Sign::Minus {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    }
}

impl Ring for Q {
    fn ring_tag() -> RingTag {
        RingTag::Rationals
    }
}

impl EuclideanDomain for Q {
    type Norm = u8;

    fn norm(&self) -> u8 {
        0
    }

    fn div_rem(&self, other: &Self) -> (Self, Self) {
        (self / other, Q::zero())
    }

    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn unit_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }

    fn unit_normalizer(&self) -> Self {
        if self.is_zero() {
            Q::one()
        } else {
            self.recip()
        }
    }

    fn normalized(&self) -> Self {
        if self.is_zero() {
            Q::zero()
        } else {
            Q::one()
        }
    }
}

impl Field for Q {
    fn inv(&self) -> Option<Self> {
        self.unit_inverse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn remainder_smaller_than_divisor() {
        let a = BigInt::from(-7);
        let b = BigInt::from(3);
        let (q, r) = EuclideanDomain::div_rem(&a, &b);
        assert_eq!(q * &b + &r, a);
        assert!(r.abs() < b.abs());
    }

    #[test]
    fn gcd_is_positive() {
        let g = EuclideanDomain::gcd(&BigInt::from(-12), &BigInt::from(18));
        assert_eq!(g, BigInt::from(6));
        let (g, s, t) = BigInt::from(-12).ext_gcd(&BigInt::from(18));
        assert_eq!(s * BigInt::from(-12) + t * BigInt::from(18), g);
    }
}
