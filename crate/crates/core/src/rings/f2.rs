use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{EuclideanDomain, Field, Ring, RingTag};

/// The field with two elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct F2(pub bool);

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl Zero for F2 {
    fn zero() -> Self {
        F2(false)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for F2 {
    fn one() -> Self {
        F2(true)
    }
}

impl Add for F2 {
    type Output = F2;
    fn add(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}

impl Sub for F2 {
    type Output = F2;
    fn sub(self, rhs: F2) -> F2 {
        F2(self.0 ^ rhs.0)
    }
}

impl Mul for F2 {
    type Output = F2;
    fn mul(self, rhs: F2) -> F2 {
        F2(self.0 & rhs.0)
    }
}

impl Neg for F2 {
    type Output = F2;
    fn neg(self) -> F2 {
        self
    }
}

impl Ring for F2 {
    fn ring_tag() -> RingTag {
        RingTag::F2
    }
}

impl EuclideanDomain for F2 {
    type Norm = u8;

    fn norm(&self) -> u8 {
        0
    }

    fn div_rem(&self, other: &Self) -> (Self, Self) {
        assert!(other.0, "division by zero in F2");
        (*self, F2(false))
    }

    fn is_unit(&self) -> bool {
        self.0
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.0.then_some(F2(true))
    }

    fn unit_normalizer(&self) -> Self {
        F2(true)
    }
}

impl Field for F2 {
    fn inv(&self) -> Option<Self> {
        self.unit_inverse()
    }
}
