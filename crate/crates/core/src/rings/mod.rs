//! Exact coefficient rings.
//!
//! Everything here is characteristic-2 polynomial arithmetic except the
//! integers, which carry linking matrices. Algorithms elsewhere in the crate
//! are written against the [`Ring`], [`EuclideanDomain`] and [`Field`] traits
//! and instantiated through the aliases exported at the crate root.

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

mod f2;
mod f2poly;
mod integer;
mod laurent;
mod mpoly;
mod novikov;
pub mod parse;
mod poly;
mod ratfunc;
pub(crate) mod rational;

pub use f2::F2;
pub use f2poly::F2Poly;
pub use laurent::LaurentPoly;
pub use mpoly::{MPoly, Monomial, MPOLY_VARS};
pub use novikov::{rank_truncated, twist_action, NovikovElem, TwistClass};
pub use parse::{parse_coefficient, Coefficient};
pub use poly::{Poly, PolyTag};
pub use ratfunc::RatFunc;
pub use rational::{q, qi, Q};

/// Identifies the coefficient ring of a matrix, complex or module summand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RingTag {
    #[serde(rename = "Z")]
    Integers,
    #[serde(rename = "Q")]
    Rationals,
    #[serde(rename = "F2")]
    F2,
    /// F2[U]
    #[serde(rename = "F2[U]")]
    F2Poly,
    /// F2[t, t^-1], written L(t)
    #[serde(rename = "L(t)")]
    Laurent,
    /// F2(t), the computational stand-in for the Novikov field
    #[serde(rename = "F2(t)")]
    RatFunc,
    #[serde(rename = "F2(t)[U]")]
    RatFuncU,
    #[serde(rename = "F2(t)[U_z,U_w0]")]
    RatFuncUU,
    #[serde(rename = "Lambda")]
    Lambda,
    #[serde(rename = "Lambda[U]")]
    LambdaU,
    #[serde(rename = "other")]
    Other,
}

impl RingTag {
    pub fn is_euclidean(self) -> bool {
        matches!(
            self,
            RingTag::Integers
                | RingTag::Rationals
                | RingTag::F2
                | RingTag::F2Poly
                | RingTag::Laurent
                | RingTag::RatFunc
                | RingTag::RatFuncU
        )
    }

    pub fn is_field(self) -> bool {
        matches!(
            self,
            RingTag::Rationals | RingTag::F2 | RingTag::RatFunc | RingTag::Lambda
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            RingTag::Integers => "Z",
            RingTag::Rationals => "Q",
            RingTag::F2 => "F2",
            RingTag::F2Poly => "F2[U]",
            RingTag::Laurent => "L(t)",
            RingTag::RatFunc => "F2(t)",
            RingTag::RatFuncU => "F2(t)[U]",
            RingTag::RatFuncUU => "F2(t)[U_z,U_w0]",
            RingTag::Lambda => "Lambda",
            RingTag::LambdaU => "Lambda[U]",
            RingTag::Other => "other",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        let all = [
            RingTag::Integers,
            RingTag::Rationals,
            RingTag::F2,
            RingTag::F2Poly,
            RingTag::Laurent,
            RingTag::RatFunc,
            RingTag::RatFuncU,
            RingTag::RatFuncUU,
            RingTag::Lambda,
            RingTag::LambdaU,
        ];
        all.into_iter().find(|t| t.name() == name)
    }
}

impl Display for RingTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Commutative ring with identity.
pub trait Ring:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn ring_tag() -> RingTag;

    /// Homogeneous degree in the U variables, or `None` if the element is
    /// not homogeneous. Rings without a U variable report `Some(0)`.
    fn u_degree(&self) -> Option<u32> {
        Some(0)
    }

    /// Whether the ring carries a `U` variable that lowers grading by two.
    fn has_u() -> bool {
        false
    }

    fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            exp >>= 1;
        }
        acc
    }
}

pub trait EuclideanDomain: Ring {
    type Norm: Ord + Clone + Debug;

    /// Euclidean size of a nonzero element.
    fn norm(&self) -> Self::Norm;

    /// Division with remainder; `other` must be nonzero.
    fn div_rem(&self, other: &Self) -> (Self, Self);

    fn is_unit(&self) -> bool;

    /// Inverse of a unit, `None` otherwise.
    fn unit_inverse(&self) -> Option<Self>;

    /// A unit `u` such that `u * self` is the canonical associate
    /// (positive, monic, or lowest exponent zero). Returns one for zero.
    fn unit_normalizer(&self) -> Self;

    fn normalized(&self) -> Self {
        self.clone() * self.unit_normalizer()
    }

    fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.normalized()
    }

    /// Returns `(g, s, t)` with `s*self + t*other = g` and `g` normalized.
    fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (quo, rem) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, rem);
            let s2 = s0 - quo.clone() * s1.clone();
            s0 = std::mem::replace(&mut s1, s2);
            let t2 = t0 - quo * t1.clone();
            t0 = std::mem::replace(&mut t1, t2);
        }
        let u = r0.unit_normalizer();
        (r0 * u.clone(), s0 * u.clone(), t0 * u)
    }
}

pub trait Field: EuclideanDomain {
    fn inv(&self) -> Option<Self>;
}
