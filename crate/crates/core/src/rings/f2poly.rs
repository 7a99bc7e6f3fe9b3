use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{EuclideanDomain, Ring, RingTag};

/// Polynomial over F2 in one variable, stored as packed bits.
///
/// Bit `i` of the packed words is the coefficient of `x^i`. The word vector
/// never ends in a zero word, so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct F2Poly {
    words: Vec<u64>,
}

impl F2Poly {
    pub fn monomial(degree: usize) -> Self {
        let mut words = vec![0u64; degree / 64 + 1];
        words[degree / 64] = 1 << (degree % 64);
        F2Poly { words }
    }

    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = F2Poly::zero();
        for e in exps {
            p.flip(e);
        }
        p
    }

    /// Coefficients listed from degree zero upward.
    pub fn from_bits(bits: &[bool]) -> Self {
        F2Poly::from_exponents(bits.iter().enumerate().filter(|(_, b)| **b).map(|(i, _)| i))
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn flip(&mut self, i: usize) {
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] ^= 1 << (i % 64);
        self.trim();
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.words
            .iter()
            .position(|w| *w != 0)
            .map(|i| i * 64 + self.words[i].trailing_zeros() as usize)
    }

    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            (0..64)
                .filter(move |b| (w >> b) & 1 == 1)
                .map(move |b| wi * 64 + b)
        })
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return F2Poly::zero();
        }
        let (wshift, bshift) = (k / 64, k % 64);
        let mut words = vec![0u64; self.words.len() + wshift + 1];
        for (i, &w) in self.words.iter().enumerate() {
            words[i + wshift] ^= w << bshift;
            if bshift > 0 {
                words[i + wshift + 1] ^= w >> (64 - bshift);
            }
        }
        let mut p = F2Poly { words };
        p.trim();
        p
    }

    /// Drops the `k` lowest coefficients.
    pub fn shr(&self, k: usize) -> Self {
        let (wshift, bshift) = (k / 64, k % 64);
        if wshift >= self.words.len() {
            return F2Poly::zero();
        }
        let src = &self.words[wshift..];
        let mut words = vec![0u64; src.len()];
        for i in 0..src.len() {
            words[i] = src[i] >> bshift;
            if bshift > 0 && i + 1 < src.len() {
                words[i] |= src[i + 1] << (64 - bshift);
            }
        }
        let mut p = F2Poly { words };
        p.trim();
        p
    }

    /// Keeps only coefficients of degree below `k`.
    pub fn truncate(&self, k: usize) -> Self {
        let mut words: Vec<u64> = self.words.iter().take(k.div_ceil(64)).copied().collect();
        if k % 64 != 0 {
            if let Some(last) = words.get_mut(k / 64) {
                *last &= (1u64 << (k % 64)) - 1;
            }
        }
        let mut p = F2Poly { words };
        p.trim();
        p
    }

    pub fn eval_at_one(&self) -> bool {
        self.weight() % 2 == 1
    }

    pub fn fmt_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut exps: Vec<usize> = self.exponents().collect();
        exps.reverse();
        exps.iter()
            .map(|&e| match e {
                0 => "1".to_string(),
                1 => var.to_string(),
                _ => format!("{var}^{e}"),
            })
            .collect::<Vec<_>>()
            .join("+")
    }
}

impl fmt::Debug for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Poly({})", self.fmt_in("x"))
    }
}

impl fmt::Display for F2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_in("U"))
    }
}

impl Zero for F2Poly {
    fn zero() -> Self {
        F2Poly { words: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.words.is_empty()
    }
}

impl One for F2Poly {
    fn one() -> Self {
        F2Poly { words: vec![1] }
    }
}

impl Add for F2Poly {
    type Output = F2Poly;
    fn add(self, rhs: F2Poly) -> F2Poly {
        &self + &rhs
    }
}

impl<'a> Add<&'a F2Poly> for &'a F2Poly {
    type Output = F2Poly;
    fn add(self, rhs: &F2Poly) -> F2Poly {
        let (long, short) = if self.words.len() >= rhs.words.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        let mut p = F2Poly { words };
        p.trim();
        p
    }
}

impl Sub for F2Poly {
    type Output = F2Poly;
    fn sub(self, rhs: F2Poly) -> F2Poly {
        self + rhs
    }
}

impl Neg for F2Poly {
    type Output = F2Poly;
    fn neg(self) -> F2Poly {
        self
    }
}

fn clmul(a: u64, b: u64) -> (u64, u64) {
    let (mut lo, mut hi) = (0u64, 0u64);
    for i in 0..64 {
        if (b >> i) & 1 == 1 {
            lo ^= a << i;
            if i > 0 {
                hi ^= a >> (64 - i);
            }
        }
    }
    (lo, hi)
}

impl<'a> Mul<&'a F2Poly> for &'a F2Poly {
    type Output = F2Poly;
    fn mul(self, rhs: &F2Poly) -> F2Poly {
        if self.is_zero() || rhs.is_zero() {
            return F2Poly::zero();
        }
        let mut words = vec![0u64; self.words.len() + rhs.words.len()];
        for (i, &a) in self.words.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.words.iter().enumerate() {
                let (lo, hi) = clmul(a, b);
                words[i + j] ^= lo;
                words[i + j + 1] ^= hi;
            }
        }
        let mut p = F2Poly { words };
        p.trim();
        p
    }
}

impl Mul for F2Poly {
    type Output = F2Poly;
    fn mul(self, rhs: F2Poly) -> F2Poly {
        &self * &rhs
    }
}

impl Ring for F2Poly {
    fn ring_tag() -> RingTag {
        RingTag::F2Poly
    }

    fn has_u() -> bool {
        true
    }

    fn u_degree(&self) -> Option<u32> {
        if self.weight() == 1 {
            self.degree().map(|d| d as u32)
        } else {
            None
        }
    }
}

impl EuclideanDomain for F2Poly {
    type Norm = usize;

    fn norm(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    fn div_rem(&self, other: &Self) -> (Self, Self) {
        let db = other.degree().expect("division by the zero polynomial");
        let mut rem = self.clone();
        let mut quo = F2Poly::zero();
        while let Some(dr) = rem.degree() {
            if dr < db {
                break;
            }
            quo.flip(dr - db);
            rem = &rem + &other.shl(dr - db);
        }
        (quo, rem)
    }

    fn is_unit(&self) -> bool {
        self.is_one()
    }

    fn unit_inverse(&self) -> Option<Self> {
        self.is_one().then(F2Poly::one)
    }

    fn unit_normalizer(&self) -> Self {
        F2Poly::one()
    }
}
