use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{EuclideanDomain, Field, RatFunc, Ring, RingTag, Q};

/// Univariate polynomial in `U` over a field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

impl<K: Field> Poly<K> {
    pub fn from_coeffs(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: K) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(c: K, degree: usize) -> Self {
        let mut coeffs = vec![K::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::from_coeffs(coeffs)
    }

    pub fn u_power(degree: usize) -> Self {
        Poly::monomial(K::one(), degree)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> K {
        self.coeffs.get(i).cloned().unwrap_or_else(K::zero)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&K> {
        self.coeffs.last()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn scale(&self, c: &K) -> Self {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn eval(&self, x: &K) -> K {
        self.coeffs
            .iter()
            .rev()
            .fold(K::zero(), |acc, c| acc * x.clone() + c.clone())
    }
}

pub(crate) fn fmt_coeff_times(coeff: &str, var_part: &str) -> String {
    let needs_parens = coeff.contains(['+', '-', '/', ' ']);
    match (coeff, var_part.is_empty()) {
        (c, true) => c.to_string(),
        ("1", false) => var_part.to_string(),
        (c, false) if needs_parens => format!("({c})*{var_part}"),
        (c, false) => format!("{c}*{var_part}"),
    }
}

impl<K: Field> fmt::Display for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let var = match k {
                    0 => String::new(),
                    1 => "U".into(),
                    _ => format!("U^{k}"),
                };
                let c = c.to_string();
                if k == 0 && c.contains('-') {
                    format!("({c})")
                } else {
                    fmt_coeff_times(&c, &var)
                }
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl<K: Field> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<K: Field> Zero for Poly<K> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<K: Field> One for Poly<K> {
    fn one() -> Self {
        Poly::constant(K::one())
    }
}

impl<K: Field> Add for Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: Poly<K>) -> Poly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<K: Field> Sub for Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: Poly<K>) -> Poly<K> {
        self + (-rhs)
    }
}

impl<K: Field> Neg for Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<K: Field> Mul for Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: Poly<K>) -> Poly<K> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

/// Ring tag of `K[U]` for the fields that appear in practice.
pub trait PolyTag {
    fn poly_tag() -> RingTag;

    fn mpoly_tag() -> RingTag {
        RingTag::Other
    }
}

impl PolyTag for RatFunc {
    fn poly_tag() -> RingTag {
        RingTag::RatFuncU
    }

    fn mpoly_tag() -> RingTag {
        RingTag::RatFuncUU
    }
}

impl PolyTag for Q {
    fn poly_tag() -> RingTag {
        RingTag::Other
    }
}

impl PolyTag for super::F2 {
    fn poly_tag() -> RingTag {
        RingTag::F2Poly
    }
}

impl<K: Field + PolyTag> Ring for Poly<K> {
    fn ring_tag() -> RingTag {
        K::poly_tag()
    }

    fn has_u() -> bool {
        true
    }

    fn u_degree(&self) -> Option<u32> {
        let nonzero = self.coeffs.iter().filter(|c| !c.is_zero()).count();
        (nonzero == 1).then(|| self.valuation().unwrap_or(0) as u32)
    }
}

impl<K: Field + PolyTag> EuclideanDomain for Poly<K> {
    type Norm = usize;

    fn norm(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    fn div_rem(&self, other: &Self) -> (Self, Self) {
        let db = other.degree().expect("division by the zero polynomial");
        let lead_inv = other.coeffs[db].inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quo = vec![K::zero(); rem.len().saturating_sub(db).max(1)];
        while rem.len() > db {
            let top = rem.len() - 1;
            let c = rem[top].clone() * lead_inv.clone();
            if !c.is_zero() {
                for (j, b) in other.coeffs.iter().enumerate() {
                    let idx = top - db + j;
                    rem[idx] = rem[idx].clone() - c.clone() * b.clone();
                }
                quo[top - db] = c;
            }
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        (Poly::from_coeffs(quo), Poly::from_coeffs(rem))
    }

    fn is_unit(&self) -> bool {
        self.degree() == Some(0)
    }

    fn unit_inverse(&self) -> Option<Self> {
        if self.is_unit() {
            self.coeffs[0].inv().map(Poly::constant)
        } else {
            None
        }
    }

    fn unit_normalizer(&self) -> Self {
        match self.leading() {
            Some(c) => Poly::constant(c.inv().expect("nonzero leading coefficient")),
            None => Poly::one(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::F2Poly;
    use proptest::prelude::*;

    type RU = Poly<RatFunc>;

    fn ratfunc() -> impl Strategy<Value = RatFunc> {
        (0u32..16, 1u32..8).prop_map(|(n, d)| {
            let bits = |x: u32| F2Poly::from_exponents((0..5).filter(|i| (x >> i) & 1 == 1));
            RatFunc::new(bits(n), bits(d)).unwrap()
        })
    }

    fn poly() -> impl Strategy<Value = RU> {
        proptest::collection::vec(ratfunc(), 0..5).prop_map(Poly::from_coeffs)
    }

    #[test]
    fn display() {
        let t = RatFunc::t_power(1);
        let p = RU::monomial(t.clone() + RatFunc::one(), 2) + RU::u_power(1) + RU::constant(t);
        assert_eq!(p.to_string(), "(t+1)*U^2+U+t");
    }

    #[test]
    fn monomial_degree() {
        assert_eq!(RU::u_power(3).u_degree(), Some(3));
        assert_eq!((RU::u_power(3) + RU::one()).u_degree(), None);
    }

    proptest! {
        #[test]
        fn division_identity(a in poly(), b in poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(q * b.clone() + r.clone(), a);
            prop_assert!(r.is_zero() || r.degree() < b.degree());
        }
    }
}
