use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::{fmt_coeff_times, PolyTag};
use super::{Field, Poly, Ring, RingTag};

/// Exponent vector with trailing zeros trimmed.
pub type Monomial = Vec<u32>;

/// Variable names used when printing; index 0 is the original `U` variable.
pub const MPOLY_VARS: [&str; 2] = ["U_z", "U_w0"];

/// Polynomial in several `U` variables over a field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly<K> {
    terms: BTreeMap<Monomial, K>,
}

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
            .collect(),
    )
}

impl<K: Field> MPoly<K> {
    pub fn term(c: K, exps: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(exps), c);
        }
        MPoly { terms }
    }

    pub fn constant(c: K) -> Self {
        MPoly::term(c, Vec::new())
    }

    pub fn var(i: usize) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = 1;
        MPoly::term(K::one(), e)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &Monomial) -> K {
        self.terms.get(exps).cloned().unwrap_or_else(K::zero)
    }

    pub fn total_degree(m: &Monomial) -> u32 {
        m.iter().sum()
    }

    /// Embeds a polynomial in `U` as a polynomial in variable `var`.
    pub fn from_poly(p: &Poly<K>, var: usize) -> Self {
        let mut out = MPoly::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut e = vec![0; var + 1];
            e[var] = k as u32;
            out = out + MPoly::term(c.clone(), e);
        }
        out
    }

    /// Sets every variable equal to `U`.
    pub fn identify_variables(&self) -> Poly<K> {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out = out + Poly::monomial(c.clone(), Self::total_degree(m) as usize);
        }
        out
    }

    fn insert_add(terms: &mut BTreeMap<Monomial, K>, m: Monomial, c: K) {
        let entry = terms.remove(&m).unwrap_or_else(K::zero) + c;
        if !entry.is_zero() {
            terms.insert(m, entry);
        }
    }
}

impl<K: Field> fmt::Display for MPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| **e > 0)
                    .map(|(i, e)| {
                        let name = MPOLY_VARS
                            .get(i)
                            .map_or(format!("U_{i}"), |s| s.to_string());
                        if *e == 1 {
                            name
                        } else {
                            format!("{name}^{e}")
                        }
                    })
                    .collect();
                fmt_coeff_times(&c.to_string(), &vars.join("*"))
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

impl<K: Field> fmt::Debug for MPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl<K: Field> Zero for MPoly<K> {
    fn zero() -> Self {
        MPoly {
            terms: BTreeMap::new(),
        }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<K: Field> One for MPoly<K> {
    fn one() -> Self {
        MPoly::constant(K::one())
    }
}

impl<K: Field> Add for MPoly<K> {
    type Output = MPoly<K>;
    fn add(self, rhs: MPoly<K>) -> MPoly<K> {
        let mut terms = self.terms;
        for (m, c) in rhs.terms {
            MPoly::insert_add(&mut terms, m, c);
        }
        MPoly { terms }
    }
}

impl<K: Field> Sub for MPoly<K> {
    type Output = MPoly<K>;
    fn sub(self, rhs: MPoly<K>) -> MPoly<K> {
        self + (-rhs)
    }
}

impl<K: Field> Neg for MPoly<K> {
    type Output = MPoly<K>;
    fn neg(self) -> MPoly<K> {
        MPoly {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<K: Field> Mul for MPoly<K> {
    type Output = MPoly<K>;
    fn mul(self, rhs: MPoly<K>) -> MPoly<K> {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                MPoly::insert_add(&mut terms, mono_mul(ma, mb), ca.clone() * cb.clone());
            }
        }
        MPoly { terms }
    }
}

impl<K: Field + PolyTag> Ring for MPoly<K> {
    fn ring_tag() -> RingTag {
        K::mpoly_tag()
    }

    fn has_u() -> bool {
        true
    }

    fn u_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Self::total_degree);
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::RatFunc;

    type M = MPoly<RatFunc>;

    #[test]
    fn identify_sends_difference_to_zero() {
        let d = M::var(1) + M::var(0);
        assert_eq!(d.u_degree(), Some(1));
        assert!(d.identify_variables().is_zero());
        assert_eq!(d.to_string(), "U_z+U_w0");
    }

    #[test]
    fn product_of_variables() {
        let p = M::var(0) * M::var(1) * M::var(1);
        assert_eq!(p.to_string(), "U_z*U_w0^2");
        assert_eq!(p.u_degree(), Some(3));
    }
}
