//! Text grammar for ring elements.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := power (('*' | '/') power)*
//! power    := atom ['^' exponent]
//! atom     := integer | ident | '(' expr ')'
//! exponent := ['-'] integer | '{' rational '}' | '(' rational ')'
//! ident    := 't' | 'U' | 'U_z' | 'U_w0'
//! ```
//!
//! Examples: `t^{3/2}+1`, `U^2`, `(t+1)/t`, `t^-1`, `(t+1)*U_z+U_w0`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{
    EuclideanDomain, F2Poly, Field, LaurentPoly, MPoly, NovikovElem, Poly, RatFunc, Ring, F2, Q,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
enum Ast {
    Int(BigInt),
    Var(String, usize),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
    Div(Box<Ast>, Box<Ast>, usize),
    Neg(Box<Ast>),
    Pow(Box<Ast>, Q, usize),
}

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            text,
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse_at(self.text, self.pos, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<Ast> {
        let mut lhs = if self.eat(b'-') {
            Ast::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat(b'-') {
                lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Ast> {
        let mut lhs = self.power()?;
        loop {
            if self.eat(b'*') {
                lhs = Ast::Mul(Box::new(lhs), Box::new(self.power()?));
            } else if self.peek() == Some(b'/') {
                let at = self.pos;
                self.pos += 1;
                lhs = Ast::Div(Box::new(lhs), Box::new(self.power()?), at);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn power(&mut self) -> Result<Ast> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            let at = self.pos;
            self.pos += 1;
            let exp = self.exponent()?;
            return Ok(Ast::Pow(Box::new(base), exp, at));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        Ok(self.text[start..self.pos].parse().expect("digits"))
    }

    fn rational(&mut self) -> Result<Q> {
        let neg = self.eat(b'-');
        let n = self.integer()?;
        let d = if self.eat(b'/') {
            let d = self.integer()?;
            if d.is_zero() {
                return Err(self.err("zero denominator in exponent"));
            }
            d
        } else {
            BigInt::one()
        };
        let r = Q::new(n, d);
        Ok(if neg { -r } else { r })
    }

    fn exponent(&mut self) -> Result<Q> {
        if self.eat(b'{') {
            let r = self.rational()?;
            self.expect(b'}')?;
            Ok(r)
        } else if self.eat(b'(') {
            let r = self.rational()?;
            self.expect(b')')?;
            Ok(r)
        } else {
            let neg = self.eat(b'-');
            let n = Q::from_integer(self.integer()?);
            Ok(if neg { -n } else { n })
        }
    }

    fn atom(&mut self) -> Result<Ast> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => Ok(Ast::Int(self.integer()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric()
                        || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = &self.text[start..self.pos];
                match name {
                    "t" | "U" | "U_z" | "U_w0" => Ok(Ast::Var(name.to_string(), start)),
                    _ => {
                        self.pos = start;
                        Err(self.err(format!("unknown symbol `{name}`")))
                    }
                }
            }
            Some(c) => Err(self.err(format!("unexpected `{}`", c as char))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Ring elements that can be read from the coefficient grammar.
pub trait Coefficient: Ring {
    fn from_integer(n: &BigInt) -> Self;

    fn variable(name: &str) -> Option<Self>;

    /// `name^exp` for exponents that are not non-negative integers.
    fn variable_power(name: &str, exp: &Q) -> Option<Self> {
        let _ = (name, exp);
        None
    }

    fn try_div(&self, other: &Self) -> Option<Self>;
}

fn char2(n: &BigInt) -> bool {
    n.bit(0)
}

fn eval<R: Coefficient>(ast: &Ast, text: &str) -> Result<R> {
    Ok(match ast {
        Ast::Int(n) => R::from_integer(n),
        Ast::Var(name, at) => R::variable(name).ok_or_else(|| {
            Error::parse_at(
                text,
                *at,
                format!("symbol `{name}` not in ring {}", R::ring_tag()),
            )
        })?,
        Ast::Add(a, b) => eval::<R>(a, text)? + eval::<R>(b, text)?,
        Ast::Sub(a, b) => eval::<R>(a, text)? - eval::<R>(b, text)?,
        Ast::Mul(a, b) => eval::<R>(a, text)? * eval::<R>(b, text)?,
        Ast::Neg(a) => -eval::<R>(a, text)?,
        Ast::Div(a, b, at) => {
            let d = eval::<R>(b, text)?;
            if d.is_zero() {
                return Err(Error::parse_at(text, *at, "division by zero"));
            }
            eval::<R>(a, text)?.try_div(&d).ok_or_else(|| {
                Error::parse_at(text, *at, format!("quotient not in ring {}", R::ring_tag()))
            })?
        }
        Ast::Pow(base, exp, at) => {
            if let (Ast::Var(name, _), false) =
                (base.as_ref(), exp.is_integer() && !exp.is_negative())
            {
                return R::variable_power(name, exp).ok_or_else(|| {
                    Error::parse_at(
                        text,
                        *at,
                        format!("exponent {exp} not allowed in ring {}", R::ring_tag()),
                    )
                });
            }
            if !exp.is_integer() {
                return Err(Error::parse_at(
                    text,
                    *at,
                    "fractional power of a compound expression",
                ));
            }
            let b = eval::<R>(base, text)?;
            let k = exp
                .to_integer()
                .abs()
                .to_u32()
                .ok_or_else(|| Error::parse_at(text, *at, "exponent too large"))?;
            let p = b.pow(k);
            if exp.is_negative() {
                R::one()
                    .try_div(&p)
                    .ok_or_else(|| Error::parse_at(text, *at, "negative power of a non-unit"))?
            } else {
                p
            }
        }
    })
}

pub fn parse_coefficient<R: Coefficient>(text: &str) -> Result<R> {
    let mut p = Parser::new(text);
    let ast = p.expr()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    eval(&ast, text)
}

fn field_div<K: Field>(a: &K, b: &K) -> Option<K> {
    b.inv().map(|bi| a.clone() * bi)
}

fn euclid_div<R: EuclideanDomain>(a: &R, b: &R) -> Option<R> {
    let (q, r) = a.div_rem(b);
    r.is_zero().then_some(q)
}

fn integer_exp(exp: &Q) -> Option<i64> {
    if exp.is_integer() {
        exp.to_integer().to_i64()
    } else {
        None
    }
}

impl Coefficient for BigInt {
    fn from_integer(n: &BigInt) -> Self {
        n.clone()
    }
    fn variable(_: &str) -> Option<Self> {
        None
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        euclid_div(self, other)
    }
}

impl Coefficient for Q {
    fn from_integer(n: &BigInt) -> Self {
        Q::from_integer(n.clone())
    }
    fn variable(_: &str) -> Option<Self> {
        None
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        field_div(self, other)
    }
}

impl Coefficient for F2 {
    fn from_integer(n: &BigInt) -> Self {
        F2(char2(n))
    }
    fn variable(_: &str) -> Option<Self> {
        None
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        field_div(self, other)
    }
}

impl Coefficient for F2Poly {
    fn from_integer(n: &BigInt) -> Self {
        if char2(n) {
            F2Poly::one()
        } else {
            F2Poly::zero()
        }
    }
    fn variable(name: &str) -> Option<Self> {
        (name == "U").then(|| F2Poly::monomial(1))
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        euclid_div(self, other)
    }
}

impl Coefficient for LaurentPoly {
    fn from_integer(n: &BigInt) -> Self {
        if char2(n) {
            LaurentPoly::one()
        } else {
            LaurentPoly::zero()
        }
    }
    fn variable(name: &str) -> Option<Self> {
        (name == "t").then(|| LaurentPoly::t_power(1))
    }
    fn variable_power(name: &str, exp: &Q) -> Option<Self> {
        (name == "t").then_some(())?;
        integer_exp(exp).map(LaurentPoly::t_power)
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        euclid_div(self, other)
    }
}

impl Coefficient for RatFunc {
    fn from_integer(n: &BigInt) -> Self {
        if char2(n) {
            RatFunc::one()
        } else {
            RatFunc::zero()
        }
    }
    fn variable(name: &str) -> Option<Self> {
        (name == "t").then(|| RatFunc::t_power(1))
    }
    fn variable_power(name: &str, exp: &Q) -> Option<Self> {
        (name == "t").then_some(())?;
        integer_exp(exp).map(RatFunc::t_power)
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        field_div(self, other)
    }
}

impl Coefficient for NovikovElem {
    fn from_integer(n: &BigInt) -> Self {
        if char2(n) {
            NovikovElem::one()
        } else {
            NovikovElem::zero()
        }
    }
    fn variable(name: &str) -> Option<Self> {
        (name == "t").then(|| NovikovElem::monomial(Q::one()))
    }
    fn variable_power(name: &str, exp: &Q) -> Option<Self> {
        (name == "t").then(|| NovikovElem::monomial(exp.clone()))
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        // only monomial divisors have finite inverses
        if other.support().len() == 1 {
            let e = other.min_exponent()?.clone();
            Some(self.mul_t_power(&-e))
        } else {
            None
        }
    }
}

impl Coefficient for Poly<RatFunc> {
    fn from_integer(n: &BigInt) -> Self {
        Poly::constant(RatFunc::from_integer(n))
    }
    fn variable(name: &str) -> Option<Self> {
        match name {
            "U" | "U_z" => Some(Poly::u_power(1)),
            "t" => Some(Poly::constant(RatFunc::t_power(1))),
            _ => None,
        }
    }
    fn variable_power(name: &str, exp: &Q) -> Option<Self> {
        (name == "t").then_some(())?;
        integer_exp(exp).map(|k| Poly::constant(RatFunc::t_power(k)))
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        euclid_div(self, other)
    }
}

impl Coefficient for MPoly<RatFunc> {
    fn from_integer(n: &BigInt) -> Self {
        MPoly::constant(RatFunc::from_integer(n))
    }
    fn variable(name: &str) -> Option<Self> {
        match name {
            "U" | "U_z" => Some(MPoly::var(0)),
            "U_w0" => Some(MPoly::var(1)),
            "t" => Some(MPoly::constant(RatFunc::t_power(1))),
            _ => None,
        }
    }
    fn variable_power(name: &str, exp: &Q) -> Option<Self> {
        (name == "t").then_some(())?;
        integer_exp(exp).map(|k| MPoly::constant(RatFunc::t_power(k)))
    }
    fn try_div(&self, other: &Self) -> Option<Self> {
        // division by nonzero constants only
        let mut terms = other.terms();
        let (m, c) = terms.next()?;
        if terms.next().is_some() || !m.is_empty() {
            return None;
        }
        let ci = c.inv()?;
        Some(self.clone() * MPoly::constant(ci))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{q, qi};
    use proptest::prelude::*;

    #[test]
    fn parses_examples() {
        let a: NovikovElem = parse_coefficient("t^{3/2}+1").unwrap();
        assert_eq!(a, NovikovElem::from_exponents([q(3, 2), qi(0)]));
        let u: F2Poly = parse_coefficient("U^2").unwrap();
        assert_eq!(u, F2Poly::monomial(2));
        let r: RatFunc = parse_coefficient("(t+1)/t").unwrap();
        assert_eq!(r.to_string(), "(t+1)/t");
        let l: LaurentPoly = parse_coefficient("t^-1").unwrap();
        assert_eq!(l, LaurentPoly::t_power(-1));
        let z: BigInt = parse_coefficient("-3 + 2*4").unwrap();
        assert_eq!(z, BigInt::from(5));
    }

    #[test]
    fn reports_position() {
        let err = parse_coefficient::<RatFunc>("t + x").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 1,
                column: 5,
                message: "unknown symbol `x`".into()
            }
        );
        assert!(parse_coefficient::<LaurentPoly>("1/(t+1)").is_err());
        assert!(parse_coefficient::<RatFunc>("t^{1/2}").is_err());
    }

    fn f2poly() -> impl Strategy<Value = F2Poly> {
        proptest::collection::vec(any::<bool>(), 0..10).prop_map(|b| F2Poly::from_bits(&b))
    }

    proptest! {
        #[test]
        fn display_round_trips_ratfunc(n in f2poly(), d in f2poly()) {
            prop_assume!(!d.is_zero());
            let r = RatFunc::new(n, d).unwrap();
            prop_assert_eq!(parse_coefficient::<RatFunc>(&r.to_string()).unwrap(), r);
        }

        #[test]
        fn display_round_trips_laurent(exps in proptest::collection::btree_set(-9i64..9, 0..6)) {
            let p = LaurentPoly::from_exponents(exps);
            prop_assert_eq!(parse_coefficient::<LaurentPoly>(&p.to_string()).unwrap(), p);
        }

        #[test]
        fn display_round_trips_novikov(exps in proptest::collection::vec((-9i64..9, 1i64..5), 0..6)) {
            let a = NovikovElem::from_exponents(exps.into_iter().map(|(n, d)| q(n, d)));
            prop_assert_eq!(parse_coefficient::<NovikovElem>(&a.to_string()).unwrap(), a);
        }

        #[test]
        fn display_round_trips_poly(cs in proptest::collection::vec((f2poly(), f2poly()), 0..4)) {
            let p: Poly<RatFunc> = Poly::from_coeffs(
                cs.into_iter().filter_map(|(n, d)| RatFunc::new(n, d)).collect(),
            );
            prop_assert_eq!(parse_coefficient::<Poly<RatFunc>>(&p.to_string()).unwrap(), p);
        }
    }
}
