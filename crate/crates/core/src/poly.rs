//! Multivariate polynomials with exact coefficients.
//!
//! These are the coefficient functions of field forms. The ring is closed
//! under partial derivatives and under substitution of polynomials for the
//! variables, so `d` and affine pullbacks stay exact.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::scalar::{is_one, parse_rational, Scalar};

/// Variable names for a `(1+n)`-dimensional spacetime: `t, x, y, z` when
/// `n = 3`, otherwise `t, x1, …, xn`.
pub fn coordinate_names(dim: usize) -> Vec<String> {
    (0..dim)
        .map(|i| match (dim, i) {
            (_, 0) => "t".to_string(),
            (4, 1) => "x".to_string(),
            (4, 2) => "y".to_string(),
            (4, 3) => "z".to_string(),
            (_, i) => format!("x{i}"),
        })
        .collect()
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<S> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, S>,
}

impl<S: Scalar> Polynomial<S> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, S::one())
    }

    /// The coordinate function `x^i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable {i} out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(e, S::one())
    }

    pub fn monomial(exponents: Vec<u32>, c: S) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, c);
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let sum = v.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = sum;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &S)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exponents: &[u32]) -> S {
        self.terms.get(exponents).cloned().unwrap_or_else(S::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Constant value if the polynomial has no variable dependence.
    pub fn as_constant(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => self.terms.get(&vec![0; self.nvars]).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// `∂/∂x^i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c.clone() * S::from_i64(i64::from(e[i])));
        }
        out
    }

    /// Composition `p(q_0, …, q_{k-1})`; every `q_j` shares one variable set.
    pub fn substitute(&self, values: &[Polynomial<S>]) -> Result<Self> {
        if values.len() != self.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: values.len(),
            });
        }
        let target = values.first().map_or(0, |v| v.nvars);
        if let Some(v) = values.iter().find(|v| v.nvars != target) {
            return Err(Error::VariableMismatch {
                left: target,
                right: v.nvars,
            });
        }
        let mut powers: Vec<Vec<Polynomial<S>>> = values.iter().map(|v| vec![Self::one(v.nvars)]).collect();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (j, &k) in e.iter().enumerate() {
                let cache = &mut powers[j];
                while cache.len() <= k as usize {
                    let next = cache.last().unwrap() * &values[j];
                    cache.push(next);
                }
                term = &term * &cache[k as usize];
            }
            out = out + term;
        }
        Ok(out)
    }

    pub fn evaluate(&self, point: &[S]) -> S {
        assert_eq!(point.len(), self.nvars);
        let mut acc = S::zero();
        for (e, c) in &self.terms {
            let mut v = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    v = v * x.clone();
                }
            }
            acc = acc + v;
        }
        acc
    }

    /// Prints with the given variable names, highest total degree first.
    pub fn format_with(&self, names: &[String]) -> String {
        assert_eq!(names.len(), self.nvars);
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut out = String::new();
        for (k, e) in keys.into_iter().enumerate() {
            let c = &self.terms[e];
            let negative = c.is_negative_value();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let factors: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(&p, _)| p > 0)
                .map(|(&p, n)| if p == 1 { n.clone() } else { format!("{n}^{p}") })
                .collect();
            if factors.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !is_one(&abs) {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.nvars, other.nvars, "polynomials over different variables");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), if negate { -c.clone() } else { c.clone() });
        }
        out
    }
}

impl<S: Scalar> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&coordinate_names(self.nvars)))
    }
}

impl<S: fmt::Debug> fmt::Debug for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<S: Scalar> Add for Polynomial<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.combine(&rhs, false)
    }
}

impl<S: Scalar> Add<&Polynomial<S>> for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn add(self, rhs: &Polynomial<S>) -> Polynomial<S> {
        self.combine(rhs, false)
    }
}

impl<S: Scalar> Sub for Polynomial<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.combine(&rhs, true)
    }
}

impl<S: Scalar> Sub<&Polynomial<S>> for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn sub(self, rhs: &Polynomial<S>) -> Polynomial<S> {
        self.combine(rhs, true)
    }
}

impl<S: Scalar> Neg for Polynomial<S> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Neg for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn neg(self) -> Polynomial<S> {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Mul<&Polynomial<S>> for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn mul(self, rhs: &Polynomial<S>) -> Polynomial<S> {
        assert_eq!(self.nvars, rhs.nvars, "polynomials over different variables");
        let mut out = Polynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<S: Scalar> Mul for Polynomial<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

struct Parser<'a, S> {
    text: &'a str,
    pos: usize,
    names: &'a [String],
    _scalar: std::marker::PhantomData<S>,
}

impl<'a, S: Scalar> Parser<'a, S> {
    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&f) {
            self.pos += self.peek().unwrap().len_utf8();
        }
        &self.text[start..self.pos]
    }

    fn expr(&mut self) -> Result<Polynomial<S>> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        self.skip_ws();
        self.peek()
            .is_some_and(|c| c.is_ascii_alphanumeric() || c == '(' || c == '_')
    }

    fn term(&mut self) -> Result<Polynomial<S>> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let at = self.pos;
                let rhs = self.unary()?;
                let c = rhs
                    .as_constant()
                    .ok_or_else(|| Error::parse(at, "division by a non-constant"))?;
                if c.is_zero() {
                    return Err(Error::parse(at, "division by zero"));
                }
                acc = acc.scale(&(S::one() / c));
            } else if self.starts_factor() {
                acc = &acc * &self.unary()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial<S>> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat('^') {
            self.skip_ws();
            let at = self.pos;
            let digits = self.take_while(|c| c.is_ascii_digit());
            let k: u32 = digits
                .parse()
                .map_err(|_| Error::parse(at, "expected a non-negative integer exponent"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Polynomial<S>> {
        self.skip_ws();
        let at = self.pos;
        let nvars = self.names.len();
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::parse(self.pos, "expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                let v: BigRational = parse_rational(digits)?;
                Ok(Polynomial::constant(nvars, S::from_big_rational(&v)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
                let i = self
                    .names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| Error::parse(at, format!("unknown variable `{name}`")))?;
                Ok(Polynomial::var(nvars, i))
            }
            Some(c) => Err(Error::parse(at, format!("unexpected `{c}`"))),
            None => Err(Error::parse(at, "unexpected end of input")),
        }
    }
}

/// Parses `3*x^2*y - t`-style text over the named variables. `+ - * /`,
/// integer powers, parentheses and implicit multiplication (`2x y`) are
/// accepted; division only by nonzero constants.
pub fn parse_polynomial<S: Scalar>(text: &str, names: &[String]) -> Result<Polynomial<S>> {
    let mut p = Parser {
        text,
        pos: 0,
        names,
        _scalar: std::marker::PhantomData,
    };
    let out = p.expr()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(Error::parse(p.pos, "trailing input"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    type P = Polynomial<Rational>;

    fn p(text: &str) -> P {
        parse_polynomial(text, &coordinate_names(4)).unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("3*x^2*y - t").to_string(), "3*x^2*y - t");
        assert_eq!(p("-t + 3 x^2 y").to_string(), "3*x^2*y - t");
        assert_eq!(p("(x+y)^2").to_string(), "x^2 + 2*x*y + y^2");
        assert_eq!(p("x/2 - 1/3").to_string(), "1/2*x - 1/3");
        assert_eq!(p("x - x").to_string(), "0");
        assert_eq!(p("2(t - z)").to_string(), "2*t - 2*z");
    }

    #[test]
    fn parse_errors() {
        let names = coordinate_names(4);
        for bad in ["", "x +", "q", "x/y", "1/0", "x^-1", "(x", "x)"] {
            assert!(parse_polynomial::<Rational>(bad, &names).is_err(), "{bad}");
        }
    }

    #[test]
    fn derivatives() {
        let f = p("x^3*y + t*z - 5");
        assert_eq!(f.partial(1), p("3*x^2*y"));
        assert_eq!(f.partial(0), p("z"));
        assert!(p("7").partial(2).is_zero());
    }

    #[test]
    fn substitution_composes() {
        let f = p("x*y + t");
        let vals = vec![p("t"), p("x + 2*t"), p("y"), p("z")];
        assert_eq!(f.substitute(&vals).unwrap(), p("x*y + 2*t*y + t"));
        let q = Rational::from_i64;
        assert_eq!(
            f.evaluate(&[q(1), q(2), q(3), q(4)]),
            q(7)
        );
    }

    #[test]
    fn round_trip_through_text() {
        let f = p("1/2*t^3 - 4*x*y*z + y^2 - 3");
        assert_eq!(p(&f.to_string()), f);
    }
}
