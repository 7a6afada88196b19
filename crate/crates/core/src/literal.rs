//! Text form of [`Form`] values: `dt^dx + 2/3 dy^dz`.
//!
//! Terms are separated by `+`/`-`. A term is an optional rational
//! coefficient followed by wedge factors joined by `^`. Factors are `dt`
//! (index 0) and `dx1 ... dxn`; for `n = 3` the aliases `dx, dy, dz` are also
//! accepted and are what the printer emits. A bare number is a 0-form.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::form::{check_dim, Form};
use crate::multi_index::MultiIndex;
use crate::scalar::{is_one, parse_rational, Scalar};

/// Name of the coordinate differential for frame index `i` in dimension `dim`.
pub fn factor_name(dim: usize, i: usize) -> String {
    match (dim, i) {
        (_, 0) => "dt".to_string(),
        (4, 1) => "dx".to_string(),
        (4, 2) => "dy".to_string(),
        (4, 3) => "dz".to_string(),
        (_, i) => format!("dx{i}"),
    }
}

fn factor_index(dim: usize, name: &str) -> Option<usize> {
    match name {
        "dt" => return Some(0),
        "dx" if dim == 4 => return Some(1),
        "dy" if dim == 4 => return Some(2),
        "dz" if dim == 4 => return Some(3),
        _ => {}
    }
    let i: usize = name.strip_prefix("dx")?.parse().ok()?;
    (1..dim).contains(&i).then_some(i)
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
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
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn number(&mut self) -> Result<Option<BigRational>> {
        self.skip_ws();
        let start = self.pos;
        let num = self.take_while(|c| c.is_ascii_digit());
        if num.is_empty() {
            return Ok(None);
        }
        let mut literal = num.to_string();
        let save = self.pos;
        if self.eat('/') {
            self.skip_ws();
            let den = self.take_while(|c| c.is_ascii_digit());
            if den.is_empty() {
                self.pos = save;
                return Err(Error::parse(save, "expected denominator after `/`"));
            }
            literal = format!("{num}/{den}");
        }
        parse_rational(&literal)
            .map(Some)
            .map_err(|_| Error::parse(start, format!("bad coefficient `{literal}`")))
    }
}

/// Parses a homogeneous form literal in dimension `dim`.
pub fn parse_form<S: Scalar>(text: &str, dim: usize) -> Result<Form<S>> {
    check_dim(dim)?;
    let mut cur = Cursor { text, pos: 0 };
    let mut terms: Vec<(BigRational, MultiIndex, usize)> = Vec::new();
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.peek().is_none() {
            if first {
                return Err(Error::parse(cur.pos, "empty form literal"));
            }
            break;
        }
        let negative = if cur.eat('-') {
            true
        } else if cur.eat('+') || first {
            false
        } else {
            return Err(Error::parse(cur.pos, "expected `+` or `-` between terms"));
        };
        first = false;

        let start = cur.pos;
        let coeff = cur.number()?;
        cur.eat('*');
        cur.skip_ws();
        let mut factors = Vec::new();
        if cur.peek() == Some('d') {
            loop {
                cur.skip_ws();
                let at = cur.pos;
                let name = cur.take_while(|c| c.is_ascii_alphanumeric());
                let idx = factor_index(dim, name)
                    .ok_or_else(|| Error::parse(at, format!("unknown factor `{name}`")))?;
                factors.push(idx);
                if !cur.eat('^') {
                    break;
                }
            }
        }
        if coeff.is_none() && factors.is_empty() {
            return Err(Error::parse(start, "expected a coefficient or a factor"));
        }
        let mut c = coeff.unwrap_or_else(|| BigRational::from_i64(1));
        if negative {
            c = -c;
        }
        match MultiIndex::from_indices(&factors) {
            Some((sign, m)) => {
                if sign < 0 {
                    c = -c;
                }
                terms.push((c, m, factors.len()));
            }
            None => terms.push((BigRational::zero(), MultiIndex::EMPTY, factors.len())),
        }
    }

    let degree = terms[0].2;
    if let Some(t) = terms.iter().find(|t| t.2 != degree) {
        return Err(Error::parse(
            0,
            format!("mixed degrees {degree} and {} in one literal", t.2),
        ));
    }
    if degree > dim {
        return Err(Error::DegreeOutOfRange { degree, dim });
    }
    Form::from_terms(
        dim,
        degree,
        terms
            .into_iter()
            .filter(|t| !t.0.is_zero())
            .map(|(c, m, _)| (m, S::from_big_rational(&c))),
    )
}

/// Prints a form in the literal grammar; `0` for the zero form.
pub fn format_form<S: Scalar>(form: &Form<S>) -> String {
    if form.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (m, c)) in form.terms().enumerate() {
        let negative = c.is_negative_value();
        let abs = if negative { -c.clone() } else { c.clone() };
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let factors: Vec<String> = m.indices().map(|i| factor_name(form.dim(), i)).collect();
        if factors.is_empty() {
            out.push_str(&abs.to_string());
        } else {
            if !is_one(&abs) {
                out.push_str(&abs.to_string());
                out.push(' ');
            }
            out.push_str(&factors.join("^"));
        }
    }
    out
}
