//! Symbolic 1+3 star tables.
//!
//! Each degree has a generic form written with free symbols `f`, `a`, `b`
//! (`a·dr`, `b·dS`, …). The star is applied to it with symbolic
//! coefficients and the image is printed back in the same vocabulary.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::form::Form;
use crate::hodge::star_table_4d;
use crate::multi_index::MultiIndex;
use crate::poly::Polynomial;
use crate::structure::SpacetimeKind;
use crate::Rational;

const SYMBOLS: [&str; 7] = ["f", "a1", "a2", "a3", "b1", "b2", "b3"];

type Sym = Polynomial<Rational>;
type SymForm = BTreeMap<MultiIndex, Sym>;

fn sym(i: usize) -> Sym {
    Polynomial::var(SYMBOLS.len(), i)
}

fn f_sym() -> Sym {
    sym(0)
}

fn a_sym() -> [Sym; 3] {
    [sym(1), sym(2), sym(3)]
}

fn b_sym() -> [Sym; 3] {
    [sym(4), sym(5), sym(6)]
}

fn idx(indices: &[usize]) -> MultiIndex {
    MultiIndex::from_indices(indices).expect("distinct indices").1
}

/// `dr` legs and `dS = (dy∧dz, dz∧dx, dx∧dy)` as (sign, sorted legs).
const DR: [usize; 3] = [1, 2, 3];
const DS: [(i8, [usize; 2]); 3] = [(1, [2, 3]), (-1, [1, 3]), (1, [1, 2])];

fn put(form: &mut SymForm, m: MultiIndex, sign: i8, p: &Sym) {
    if p.is_zero() {
        return;
    }
    let p = if sign < 0 { -p } else { p.clone() };
    let sum = match form.get(&m) {
        Some(old) => old + &p,
        None => p,
    };
    if sum.is_zero() {
        form.remove(&m);
    } else {
        form.insert(m, sum);
    }
}

/// The generic form of each degree.
fn generic(degree: usize) -> SymForm {
    let mut out = SymForm::new();
    let (a, b, f) = (a_sym(), b_sym(), f_sym());
    match degree {
        0 => put(&mut out, MultiIndex::EMPTY, 1, &f),
        1 => {
            put(&mut out, idx(&[0]), 1, &f);
            for i in 0..3 {
                put(&mut out, idx(&[DR[i]]), 1, &a[i]);
            }
        }
        2 => {
            for i in 0..3 {
                put(&mut out, idx(&[0, DR[i]]), 1, &a[i]);
                let (s, legs) = DS[i];
                put(&mut out, idx(&legs), s, &b[i]);
            }
        }
        3 => {
            for i in 0..3 {
                let (s, legs) = DS[i];
                put(&mut out, idx(&[0, legs[0], legs[1]]), s, &a[i]);
            }
            put(&mut out, idx(&[1, 2, 3]), 1, &f);
        }
        4 => put(&mut out, idx(&[0, 1, 2, 3]), 1, &f),
        _ => unreachable!("degree {degree} in 1+3 dimensions"),
    }
    out
}

fn star(form: &SymForm, kind: SpacetimeKind) -> SymForm {
    let mut out = SymForm::new();
    for (m, p) in form {
        let image = star_table_4d(&Form::<Rational>::basis(4, *m), kind)
            .expect("basis form in four dimensions");
        for (j, c) in image.terms() {
            put(&mut out, j, 1, &p.scale(c));
        }
    }
    out
}

fn coeff(form: &SymForm, m: MultiIndex, sign: i8) -> Sym {
    let p = form
        .get(&m)
        .cloned()
        .unwrap_or_else(|| Polynomial::zero(SYMBOLS.len()));
    if sign < 0 {
        -p
    } else {
        p
    }
}

/// A printable summand: sign, body.
struct Piece {
    negative: bool,
    body: String,
}

fn scalar_piece(p: &Sym, unit: &str) -> Option<Piece> {
    if p.is_zero() {
        return None;
    }
    let names: Vec<String> = SYMBOLS.iter().map(|s| s.to_string()).collect();
    let (negative, name) = if *p == f_sym() {
        (false, "f".to_string())
    } else if *p == -f_sym() {
        (true, "f".to_string())
    } else {
        (false, format!("({})", p.format_with(&names)))
    };
    let body = match unit {
        "" => name,
        u => format!("{name} {u}"),
    };
    Some(Piece { negative, body })
}

fn vector_piece(v: &[Sym; 3], wrap: impl Fn(String) -> String, leg: &str) -> Option<Piece> {
    if v.iter().all(Sym::is_zero) {
        return None;
    }
    let names: Vec<String> = SYMBOLS.iter().map(|s| s.to_string()).collect();
    let neg = |w: &[Sym; 3]| [-&w[0], -&w[1], -&w[2]];
    let (negative, name) = if *v == a_sym() {
        (false, "a".to_string())
    } else if *v == neg(&a_sym()) {
        (true, "a".to_string())
    } else if *v == b_sym() {
        (false, "b".to_string())
    } else if *v == neg(&b_sym()) {
        (true, "b".to_string())
    } else {
        let parts: Vec<String> = v.iter().map(|p| p.format_with(&names)).collect();
        (false, format!("({})", parts.join(", ")))
    };
    Some(Piece {
        negative,
        body: wrap(format!("{name}·{leg}")),
    })
}

fn render(form: &SymForm, degree: usize) -> String {
    let temporal = |w: String| format!("dt^({w})");
    let plain = |w: String| w;
    let pieces: Vec<Option<Piece>> = match degree {
        0 => vec![scalar_piece(&coeff(form, MultiIndex::EMPTY, 1), "")],
        1 => vec![
            scalar_piece(&coeff(form, idx(&[0]), 1), "dt"),
            vector_piece(&DR.map(|i| coeff(form, idx(&[i]), 1)), plain, "dr"),
        ],
        2 => vec![
            vector_piece(&DR.map(|i| coeff(form, idx(&[0, i]), 1)), temporal, "dr"),
            vector_piece(&DS.map(|(s, l)| coeff(form, idx(&l), s)), plain, "dS"),
        ],
        3 => vec![
            vector_piece(
                &DS.map(|(s, l)| coeff(form, idx(&[0, l[0], l[1]]), s)),
                temporal,
                "dS",
            ),
            scalar_piece(&coeff(form, idx(&[1, 2, 3]), 1), "dV"),
        ],
        4 => vec![scalar_piece(&coeff(form, idx(&[0, 1, 2, 3]), 1), "dt^dV")],
        _ => unreachable!(),
    };
    let mut out = String::new();
    for (k, piece) in pieces.into_iter().flatten().enumerate() {
        match (k, piece.negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&piece.body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableLine {
    pub degree: usize,
    pub input: String,
    pub output: String,
}

impl TableLine {
    pub fn text(&self) -> String {
        if self.degree == 0 {
            format!("*{} = {}", self.input, self.output)
        } else {
            format!("*({}) = {}", self.input, self.output)
        }
    }
}

pub fn table_heading(kind: SpacetimeKind) -> &'static str {
    match kind {
        SpacetimeKind::Minkowski => "Minkowski Hodge star:",
        SpacetimeKind::Galilean => "Galilei Hodge star:",
        SpacetimeKind::Carrollian => "Carroll Hodge star:",
    }
}

/// The five lines of the 1+3 star table of `kind`.
pub fn star_table(kind: SpacetimeKind) -> Vec<TableLine> {
    (0..=4)
        .map(|p| {
            let input = generic(p);
            TableLine {
                degree: p,
                input: render(&input, p),
                output: render(&star(&input, kind), 4 - p),
            }
        })
        .collect()
}

/// Heading plus one line per degree, newline-terminated.
pub fn format_star_table(kind: SpacetimeKind) -> String {
    let mut out = String::from(table_heading(kind));
    out.push('\n');
    for line in star_table(kind) {
        out.push_str(&line.text());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lines(kind: SpacetimeKind) -> Vec<String> {
        star_table(kind).iter().map(TableLine::text).collect()
    }

    #[test]
    fn minkowski_table() {
        assert_eq!(
            lines(SpacetimeKind::Minkowski),
            [
                "*f = f dt^dV",
                "*(f dt + a·dr) = dt^(a·dS) + f dV",
                "*(dt^(a·dr) + b·dS) = dt^(b·dr) - a·dS",
                "*(dt^(a·dS) + f dV) = f dt + a·dr",
                "*(f dt^dV) = -f",
            ]
        );
    }

    #[test]
    fn galilei_table() {
        assert_eq!(
            lines(SpacetimeKind::Galilean),
            [
                "*f = f dt^dV",
                "*(f dt + a·dr) = dt^(a·dS)",
                "*(dt^(a·dr) + b·dS) = dt^(b·dr)",
                "*(dt^(a·dS) + f dV) = f dt",
                "*(f dt^dV) = -f",
            ]
        );
    }

    #[test]
    fn carroll_table() {
        assert_eq!(
            lines(SpacetimeKind::Carrollian),
            [
                "*f = f dt^dV",
                "*(f dt + a·dr) = f dV",
                "*(dt^(a·dr) + b·dS) = -a·dS",
                "*(dt^(a·dS) + f dV) = a·dr",
                "*(f dt^dV) = -f",
            ]
        );
    }
}
