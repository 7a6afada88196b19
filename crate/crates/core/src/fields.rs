//! Form fields with polynomial coefficients on flat `(1+n)`-dimensional
//! spacetime, and the source-free field equations `dF = 0`, `d∗F = 0`.
//!
//! Coordinates are `(t, x, y, z)` in the 1+3 case with the adapted coordinate
//! coframe `(dt, dx, dy, dz)`, so every star acts on coefficients pointwise.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::form::Form;
use crate::hodge::{star_oracle, star_table_4d, StarVariant};
use crate::multi_index::MultiIndex;
use crate::poly::{coordinate_names, parse_polynomial, Polynomial};
use crate::scalar::Scalar;
use crate::structure::{SpacetimeKind, SpacetimeStructure};
use crate::transform::AffineMap;

/// Three polynomial components, e.g. `E` or `B`.
pub type VectorField3<S> = [Polynomial<S>; 3];

#[derive(Clone, PartialEq)]
pub struct PolyForm<S> {
    dim: usize,
    degree: usize,
    terms: BTreeMap<MultiIndex, Polynomial<S>>,
}

impl<S: Scalar> PolyForm<S> {
    pub fn zero(dim: usize, degree: usize) -> Self {
        assert!(degree <= dim, "degree {degree} exceeds dimension {dim}");
        PolyForm {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Constant-coefficient field equal to `a` everywhere.
    pub fn from_form(a: &Form<S>) -> Self {
        let mut out = Self::zero(a.dim(), a.degree());
        for (m, c) in a.terms() {
            out.add(m, &Polynomial::constant(a.dim(), c.clone()));
        }
        out
    }

    pub fn from_terms(
        dim: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (MultiIndex, Polynomial<S>)>,
    ) -> Result<Self> {
        crate::form::check_dim(dim)?;
        if degree > dim {
            return Err(Error::DegreeOutOfRange { degree, dim });
        }
        let mut out = Self::zero(dim, degree);
        for (m, p) in terms {
            if m.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: m.degree(),
                    right: degree,
                });
            }
            if m.min_dim() > dim {
                return Err(Error::IndexOutOfRange {
                    index: m.min_dim() - 1,
                    dim,
                });
            }
            if p.nvars() != dim {
                return Err(Error::VariableMismatch {
                    left: p.nvars(),
                    right: dim,
                });
            }
            out.add(m, &p);
        }
        Ok(out)
    }

    fn add(&mut self, m: MultiIndex, p: &Polynomial<S>) {
        if p.is_zero() {
            return;
        }
        let sum = match self.terms.get(&m) {
            Some(old) => old + p,
            None => p.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (MultiIndex, &Polynomial<S>)> {
        self.terms.iter().map(|(m, p)| (*m, p))
    }

    pub fn coeff(&self, m: MultiIndex) -> Polynomial<S> {
        self.terms
            .get(&m)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(self.dim))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn wedge(&self, other: &PolyForm<S>) -> Result<PolyForm<S>> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let degree = self.degree + other.degree;
        if degree > self.dim {
            return Ok(Self::zero(self.dim, self.dim));
        }
        let mut out = Self::zero(self.dim, degree);
        for (a, pa) in &self.terms {
            for (b, pb) in &other.terms {
                if !a.is_disjoint(*b) {
                    continue;
                }
                let prod = pa * pb;
                let prod = if a.wedge_sign(*b) < 0 { -prod } else { prod };
                out.add(a.union(*b), &prod);
            }
        }
        Ok(out)
    }

    /// Exterior derivative `d(P dx^I) = Σ_j ∂_j P dx^j ∧ dx^I`.
    pub fn exterior_derivative(&self) -> PolyForm<S> {
        if self.degree == self.dim {
            return Self::zero(self.dim, self.dim);
        }
        let mut out = Self::zero(self.dim, self.degree + 1);
        for (m, p) in &self.terms {
            for j in 0..self.dim {
                if m.contains(j) {
                    continue;
                }
                let dp = p.partial(j);
                if dp.is_zero() {
                    continue;
                }
                let leg = MultiIndex::single(j);
                let dp = if leg.wedge_sign(*m) < 0 { -dp } else { dp };
                out.add(leg.union(*m), &dp);
            }
        }
        out
    }

    /// Applies a constant linear map on basis forms coefficientwise.
    pub fn map_basis(
        &self,
        target_degree: usize,
        mut f: impl FnMut(&Form<S>) -> Result<Form<S>>,
    ) -> Result<PolyForm<S>> {
        let mut out = Self::zero(self.dim, target_degree);
        for (m, p) in &self.terms {
            let image = f(&Form::basis(self.dim, *m))?;
            for (j, c) in image.terms() {
                out.add(j, &p.scale(c));
            }
        }
        Ok(out)
    }

    /// Pullback by an affine coordinate map `x' = M x + c`: coefficients are
    /// composed with the map and each `dx'^a` becomes `Σ_b M[a][b] dx^b`.
    pub fn pullback(&self, map: &AffineMap<S>) -> Result<PolyForm<S>> {
        if map.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: map.dim(),
            });
        }
        let m = map.linear();
        let images: Vec<Polynomial<S>> = (0..self.dim)
            .map(|a| {
                let mut p = Polynomial::constant(self.dim, map.translation()[a].clone());
                for b in 0..self.dim {
                    p = p + Polynomial::var(self.dim, b).scale(&m[(a, b)]);
                }
                p
            })
            .collect();
        let mut out = Self::zero(self.dim, self.degree);
        let targets = MultiIndex::all_of_degree(self.dim, self.degree);
        for (i, p) in &self.terms {
            let moved = p.substitute(&images)?;
            for j in &targets {
                let minor = m.minor(*i, *j);
                if !minor.is_zero() {
                    out.add(*j, &moved.scale(&minor));
                }
            }
        }
        Ok(out)
    }

    /// Value at a point, as a constant-coefficient form.
    pub fn evaluate(&self, point: &[S]) -> Form<S> {
        let mut out = Form::zero(self.dim, self.degree);
        for (m, p) in &self.terms {
            let v = p.evaluate(point);
            if !v.is_zero() {
                out = out + Form::from_terms(self.dim, self.degree, [(*m, v)]).expect("valid term");
            }
        }
        out
    }
}

impl<S: Scalar> fmt::Debug for PolyForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string())
    }
}

impl<S: Scalar> fmt::Display for PolyForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, p)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let legs: Vec<String> = m
                .indices()
                .map(|i| crate::literal::factor_name(self.dim, i))
                .collect();
            if legs.is_empty() {
                write!(f, "({p})")?;
            } else {
                write!(f, "({p}) {}", legs.join("^"))?;
            }
        }
        Ok(())
    }
}

fn idx(indices: &[usize]) -> MultiIndex {
    MultiIndex::from_indices(indices).expect("distinct indices").1
}

/// Basis of `dS = (dy∧dz, dz∧dx, dx∧dy)` as (sign, sorted index).
const DS: [(i8, [usize; 2]); 3] = [(1, [2, 3]), (-1, [1, 3]), (1, [1, 2])];

/// `F = dt ∧ E·dr − B·dS` on 1+3 spacetime.
pub fn build_f<S: Scalar>(e: &VectorField3<S>, b: &VectorField3<S>) -> PolyForm<S> {
    let mut f = PolyForm::zero(4, 2);
    for i in 0..3 {
        f.add(idx(&[0, i + 1]), &e[i]);
        let (sign, legs) = DS[i];
        let coeff = if sign < 0 { b[i].clone() } else { -&b[i] };
        f.add(idx(&legs), &coeff);
    }
    f
}

/// Reads `(E, B)` back off a 2-form written as `dt ∧ E·dr − B·dS`.
pub fn split_f<S: Scalar>(f: &PolyForm<S>) -> Result<(VectorField3<S>, VectorField3<S>)> {
    if f.dim() != 4 || f.degree() != 2 {
        return Err(Error::RequiresFourDimensions(f.dim()));
    }
    let e = [0, 1, 2].map(|i| f.coeff(idx(&[0, i + 1])));
    let b = [0, 1, 2].map(|i| {
        let (sign, legs) = DS[i];
        let c = f.coeff(idx(&legs));
        if sign < 0 {
            c
        } else {
            -c
        }
    });
    Ok((e, b))
}

/// 1+3 table star applied pointwise.
pub fn star_field<S: Scalar>(a: &PolyForm<S>, kind: SpacetimeKind) -> Result<PolyForm<S>> {
    if a.dim() != 4 {
        return Err(Error::RequiresFourDimensions(a.dim()));
    }
    a.map_basis(4 - a.degree(), |e| star_table_4d(e, kind))
}

/// Pointwise star of an arbitrary structure and variant, via contraction.
pub fn star_field_with<S: Scalar>(
    a: &PolyForm<S>,
    s: &SpacetimeStructure<S>,
    variant: StarVariant,
) -> Result<PolyForm<S>> {
    a.map_basis(a.dim() - a.degree(), |e| star_oracle(e, s, variant))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Tag {
    Gauss,
    Ampere,
    Faraday,
    NoMonopole,
    TimeConstancy,
}

impl Tag {
    pub fn name(self) -> &'static str {
        match self {
            Tag::Gauss => "Gauss",
            Tag::Ampere => "Ampere",
            Tag::Faraday => "Faraday",
            Tag::NoMonopole => "NoMonopole",
            Tag::TimeConstancy => "TimeConstancy",
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Residual<S> {
    pub tag: Tag,
    pub components: Vec<Polynomial<S>>,
}

impl<S: Scalar> Residual<S> {
    pub fn is_satisfied(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EquationSet<S> {
    pub kind: SpacetimeKind,
    pub residuals: Vec<Residual<S>>,
}

impl<S: Scalar> EquationSet<S> {
    pub fn is_satisfied(&self) -> bool {
        self.residuals.iter().all(Residual::is_satisfied)
    }

    pub fn get(&self, tag: Tag) -> Option<&Residual<S>> {
        self.residuals.iter().find(|r| r.tag == tag)
    }

    pub fn tags(&self) -> Vec<Tag> {
        self.residuals.iter().map(|r| r.tag).collect()
    }

    pub fn to_report(&self) -> ResidualReport {
        let names = coordinate_names(4);
        ResidualReport {
            kind: self.kind.flat_name().to_string(),
            residuals: self
                .residuals
                .iter()
                .map(|r| ResidualEntry {
                    tag: r.tag,
                    components: r.components.iter().map(|p| p.format_with(&names)).collect(),
                })
                .collect(),
            satisfied: self.is_satisfied(),
        }
    }
}

/// A 3-form `dt ∧ X·dS + g dV`, as `(X, g)`.
fn split_three_form<S: Scalar>(g: &PolyForm<S>) -> (VectorField3<S>, Polynomial<S>) {
    let x = [0, 1, 2].map(|i| {
        let (sign, legs) = DS[i];
        let c = g.coeff(idx(&[0, legs[0], legs[1]]));
        if sign < 0 {
            -c
        } else {
            c
        }
    });
    (x, g.coeff(idx(&[1, 2, 3])))
}

/// Which sectors of 2-forms the star can reach: (temporal, spatial).
fn star_sectors(kind: SpacetimeKind) -> (bool, bool) {
    let mut temporal = false;
    let mut spatial = false;
    for m in MultiIndex::all_of_degree(4, 2) {
        let image = star_table_4d(&Form::<crate::Rational>::basis(4, m), kind)
            .expect("1+3 star on a basis form");
        for (j, _) in image.terms() {
            if j.contains(0) {
                temporal = true;
            } else {
                spatial = true;
            }
        }
    }
    (temporal, spatial)
}

/// Derives the field equations from `d∗F = 0` and `dF = 0`.
///
/// Each 3-form `dt ∧ X·dS + g dV` gives up to two residuals. From `d∗F` the
/// temporal part is emitted as `X` (Ampère if the star reaches temporal
/// 2-forms, time constancy otherwise) and the spatial part as `-g`
/// (Gauss), each only if the star can produce that sector. From `dF` the
/// parts are `-X` (Faraday) and `-g` (no monopole).
pub fn extract_equations<S: Scalar>(
    e: &VectorField3<S>,
    b: &VectorField3<S>,
    kind: SpacetimeKind,
) -> Result<EquationSet<S>> {
    let f = build_f(e, b);
    let star_f = star_field(&f, kind)?;
    let d_star = star_f.exterior_derivative();
    let d_f = f.exterior_derivative();

    let (reach_temporal, reach_spatial) = star_sectors(kind);
    let mut residuals = Vec::new();
    let (x, g) = split_three_form(&d_star);
    if reach_spatial {
        residuals.push(Residual {
            tag: Tag::Gauss,
            components: vec![-g],
        });
    }
    if reach_temporal || reach_spatial {
        residuals.push(Residual {
            tag: if reach_temporal {
                Tag::Ampere
            } else {
                Tag::TimeConstancy
            },
            components: x.to_vec(),
        });
    }
    let (x, g) = split_three_form(&d_f);
    residuals.push(Residual {
        tag: Tag::Faraday,
        components: x.iter().map(|p| -p).collect(),
    });
    residuals.push(Residual {
        tag: Tag::NoMonopole,
        components: vec![-g],
    });
    Ok(EquationSet { kind, residuals })
}

/// Plain vector calculus on `(E, B)`, independent of the forms machinery.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorCalculus<S> {
    pub div_e: Polynomial<S>,
    pub curl_e: VectorField3<S>,
    pub dt_e: VectorField3<S>,
    pub div_b: Polynomial<S>,
    pub curl_b: VectorField3<S>,
    pub dt_b: VectorField3<S>,
}

fn div<S: Scalar>(v: &VectorField3<S>) -> Polynomial<S> {
    v[0].partial(1) + v[1].partial(2) + v[2].partial(3)
}

fn curl<S: Scalar>(v: &VectorField3<S>) -> VectorField3<S> {
    [
        v[2].partial(2) - v[1].partial(3),
        v[0].partial(3) - v[2].partial(1),
        v[1].partial(1) - v[0].partial(2),
    ]
}

pub fn vector_calculus<S: Scalar>(e: &VectorField3<S>, b: &VectorField3<S>) -> VectorCalculus<S> {
    VectorCalculus {
        div_e: div(e),
        curl_e: curl(e),
        dt_e: e.clone().map(|p| p.partial(0)),
        div_b: div(b),
        curl_b: curl(b),
        dt_b: b.clone().map(|p| p.partial(0)),
    }
}

/// Pulls `F(E, B)` back along `map` and reads off the transformed fields.
pub fn transform_fields<S: Scalar>(
    e: &VectorField3<S>,
    b: &VectorField3<S>,
    map: &AffineMap<S>,
) -> Result<(VectorField3<S>, VectorField3<S>)> {
    split_f(&build_f(e, b).pullback(map)?)
}

/// True iff being a solution of the `kind` equations is unchanged by the
/// pullback along `map`.
pub fn check_covariance<S: Scalar>(
    e: &VectorField3<S>,
    b: &VectorField3<S>,
    map: &AffineMap<S>,
    kind: SpacetimeKind,
) -> Result<bool> {
    let before = extract_equations(e, b, kind)?.is_satisfied();
    let (e2, b2) = transform_fields(e, b, map)?;
    let after = extract_equations(&e2, &b2, kind)?.is_satisfied();
    Ok(before == after)
}

/// [`check_covariance`] for the Galilei boost `r' = r + v t` or the Carroll
/// boost `t' = t + v·r`.
pub fn check_boost_covariance<S: Scalar>(
    e: &VectorField3<S>,
    b: &VectorField3<S>,
    v: &[S],
    kind: SpacetimeKind,
) -> Result<bool> {
    if v.len() != 3 {
        return Err(Error::DimensionMismatch {
            left: 3,
            right: v.len(),
        });
    }
    let map = match kind {
        SpacetimeKind::Galilean => AffineMap::galilei_boost(v),
        SpacetimeKind::Carrollian => AffineMap::carroll_boost(v),
        SpacetimeKind::Minkowski => {
            return Err(Error::IncompatibleVariant {
                variant: "boost",
                kind,
            })
        }
    };
    check_covariance(e, b, &map, kind)
}

/// `{"E": [..], "B": [..]}` with polynomial strings in `t, x, y, z`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FieldFile {
    #[serde(rename = "E")]
    pub e: [String; 3],
    #[serde(rename = "B")]
    pub b: [String; 3],
}

impl FieldFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|err| Error::Document(err.to_string()))
    }

    pub fn parse<S: Scalar>(&self) -> Result<(VectorField3<S>, VectorField3<S>)> {
        let names = coordinate_names(4);
        let conv = |v: &[String; 3]| -> Result<VectorField3<S>> {
            Ok([
                parse_polynomial(&v[0], &names)?,
                parse_polynomial(&v[1], &names)?,
                parse_polynomial(&v[2], &names)?,
            ])
        };
        Ok((conv(&self.e)?, conv(&self.b)?))
    }
}

impl FromStr for FieldFile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_json(s)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualEntry {
    pub tag: Tag,
    pub components: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub kind: String,
    pub residuals: Vec<ResidualEntry>,
    pub satisfied: bool,
}
