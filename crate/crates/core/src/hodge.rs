//! Hodge star operators on Lorentzian, Galilean and Carrollian structures.
//!
//! Two independent routes are provided:
//!
//! * [`star_oracle`] contracts the raising (or lowering) tensor with the
//!   volume form (or top polyvector) into the mixed tensor
//!   `ω^{a…b}_{c…d}` and applies it to the components of the input. It works
//!   for any structure, canonical or not, in any frame.
//! * [`star_closed`] uses the split `α = e⁰∧ŝ + r̂` and the Euclidean star
//!   `∗̂` on spatial forms. It is only valid for the canonical adapted data.
//!
//! Summation is over sorted multi-indices, which absorbs the `1/(d-p)!` of
//! the ordered-tuple convention.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::form::{Form, SpatialForm};
use crate::matrix::Matrix;
use crate::multi_index::MultiIndex;
use crate::scalar::Scalar;
use crate::structure::{SpacetimeKind, SpacetimeStructure};

/// Which canonical tensor raises (or lowers) the index group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StarVariant {
    /// Lorentzian star, raising with `g^{ab}`.
    MinkowskiMetric,
    /// Raising with `h^{ab}` into the volume form.
    GalileanH,
    /// Lowering `k_ab = λ ξ_a ξ_b` into the top polyvector.
    GalileanK,
    /// Lowering `h̃_ab` into the top polyvector.
    CarrollianH,
    /// Raising with `k̃^{ab} = λ ξ̃^a ξ̃^b` into the volume form.
    CarrollianK,
    /// 1+3 convention: `h`-based in degrees 0–3, `k`-based with an extra
    /// sign flip in degree 4.
    TableGalilei4D,
    /// 1+3 convention: `k̃`-based in degree 0, `h̃`-based in degrees 1–4.
    TableCarroll4D,
}

impl StarVariant {
    pub const ALL: [StarVariant; 7] = [
        StarVariant::MinkowskiMetric,
        StarVariant::GalileanH,
        StarVariant::GalileanK,
        StarVariant::CarrollianH,
        StarVariant::CarrollianK,
        StarVariant::TableGalilei4D,
        StarVariant::TableCarroll4D,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StarVariant::MinkowskiMetric => "MinkowskiMetric",
            StarVariant::GalileanH => "GalileanH",
            StarVariant::GalileanK => "GalileanK",
            StarVariant::CarrollianH => "CarrollianH",
            StarVariant::CarrollianK => "CarrollianK",
            StarVariant::TableGalilei4D => "TableGalilei4D",
            StarVariant::TableCarroll4D => "TableCarroll4D",
        }
    }

    pub fn kind(self) -> SpacetimeKind {
        match self {
            StarVariant::MinkowskiMetric => SpacetimeKind::Minkowski,
            StarVariant::GalileanH | StarVariant::GalileanK | StarVariant::TableGalilei4D => {
                SpacetimeKind::Galilean
            }
            StarVariant::CarrollianH | StarVariant::CarrollianK | StarVariant::TableCarroll4D => {
                SpacetimeKind::Carrollian
            }
        }
    }

    pub fn is_table(self) -> bool {
        matches!(self, StarVariant::TableGalilei4D | StarVariant::TableCarroll4D)
    }

    /// Variants usable on a `kind` structure of dimension `dim`.
    pub fn for_kind(kind: SpacetimeKind, dim: usize) -> Vec<StarVariant> {
        Self::ALL
            .into_iter()
            .filter(|v| v.kind() == kind && (!v.is_table() || dim == 4))
            .collect()
    }

    /// The `h`-based (or metric) star of a kind.
    pub fn h_based(kind: SpacetimeKind) -> StarVariant {
        match kind {
            SpacetimeKind::Minkowski => StarVariant::MinkowskiMetric,
            SpacetimeKind::Galilean => StarVariant::GalileanH,
            SpacetimeKind::Carrollian => StarVariant::CarrollianH,
        }
    }

    /// The rank-1 `k`-based star; Minkowski has none.
    pub fn k_based(kind: SpacetimeKind) -> Option<StarVariant> {
        match kind {
            SpacetimeKind::Minkowski => None,
            SpacetimeKind::Galilean => Some(StarVariant::GalileanK),
            SpacetimeKind::Carrollian => Some(StarVariant::CarrollianK),
        }
    }

    /// The 1+3 table convention for a kind.
    pub fn table(kind: SpacetimeKind) -> StarVariant {
        match kind {
            SpacetimeKind::Minkowski => StarVariant::MinkowskiMetric,
            SpacetimeKind::Galilean => StarVariant::TableGalilei4D,
            SpacetimeKind::Carrollian => StarVariant::TableCarroll4D,
        }
    }

    /// Star in effect at degree `p`, plus whether the result is negated.
    fn resolve(self, p: usize) -> (StarVariant, bool) {
        match self {
            StarVariant::TableGalilei4D if p == 4 => (StarVariant::GalileanK, true),
            StarVariant::TableGalilei4D => (StarVariant::GalileanH, false),
            StarVariant::TableCarroll4D if p == 0 => (StarVariant::CarrollianK, false),
            StarVariant::TableCarroll4D => (StarVariant::CarrollianH, false),
            v => (v, false),
        }
    }

    fn check<S: Scalar>(self, s: &SpacetimeStructure<S>) -> Result<()> {
        if self.kind() != s.kind() {
            return Err(Error::IncompatibleVariant {
                variant: self.name(),
                kind: s.kind(),
            });
        }
        if self.is_table() && s.dim() != 4 {
            return Err(Error::RequiresFourDimensions(s.dim()));
        }
        Ok(())
    }
}

impl fmt::Display for StarVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StarVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|v| v.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::parse(0, format!("unknown star variant `{s}`")))
    }
}

/// Components `ω^{I}_{J}` of the mixed tensor for one degree `p = |I|`.
#[derive(Clone, Debug, PartialEq)]
pub struct MixedEpsilon<S> {
    dim: usize,
    degree: usize,
    entries: BTreeMap<(MultiIndex, MultiIndex), S>,
}

impl<S: Scalar> MixedEpsilon<S> {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, upper: MultiIndex, lower: MultiIndex) -> S {
        self.entries
            .get(&(upper, lower))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    /// Nonzero entries as `((upper, lower), value)`.
    pub fn entries(&self) -> impl Iterator<Item = (&(MultiIndex, MultiIndex), &S)> {
        self.entries.iter()
    }

    /// `(∗α)_J = Σ_I α_I ω^I_J`.
    pub fn apply(&self, a: &Form<S>) -> Result<Form<S>> {
        if a.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                left: a.dim(),
                right: self.dim,
            });
        }
        if a.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: a.degree(),
                right: self.degree,
            });
        }
        let mut out = Form::zero(self.dim, self.dim - self.degree);
        for ((upper, lower), w) in &self.entries {
            let c = a.coeff(*upper);
            if !c.is_zero() {
                out.insert(*lower, c * w.clone());
            }
        }
        Ok(out)
    }
}

fn raising_tensor<S: Scalar>(s: &SpacetimeStructure<S>, v: StarVariant) -> Result<Matrix<S>> {
    Ok(match v {
        StarVariant::MinkowskiMetric => s.inverse_metric()?,
        StarVariant::GalileanH => s.h().entries.clone(),
        StarVariant::CarrollianK => s.k().expect("Carrollian structure carries k").entries.clone(),
        _ => unreachable!("{v} lowers"),
    })
}

fn lowering_tensor<S: Scalar>(s: &SpacetimeStructure<S>, v: StarVariant) -> Matrix<S> {
    match v {
        StarVariant::CarrollianH => s.h().entries.clone(),
        StarVariant::GalileanK => s.k().expect("Galilean structure carries k").entries.clone(),
        _ => unreachable!("{v} raises"),
    }
}

/// Rows `uppers` of the mixed tensor at degree `p`.
fn mixed_rows<S: Scalar>(
    s: &SpacetimeStructure<S>,
    variant: StarVariant,
    p: usize,
    uppers: &[MultiIndex],
) -> Result<MixedEpsilon<S>> {
    variant.check(s)?;
    let d = s.dim();
    if p > d {
        return Err(Error::DegreeOutOfRange { degree: p, dim: d });
    }
    let (base, negate) = variant.resolve(p);
    let lowers = MultiIndex::all_of_degree(d, d - p);
    let mut entries = BTreeMap::new();
    let mut push = |i: MultiIndex, j: MultiIndex, v: S| {
        if !v.is_zero() {
            entries.insert((i, j), if negate { -v } else { v });
        }
    };
    match base {
        StarVariant::MinkowskiMetric | StarVariant::GalileanH | StarVariant::CarrollianK => {
            // ω^I_J = Σ_{K} det(R[I,K]) vol_{KJ}; only K = complement(J) survives
            let raise = raising_tensor(s, base)?;
            let vol = s.vol().coeff(MultiIndex::full(d));
            for &i in uppers {
                for &j in &lowers {
                    let k = j.complement(d);
                    let eps = k.wedge_sign(j);
                    let minor = raise.minor(i, k);
                    if !minor.is_zero() {
                        let v = vol.clone() * minor;
                        push(i, j, if eps < 0 { -v } else { v });
                    }
                }
            }
        }
        StarVariant::CarrollianH | StarVariant::GalileanK => {
            // ω^I_J = Σ_{K} polyvol^{IK} det(L[J,K]); only K = complement(I) survives
            let lower = lowering_tensor(s, base);
            let pv = s.polyvol().top_coefficient().clone();
            for &i in uppers {
                let k = i.complement(d);
                let eps = i.wedge_sign(k);
                for &j in &lowers {
                    let minor = lower.minor(j, k);
                    if !minor.is_zero() {
                        let v = pv.clone() * minor;
                        push(i, j, if eps < 0 { -v } else { v });
                    }
                }
            }
        }
        StarVariant::TableGalilei4D | StarVariant::TableCarroll4D => unreachable!(),
    }
    Ok(MixedEpsilon {
        dim: d,
        degree: p,
        entries,
    })
}

/// Full mixed tensor `ω^{I}_{J}` for degree `p`.
pub fn mixed_epsilon<S: Scalar>(
    s: &SpacetimeStructure<S>,
    variant: StarVariant,
    p: usize,
) -> Result<MixedEpsilon<S>> {
    if p > s.dim() {
        return Err(Error::DegreeOutOfRange { degree: p, dim: s.dim() });
    }
    mixed_rows(s, variant, p, &MultiIndex::all_of_degree(s.dim(), p))
}

/// Star by explicit contraction with the mixed tensor. Valid for any
/// structure of the variant's kind, in any frame.
pub fn star_oracle<S: Scalar>(
    a: &Form<S>,
    s: &SpacetimeStructure<S>,
    variant: StarVariant,
) -> Result<Form<S>> {
    if a.dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: s.dim(),
        });
    }
    let rows: Vec<MultiIndex> = a.terms().map(|(m, _)| m).collect();
    mixed_rows(s, variant, a.degree(), &rows)?.apply(a)
}

/// `Σ ± e^0 ∧ ∗̂ r̂`: pushes `e^0 ∧ ∗̂(c e^I)` for every spatial term.
fn push_temporal_hat<S: Scalar>(out: &mut Form<S>, r: &SpatialForm<S>) {
    let spatial = MultiIndex::spatial_full(r.dim());
    for (m, c) in r.as_form().terms() {
        let k = MultiIndex::from_bits(spatial.bits() & !m.bits());
        let v = c.clone();
        out.insert(
            k.union(MultiIndex::single(0)),
            if m.wedge_sign(k) < 0 { -v } else { v },
        );
    }
}

fn push_hat<S: Scalar>(out: &mut Form<S>, s: &SpatialForm<S>) {
    let spatial = MultiIndex::spatial_full(s.dim());
    for (m, c) in s.as_form().terms() {
        let k = MultiIndex::from_bits(spatial.bits() & !m.bits());
        let v = c.clone();
        out.insert(k, if m.wedge_sign(k) < 0 { -v } else { v });
    }
}

/// Euclidean `n`-dimensional star on spatial forms: `∗̂ e^I = ε_{IK} e^K` with
/// `ε_{1…n} = +1` and `δ_{ij}` as metric.
pub fn hat_star<S: Scalar>(s: &SpatialForm<S>) -> SpatialForm<S> {
    let n = s.dim() - 1;
    let p = s.degree();
    let mut out = Form::zero(s.dim(), n.saturating_sub(p));
    if p <= n {
        push_hat(&mut out, s);
    }
    SpatialForm::new(out).expect("hat star stays spatial")
}

/// Star from the temporal/spatial split. Requires the canonical structure.
pub fn star_closed<S: Scalar>(
    a: &Form<S>,
    s: &SpacetimeStructure<S>,
    variant: StarVariant,
) -> Result<Form<S>> {
    if a.dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: s.dim(),
        });
    }
    variant.check(s)?;
    if !s.is_canonical() {
        return Err(Error::NonCanonical);
    }
    Ok(closed_unchecked(a, variant))
}

fn closed_unchecked<S: Scalar>(a: &Form<S>, variant: StarVariant) -> Form<S> {
    let d = a.dim();
    let n = d - 1;
    let p = a.degree();
    let (base, negate) = variant.resolve(p);
    let (s_hat, r_hat) = a.decompose();
    let omega_hat = MultiIndex::spatial_full(d);
    let mut out = Form::zero(d, d - p);
    match base {
        StarVariant::MinkowskiMetric => {
            push_temporal_hat(&mut out, &r_hat);
            push_hat(&mut out, &s_hat.eta());
        }
        StarVariant::GalileanH => push_temporal_hat(&mut out, &r_hat),
        StarVariant::CarrollianH => push_hat(&mut out, &s_hat.eta()),
        StarVariant::GalileanK => {
            if p == n {
                // ∗ω̂ = e⁰, ∗(e⁰∧ŝ) = 0
                out.insert(MultiIndex::single(0), r_hat.as_form().coeff(omega_hat));
            } else if p == d {
                // ∗(e⁰∧ω̂) = 1
                out.insert(MultiIndex::EMPTY, s_hat.as_form().coeff(omega_hat));
            }
        }
        StarVariant::CarrollianK => {
            if p == 0 {
                out.insert(MultiIndex::full(d), r_hat.as_form().coeff(MultiIndex::EMPTY));
            } else if p == 1 {
                // ∗e⁰ = ω̂, ∗eⁱ = 0
                out.insert(omega_hat, s_hat.as_form().coeff(MultiIndex::EMPTY));
            }
        }
        StarVariant::TableGalilei4D | StarVariant::TableCarroll4D => unreachable!(),
    }
    if negate {
        -out
    } else {
        out
    }
}

/// The 1+3 table stars for Minkowski, Galilei and Carroll spacetimes.
pub fn star_table_4d<S: Scalar>(a: &Form<S>, kind: SpacetimeKind) -> Result<Form<S>> {
    if a.dim() != 4 {
        return Err(Error::RequiresFourDimensions(a.dim()));
    }
    Ok(closed_unchecked(a, StarVariant::table(kind)))
}

/// Sign of `∗∗` for the Lorentzian star on `p`-forms in dimension `d`:
/// `(-1)^{p(d-p)}` times the sign of `det g = (-1)^n`.
pub fn minkowski_square_sign(p: usize, d: usize) -> i8 {
    if (p * (d - p) + (d - 1)).is_multiple_of(2) {
        1
    } else {
        -1
    }
}
