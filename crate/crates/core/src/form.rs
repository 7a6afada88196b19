//! Homogeneous exterior forms over a `(1+n)`-dimensional frame.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::multi_index::{MultiIndex, MAX_DIM};
use crate::scalar::Scalar;

/// A `p`-form in dimension `d` stored as sparse canonical components.
///
/// Zero coefficients are never stored. The degree is kept explicitly so the
/// zero form still knows which degree it lives in.
#[derive(Clone, Debug, PartialEq)]
pub struct Form<S> {
    dim: usize,
    degree: usize,
    terms: BTreeMap<MultiIndex, S>,
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_DIM {
        Err(Error::DimensionOutOfRange(dim))
    } else {
        Ok(())
    }
}

impl<S: Scalar> Form<S> {
    pub fn zero(dim: usize, degree: usize) -> Self {
        assert!(dim <= MAX_DIM && degree <= dim, "degree {degree} in dimension {dim}");
        Form {
            dim,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(dim: usize, value: S) -> Self {
        let mut f = Self::zero(dim, 0);
        f.insert(MultiIndex::EMPTY, value);
        f
    }

    pub fn basis(dim: usize, index: MultiIndex) -> Self {
        assert!(index.min_dim() <= dim, "{index:?} does not fit dimension {dim}");
        let mut f = Self::zero(dim, index.degree());
        f.insert(index, S::one());
        f
    }

    /// `coeff · e^{i_1} ∧ ... ∧ e^{i_p}` for indices in any order.
    pub fn monomial(dim: usize, coeff: S, indices: &[usize]) -> Result<Self> {
        check_dim(dim)?;
        if let Some(&i) = indices.iter().find(|&&i| i >= dim) {
            return Err(Error::IndexOutOfRange { index: i, dim });
        }
        if indices.len() > dim {
            return Err(Error::DegreeOutOfRange {
                degree: indices.len(),
                dim,
            });
        }
        let mut f = Self::zero(dim, indices.len());
        if let Some((sign, m)) = MultiIndex::from_indices(indices) {
            let c = if sign < 0 { -coeff } else { coeff };
            f.insert(m, c);
        }
        Ok(f)
    }

    /// Builds a form from canonical components, summing duplicates.
    pub fn from_terms(
        dim: usize,
        degree: usize,
        terms: impl IntoIterator<Item = (MultiIndex, S)>,
    ) -> Result<Self> {
        check_dim(dim)?;
        if degree > dim {
            return Err(Error::DegreeOutOfRange { degree, dim });
        }
        let mut f = Self::zero(dim, degree);
        for (m, c) in terms {
            if m.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: m.degree(),
                });
            }
            if m.min_dim() > dim {
                return Err(Error::IndexOutOfRange {
                    index: m.min_dim() - 1,
                    dim,
                });
            }
            f.insert(m, c);
        }
        Ok(f)
    }

    /// Adds `c` to the component at `m`, dropping it if it cancels.
    pub(crate) fn insert(&mut self, m: MultiIndex, c: S) {
        debug_assert_eq!(m.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let sum = v.clone() + c;
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (MultiIndex, &S)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: MultiIndex) -> S {
        self.terms.get(&m).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_spatial(&self) -> bool {
        self.terms.keys().all(|m| m.is_spatial())
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(self.dim, self.degree);
        for (m, c) in &self.terms {
            out.insert(*m, c.clone() * s.clone());
        }
        out
    }

    pub fn wedge(&self, other: &Form<S>) -> Result<Form<S>> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        let degree = self.degree + other.degree;
        if degree > self.dim {
            // top degree exceeded: the product is zero; keep degree capped
            return Ok(Form::zero(self.dim, self.dim.min(degree)));
        }
        let mut out = Form::zero(self.dim, degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                match a.wedge_sign(*b) {
                    0 => {}
                    s => {
                        let c = ca.clone() * cb.clone();
                        out.insert(a.union(*b), if s < 0 { -c } else { c });
                    }
                }
            }
        }
        Ok(out)
    }

    /// Main automorphism: multiplication by `(-1)^p`.
    pub fn eta(&self) -> Self {
        if self.degree.is_multiple_of(2) {
            self.clone()
        } else {
            -self.clone()
        }
    }

    /// Unique split `self = e^0 ∧ s + r` with `s`, `r` free of `e^0`.
    pub fn decompose(&self) -> (SpatialForm<S>, SpatialForm<S>) {
        let s_degree = self.degree.saturating_sub(1);
        let mut s = Form::zero(self.dim, s_degree);
        let mut r = Form::zero(self.dim, self.degree);
        for (m, c) in &self.terms {
            if m.contains(0) {
                // e^0 is the first factor already, no reordering sign
                s.insert(m.without(0), c.clone());
            } else {
                r.insert(*m, c.clone());
            }
        }
        (SpatialForm(s), SpatialForm(r))
    }

    /// Inverse of [`Form::decompose`]: `e^0 ∧ s + r`.
    pub fn recompose(s: &SpatialForm<S>, r: &SpatialForm<S>) -> Result<Self> {
        if r.0.dim != s.0.dim {
            return Err(Error::DimensionMismatch {
                left: s.0.dim,
                right: r.0.dim,
            });
        }
        if r.0.degree != s.0.degree + 1 {
            // only the degree-0 split (s carries no information) is allowed here
            if s.0.is_zero() {
                return Ok(r.0.clone());
            }
            return Err(Error::DegreeMismatch {
                left: s.0.degree + 1,
                right: r.0.degree,
            });
        }
        let e0 = Form::basis(s.0.dim, MultiIndex::single(0));
        let mut out = e0.wedge(&s.0)?;
        for (m, c) in &r.0.terms {
            out.insert(*m, c.clone());
        }
        Ok(out)
    }

    /// Rewrites every coframe leg as `e^a ↦ Σ_b m[a][b] e^b`.
    ///
    /// The component of `e^I` along `e^J` is the minor `det m[I, J]`.
    pub fn substitute_coframe(&self, m: &Matrix<S>) -> Result<Self> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::Shape {
                rows: m.rows(),
                cols: m.cols(),
                dim: self.dim,
            });
        }
        let targets = MultiIndex::all_of_degree(self.dim, self.degree);
        let mut out = Form::zero(self.dim, self.degree);
        for (i, c) in &self.terms {
            for j in &targets {
                let minor = m.minor(*i, *j);
                if !minor.is_zero() {
                    out.insert(*j, c.clone() * minor);
                }
            }
        }
        Ok(out)
    }

    /// Drops this form into a new dimension, keeping components (used to
    /// re-embed spatial data).
    pub fn with_dim(&self, dim: usize) -> Result<Self> {
        Form::from_terms(dim, self.degree, self.terms().map(|(m, c)| (m, c.clone())))
    }

    fn zip_with(&self, other: &Form<S>, op: impl Fn(S) -> S) -> Form<S> {
        assert_eq!(self.dim, other.dim, "adding forms of different dimension");
        assert_eq!(
            self.degree, other.degree,
            "adding forms of different degree"
        );
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(*m, op(c.clone()));
        }
        out
    }
}

impl<S: Scalar> Add for Form<S> {
    type Output = Form<S>;

    fn add(self, rhs: Form<S>) -> Form<S> {
        self.zip_with(&rhs, |c| c)
    }
}

impl<S: Scalar> Add<&Form<S>> for &Form<S> {
    type Output = Form<S>;

    fn add(self, rhs: &Form<S>) -> Form<S> {
        self.zip_with(rhs, |c| c)
    }
}

impl<S: Scalar> Sub for Form<S> {
    type Output = Form<S>;

    fn sub(self, rhs: Form<S>) -> Form<S> {
        self.zip_with(&rhs, |c| -c)
    }
}

impl<S: Scalar> Sub<&Form<S>> for &Form<S> {
    type Output = Form<S>;

    fn sub(self, rhs: &Form<S>) -> Form<S> {
        self.zip_with(rhs, |c| -c)
    }
}

impl<S: Scalar> Neg for Form<S> {
    type Output = Form<S>;

    fn neg(self) -> Form<S> {
        Form {
            dim: self.dim,
            degree: self.degree,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<S: Scalar> Mul<S> for Form<S> {
    type Output = Form<S>;

    fn mul(self, rhs: S) -> Form<S> {
        self.scale(&rhs)
    }
}

/// A form with no `e^0` leg (the hatted forms of the temporal/spatial split).
#[derive(Clone, Debug, PartialEq)]
pub struct SpatialForm<S>(Form<S>);

impl<S: Scalar> SpatialForm<S> {
    pub fn new(form: Form<S>) -> Result<Self> {
        if form.is_spatial() {
            Ok(SpatialForm(form))
        } else {
            Err(Error::NotSpatial)
        }
    }

    pub fn zero(dim: usize, degree: usize) -> Self {
        SpatialForm(Form::zero(dim, degree))
    }

    pub fn as_form(&self) -> &Form<S> {
        &self.0
    }

    pub fn into_form(self) -> Form<S> {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn eta(&self) -> Self {
        SpatialForm(self.0.eta())
    }
}
