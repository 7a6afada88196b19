//! Canonical tensor data of Minkowski, Galilean and Carrollian spacetimes in
//! an adapted frame.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::form::Form;
use crate::matrix::Matrix;
use crate::multi_index::{MultiIndex, MAX_DIM};
use crate::scalar::{parse_rational, Scalar};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpacetimeKind {
    Minkowski,
    #[serde(alias = "galilei")]
    Galilean,
    #[serde(alias = "carroll")]
    Carrollian,
}

impl SpacetimeKind {
    pub const ALL: [SpacetimeKind; 3] = [
        SpacetimeKind::Minkowski,
        SpacetimeKind::Galilean,
        SpacetimeKind::Carrollian,
    ];

    /// Short name used for the flat 1+3 spacetimes (`minkowski`, `galilei`, `carroll`).
    pub fn flat_name(self) -> &'static str {
        match self {
            SpacetimeKind::Minkowski => "minkowski",
            SpacetimeKind::Galilean => "galilei",
            SpacetimeKind::Carrollian => "carroll",
        }
    }
}

impl fmt::Display for SpacetimeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpacetimeKind::Minkowski => "Minkowski",
            SpacetimeKind::Galilean => "Galilean",
            SpacetimeKind::Carrollian => "Carrollian",
        })
    }
}

impl FromStr for SpacetimeKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "minkowski" | "lorentz" | "lorentzian" => Ok(SpacetimeKind::Minkowski),
            "galilei" | "galilean" => Ok(SpacetimeKind::Galilean),
            "carroll" | "carrollian" => Ok(SpacetimeKind::Carrollian),
            other => Err(Error::parse(0, format!("unknown spacetime kind `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variance {
    /// `(2,0)` / vector: indices up.
    Upper,
    /// `(0,2)` / covector: indices down.
    Lower,
}

/// Symmetric rank-2 tensor components.
#[derive(Clone, PartialEq)]
pub struct SymTensor2<S> {
    pub variance: Variance,
    pub entries: Matrix<S>,
}

impl<S: fmt::Debug> fmt::Debug for SymTensor2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?}", self.variance, self.entries)
    }
}

/// Vector `ξ̃` (upper) or covector `ξ` (lower).
#[derive(Clone, Debug, PartialEq)]
pub struct OneTensor<S> {
    pub variance: Variance,
    pub entries: Vec<S>,
}

impl<S: Scalar> OneTensor<S> {
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| x.is_zero())
    }

    /// `c · ξ ⊗ ξ`.
    pub fn outer(&self, c: &S) -> SymTensor2<S> {
        let n = self.entries.len();
        SymTensor2 {
            variance: self.variance,
            entries: Matrix::from_fn(n, n, |i, j| {
                c.clone() * self.entries[i].clone() * self.entries[j].clone()
            }),
        }
    }
}

/// Top-degree polyvector `μ e_0 ∧ ... ∧ e_n`, kept as its components.
#[derive(Clone, Debug, PartialEq)]
pub struct Polyvector<S> {
    dim: usize,
    coeff: S,
}

impl<S: Scalar> Polyvector<S> {
    pub fn top(dim: usize, coeff: S) -> Self {
        Polyvector { dim, coeff }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Component along `e_0 ∧ ... ∧ e_n`.
    pub fn top_coefficient(&self) -> &S {
        &self.coeff
    }

    pub fn terms(&self) -> impl Iterator<Item = (MultiIndex, &S)> {
        std::iter::once((MultiIndex::full(self.dim), &self.coeff))
    }
}

/// The free constants fixed by the normalization of the star operators.
#[derive(Clone, Debug, PartialEq)]
pub struct Normalization<S> {
    /// Spatial block of `h` / `h̃` (and of the Minkowski metric) is `λ_h δ`.
    pub lambda_h: S,
    /// `k = λ_k ξ ⊗ ξ`.
    pub lambda_k: S,
    /// Polyvector scale `μ`.
    pub mu: S,
}

impl<S: Scalar> Normalization<S> {
    /// Constants that make the stars match the Lorentzian formulas.
    pub fn canonical(kind: SpacetimeKind, n: usize) -> Self {
        let minus_one = -S::one();
        match kind {
            SpacetimeKind::Minkowski => Normalization {
                lambda_h: minus_one,
                lambda_k: S::one(),
                mu: S::one(),
            },
            SpacetimeKind::Galilean => Normalization {
                lambda_h: minus_one,
                lambda_k: S::sign(n),
                mu: S::one(),
            },
            SpacetimeKind::Carrollian => Normalization {
                lambda_h: minus_one,
                lambda_k: S::one(),
                mu: S::sign(n),
            },
        }
    }
}

/// Canonical tensors of one spacetime, in one adapted frame.
///
/// * Minkowski: `h` is the metric `g_ab` (lower); there is no `ξ` or `k`.
/// * Galilean: `h^{ab}` (upper), covector `ξ_a`, `k_ab = λ_k ξ_a ξ_b`.
/// * Carrollian: `h̃_ab` (lower), vector `ξ̃^a`, `k̃^{ab} = λ_k ξ̃^a ξ̃^b`.
#[derive(Clone, PartialEq)]
pub struct SpacetimeStructure<S> {
    pub(crate) kind: SpacetimeKind,
    pub(crate) dim: usize,
    pub(crate) h: SymTensor2<S>,
    pub(crate) xi: Option<OneTensor<S>>,
    pub(crate) k: Option<SymTensor2<S>>,
    pub(crate) vol: Form<S>,
    pub(crate) polyvol: Polyvector<S>,
    pub(crate) normalization: Normalization<S>,
}

impl<S: Scalar> fmt::Debug for SpacetimeStructure<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpacetimeStructure")
            .field("kind", &self.kind)
            .field("dim", &self.dim)
            .field("h", &self.h)
            .field("xi", &self.xi)
            .field("k", &self.k)
            .field("vol", &self.vol)
            .field("polyvol", &self.polyvol)
            .field("normalization", &self.normalization)
            .finish()
    }
}

fn check_n(n: usize) -> Result<usize> {
    if n < 1 {
        return Err(Error::SpatialDimension(n));
    }
    if n + 1 > MAX_DIM {
        return Err(Error::DimensionOutOfRange(n + 1));
    }
    Ok(n + 1)
}

fn block_diag<S: Scalar>(dim: usize, top: S, spatial: &S) -> Matrix<S> {
    let mut diag = vec![spatial.clone(); dim];
    diag[0] = top;
    Matrix::diagonal(&diag)
}

fn unit<S: Scalar>(dim: usize) -> Vec<S> {
    let mut v = vec![S::zero(); dim];
    v[0] = S::one();
    v
}

impl<S: Scalar> SpacetimeStructure<S> {
    pub fn minkowski(n: usize) -> Result<Self> {
        Self::minkowski_with(n, Normalization::canonical(SpacetimeKind::Minkowski, n))
    }

    pub fn galilean(n: usize) -> Result<Self> {
        Self::galilean_with(n, Normalization::canonical(SpacetimeKind::Galilean, n))
    }

    pub fn carrollian(n: usize) -> Result<Self> {
        Self::carrollian_with(n, Normalization::canonical(SpacetimeKind::Carrollian, n))
    }

    pub fn canonical(kind: SpacetimeKind, n: usize) -> Result<Self> {
        match kind {
            SpacetimeKind::Minkowski => Self::minkowski(n),
            SpacetimeKind::Galilean => Self::galilean(n),
            SpacetimeKind::Carrollian => Self::carrollian(n),
        }
    }

    /// Minkowski metric `diag(1, λ_h, ..., λ_h)`. Non-canonical when
    /// `norm` differs from [`Normalization::canonical`].
    pub fn minkowski_with(n: usize, norm: Normalization<S>) -> Result<Self> {
        let dim = check_n(n)?;
        Ok(SpacetimeStructure {
            kind: SpacetimeKind::Minkowski,
            dim,
            h: SymTensor2 {
                variance: Variance::Lower,
                entries: block_diag(dim, S::one(), &norm.lambda_h),
            },
            xi: None,
            k: None,
            vol: Form::basis(dim, MultiIndex::full(dim)),
            polyvol: Polyvector::top(dim, norm.mu.clone()),
            normalization: norm,
        })
    }

    /// Galilean data with user-chosen constants; non-canonical unless `norm`
    /// equals [`Normalization::canonical`].
    pub fn galilean_with(n: usize, norm: Normalization<S>) -> Result<Self> {
        let dim = check_n(n)?;
        let xi = OneTensor {
            variance: Variance::Lower,
            entries: unit(dim),
        };
        Ok(SpacetimeStructure {
            kind: SpacetimeKind::Galilean,
            dim,
            h: SymTensor2 {
                variance: Variance::Upper,
                entries: block_diag(dim, S::zero(), &norm.lambda_h),
            },
            k: Some(xi.outer(&norm.lambda_k)),
            xi: Some(xi),
            vol: Form::basis(dim, MultiIndex::full(dim)),
            polyvol: Polyvector::top(dim, norm.mu.clone()),
            normalization: norm,
        })
    }

    pub fn carrollian_with(n: usize, norm: Normalization<S>) -> Result<Self> {
        let dim = check_n(n)?;
        let xi = OneTensor {
            variance: Variance::Upper,
            entries: unit(dim),
        };
        Ok(SpacetimeStructure {
            kind: SpacetimeKind::Carrollian,
            dim,
            h: SymTensor2 {
                variance: Variance::Lower,
                entries: block_diag(dim, S::zero(), &norm.lambda_h),
            },
            k: Some(xi.outer(&norm.lambda_k)),
            xi: Some(xi),
            vol: Form::basis(dim, MultiIndex::full(dim)),
            polyvol: Polyvector::top(dim, norm.mu.clone()),
            normalization: norm,
        })
    }

    /// Assembles a structure from raw components. `k` is derived from `ξ`
    /// and `λ_k`; vol is `ε` and the polyvector is `μ ε`.
    pub fn from_parts(
        kind: SpacetimeKind,
        h: Matrix<S>,
        xi: Option<Vec<S>>,
        norm: Normalization<S>,
    ) -> Result<Self> {
        let dim = h.rows();
        check_n(dim.saturating_sub(1))?;
        if !h.is_square() {
            return Err(Error::Shape {
                rows: h.rows(),
                cols: h.cols(),
                dim,
            });
        }
        let (h_var, xi_var) = match kind {
            SpacetimeKind::Minkowski => (Variance::Lower, Variance::Upper),
            SpacetimeKind::Galilean => (Variance::Upper, Variance::Lower),
            SpacetimeKind::Carrollian => (Variance::Lower, Variance::Upper),
        };
        let xi = match (kind, xi) {
            (SpacetimeKind::Minkowski, _) => None,
            (_, Some(v)) if v.len() == dim => Some(OneTensor {
                variance: xi_var,
                entries: v,
            }),
            (_, Some(v)) => return Err(Error::DimensionMismatch { left: dim, right: v.len() }),
            (_, None) => return Err(Error::Document(format!("{kind} structure needs xi"))),
        };
        Ok(SpacetimeStructure {
            kind,
            dim,
            h: SymTensor2 {
                variance: h_var,
                entries: h,
            },
            k: xi.as_ref().map(|x| x.outer(&norm.lambda_k)),
            xi,
            vol: Form::basis(dim, MultiIndex::full(dim)),
            polyvol: Polyvector::top(dim, norm.mu.clone()),
            normalization: norm,
        })
    }

    pub fn kind(&self) -> SpacetimeKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Spatial dimension `n = d - 1`.
    pub fn n(&self) -> usize {
        self.dim - 1
    }

    /// `h^{ab}` (Galilean), `h̃_ab` (Carrollian) or `g_ab` (Minkowski).
    pub fn h(&self) -> &SymTensor2<S> {
        &self.h
    }

    pub fn xi(&self) -> Option<&OneTensor<S>> {
        self.xi.as_ref()
    }

    pub fn k(&self) -> Option<&SymTensor2<S>> {
        self.k.as_ref()
    }

    pub fn vol(&self) -> &Form<S> {
        &self.vol
    }

    pub fn polyvol(&self) -> &Polyvector<S> {
        &self.polyvol
    }

    pub fn normalization(&self) -> &Normalization<S> {
        &self.normalization
    }

    pub fn lambda_h(&self) -> &S {
        &self.normalization.lambda_h
    }

    pub fn lambda_k(&self) -> &S {
        &self.normalization.lambda_k
    }

    pub fn mu(&self) -> &S {
        &self.normalization.mu
    }

    /// Inverse metric `g^{ab}`; only meaningful for Minkowski.
    pub fn inverse_metric(&self) -> Result<Matrix<S>> {
        self.h.entries.inverse()
    }

    /// True when every component equals the canonical constructor output.
    pub fn is_canonical(&self) -> bool {
        Self::canonical(self.kind, self.n()).is_ok_and(|c| &c == self)
    }
}

/// One failed structural condition, reported by [`validate_adapted`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotSymmetric,
    /// `h(ξ, ·) ≠ 0` (or `h̃(ξ̃, ·) ≠ 0`).
    Annihilation,
    Rank { expected: usize, found: usize },
    ZeroXi,
    /// `ξ` is not `(1, 0, ..., 0)`.
    XiNotAdapted,
    /// Spatial block is not `λ_h δ` or the temporal row is not the canonical one.
    Normalization,
    /// `k ≠ λ_k ξ ⊗ ξ` or `rank k ≠ 1`.
    KTensor,
    VolumeForm,
    Polyvector,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NotSymmetric => write!(f, "h is not symmetric"),
            Violation::Annihilation => write!(f, "annihilation h(xi, .) = 0 violated"),
            Violation::Rank { expected, found } => {
                write!(f, "rank of h is {found}, expected {expected}")
            }
            Violation::ZeroXi => write!(f, "xi vanishes"),
            Violation::XiNotAdapted => write!(f, "xi is not (1, 0, ..., 0)"),
            Violation::Normalization => write!(f, "h is not in canonical block form"),
            Violation::KTensor => write!(f, "k is not lambda_k xi (x) xi of rank 1"),
            Violation::VolumeForm => write!(f, "volume form components differ from epsilon"),
            Violation::Polyvector => write!(f, "polyvector components differ from mu epsilon"),
        }
    }
}

/// Checks every adapted-frame invariant; an empty list means the structure
/// is a valid adapted representative.
pub fn validate_adapted<S: Scalar>(s: &SpacetimeStructure<S>) -> Vec<Violation> {
    let mut out = Vec::new();
    let d = s.dim;
    let h = &s.h.entries;
    if !h.is_symmetric() {
        out.push(Violation::NotSymmetric);
    }
    let expected_h = match s.kind {
        SpacetimeKind::Minkowski => block_diag(d, S::one(), &s.normalization.lambda_h),
        _ => block_diag(d, S::zero(), &s.normalization.lambda_h),
    };
    match (s.kind, &s.xi) {
        (SpacetimeKind::Minkowski, _) => {
            let rank = h.rank();
            if rank != d {
                out.push(Violation::Rank { expected: d, found: rank });
            }
            let spatial_ok = (1..d).all(|i| (1..d).all(|j| h[(i, j)] == expected_h[(i, j)]));
            if !spatial_ok || (0..d).any(|j| h[(0, j)] != expected_h[(0, j)]) {
                out.push(Violation::Normalization);
            }
        }
        (_, None) => out.push(Violation::ZeroXi),
        (_, Some(xi)) => {
            if xi.is_zero() {
                out.push(Violation::ZeroXi);
            } else if xi.entries != unit::<S>(d) {
                out.push(Violation::XiNotAdapted);
            }
            if !h.mul_vec(&xi.entries).iter().all(|x| x.is_zero()) {
                out.push(Violation::Annihilation);
            }
            let rank = h.rank();
            if rank != d - 1 {
                out.push(Violation::Rank {
                    expected: d - 1,
                    found: rank,
                });
            }
            let spatial_ok = (1..d).all(|i| (1..d).all(|j| h[(i, j)] == expected_h[(i, j)]));
            if !spatial_ok {
                out.push(Violation::Normalization);
            }
            let k_ok = s.k.as_ref().is_some_and(|k| {
                k.entries == xi.outer(&s.normalization.lambda_k).entries
                    && k.entries.rank() == 1
            });
            if !k_ok {
                out.push(Violation::KTensor);
            }
        }
    }
    if s.vol != Form::basis(d, MultiIndex::full(d)) {
        out.push(Violation::VolumeForm);
    }
    if s.polyvol != Polyvector::top(d, s.normalization.mu.clone()) {
        out.push(Violation::Polyvector);
    }
    out
}

/// A scalar in a JSON document: an integer or a rational string such as `"-2/5"`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Int(i64),
    Text(String),
}

impl ScalarRepr {
    pub fn to_rational(&self) -> Result<Rational> {
        match self {
            ScalarRepr::Int(i) => Ok(Rational::from_i64(*i)),
            ScalarRepr::Text(t) => {
                parse_rational(t).map_err(|_| Error::Document(format!("bad scalar `{t}`")))
            }
        }
    }

    pub fn from_scalar<S: Scalar>(s: &S) -> Self {
        ScalarRepr::Text(s.to_string())
    }
}

/// JSON document `{kind, n, lambda_h, lambda_k, mu, h, xi}` for loading
/// (possibly non-canonical) structures.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureDoc {
    pub kind: SpacetimeKind,
    pub n: usize,
    pub lambda_h: ScalarRepr,
    pub lambda_k: ScalarRepr,
    pub mu: ScalarRepr,
    pub h: Vec<Vec<ScalarRepr>>,
    #[serde(default)]
    pub xi: Option<Vec<ScalarRepr>>,
}

impl StructureDoc {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("structure document serializes")
    }

    pub fn from_structure<S: Scalar>(s: &SpacetimeStructure<S>) -> Self {
        let conv = |x: &S| ScalarRepr::from_scalar(x);
        StructureDoc {
            kind: s.kind,
            n: s.n(),
            lambda_h: conv(&s.normalization.lambda_h),
            lambda_k: conv(&s.normalization.lambda_k),
            mu: conv(&s.normalization.mu),
            h: s.h
                .entries
                .to_rows()
                .iter()
                .map(|r| r.iter().map(conv).collect())
                .collect(),
            xi: s.xi.as_ref().map(|x| x.entries.iter().map(conv).collect()),
        }
    }

    pub fn to_structure<S: Scalar>(&self) -> Result<SpacetimeStructure<S>> {
        let conv = |x: &ScalarRepr| x.to_rational().map(|r| S::from_big_rational(&r));
        let dim = check_n(self.n)?;
        let rows = self
            .h
            .iter()
            .map(|r| r.iter().map(conv).collect::<Result<Vec<S>>>())
            .collect::<Result<Vec<_>>>()?;
        let h = Matrix::from_rows(rows)?;
        if h.rows() != dim || h.cols() != dim {
            return Err(Error::Shape {
                rows: h.rows(),
                cols: h.cols(),
                dim,
            });
        }
        let xi = self
            .xi
            .as_ref()
            .map(|v| v.iter().map(conv).collect::<Result<Vec<S>>>())
            .transpose()?;
        let norm = Normalization {
            lambda_h: conv(&self.lambda_h)?,
            lambda_k: conv(&self.lambda_k)?,
            mu: conv(&self.mu)?,
        };
        SpacetimeStructure::from_parts(self.kind, h, xi, norm)
    }
}
