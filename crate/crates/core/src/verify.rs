//! Seeded property suites and the random generators behind them.
//!
//! Every suite is deterministic for a given seed and reports how many cases
//! it ran together with the first few counterexamples.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::VectorField3;
use crate::form::{Form, SpatialForm};
use crate::hodge::{hat_star, minkowski_square_sign, star_closed, star_oracle, StarVariant};
use crate::literal::format_form;
use crate::matrix::Matrix;
use crate::multi_index::MultiIndex;
use crate::poly::Polynomial;
use crate::scalar::Scalar;
use crate::structure::{SpacetimeKind, SpacetimeStructure};
use crate::transform::{
    check_invariance, check_naturality, pullback_structure, AffineMap, FrameChange,
};
use crate::Rational;

type R = Rational;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut impl Rng) -> R {
    let num: i64 = rng.gen_range(-9..=9);
    let den: i64 = rng.gen_range(1..=5);
    R::new(num.into(), den.into())
}

pub fn random_vector(rng: &mut impl Rng, n: usize) -> Vec<R> {
    (0..n).map(|_| random_rational(rng)).collect()
}

/// Exactly rational rotation from the Cayley transform `(I − K)(I + K)⁻¹`
/// of a random skew-symmetric `K`.
pub fn random_rotation(rng: &mut impl Rng, n: usize) -> Matrix<R> {
    let mut k = Matrix::<R>::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let v: i64 = rng.gen_range(-3..=3);
            let w: i64 = rng.gen_range(1..=3);
            let x = R::new(v.into(), w.into());
            k[(i, j)] = x.clone();
            k[(j, i)] = -x;
        }
    }
    let id = Matrix::<R>::identity(n);
    let minus = Matrix::from_fn(n, n, |i, j| id[(i, j)].clone() - k[(i, j)].clone());
    let plus = Matrix::from_fn(n, n, |i, j| id[(i, j)].clone() + k[(i, j)].clone());
    minus.mul(&plus.inverse().expect("I + K is invertible for skew K"))
}

/// Random element of the homogeneous Galilei (or Carroll) group: a boost
/// and a rotation in random order.
pub fn random_adapted_change(rng: &mut impl Rng, kind: SpacetimeKind, n: usize) -> FrameChange<R> {
    let v = random_vector(rng, n);
    let boost = match kind {
        SpacetimeKind::Carrollian => FrameChange::carroll_boost(&v),
        _ => FrameChange::galilei_boost(&v),
    };
    let rot = FrameChange::rotation(&random_rotation(rng, n)).expect("Cayley rotation");
    match rng.gen_range(0..3) {
        0 => boost,
        1 => boost.compose(&rot).expect("same dimension"),
        _ => rot.compose(&boost).expect("same dimension"),
    }
}

/// Random invertible matrix with `det ∉ {0, 1}`.
pub fn random_invertible(rng: &mut impl Rng, d: usize) -> FrameChange<R> {
    loop {
        let m = Matrix::from_fn(d, d, |_, _| {
            let v: i64 = rng.gen_range(-3..=3);
            let w: i64 = rng.gen_range(1..=2);
            R::new(v.into(), w.into())
        });
        let det = m.determinant();
        if !det.is_zero() && det != R::from_i64(1) {
            return FrameChange::new(m).expect("nonzero determinant");
        }
    }
}

/// Random `p`-form with roughly half of the basis populated.
pub fn random_form(rng: &mut impl Rng, d: usize, p: usize) -> Form<R> {
    let mut terms = Vec::new();
    for m in MultiIndex::all_of_degree(d, p) {
        if rng.gen_bool(0.6) {
            terms.push((m, random_rational(rng)));
        }
    }
    Form::from_terms(d, p, terms).expect("valid random form")
}

/// Random polynomial in `nvars` variables of total degree `≤ max_degree`.
pub fn random_polynomial(rng: &mut impl Rng, nvars: usize, max_degree: u32) -> Polynomial<R> {
    let mut p = Polynomial::zero(nvars);
    for _ in 0..rng.gen_range(0..=5) {
        let mut e = vec![0u32; nvars];
        for _ in 0..rng.gen_range(0..=max_degree) {
            e[rng.gen_range(0..nvars)] += 1;
        }
        p = p + Polynomial::monomial(e, random_rational(rng));
    }
    p
}

pub fn random_field(rng: &mut impl Rng, max_degree: u32) -> VectorField3<R> {
    [0, 1, 2].map(|_| random_polynomial(rng, 4, max_degree))
}

fn var(i: usize) -> Polynomial<R> {
    Polynomial::var(4, i)
}

fn grad(p: &Polynomial<R>) -> VectorField3<R> {
    [p.partial(1), p.partial(2), p.partial(3)]
}

fn curl(v: &VectorField3<R>) -> VectorField3<R> {
    [
        v[2].partial(2) - v[1].partial(3),
        v[0].partial(3) - v[2].partial(1),
        v[1].partial(1) - v[0].partial(2),
    ]
}

/// Random harmonic polynomial in `x, y, z` of degree ≤ 3.
fn random_harmonic(rng: &mut impl Rng) -> Polynomial<R> {
    let (x, y, z) = (var(1), var(2), var(3));
    let basis = [
        x.clone(),
        y.clone(),
        z.clone(),
        &x * &y,
        &y * &z,
        &x * &z,
        &x * &x - &y * &y,
        &y * &y - &z * &z,
        &(&x * &y) * &z,
        &x.pow(3) - &(&x * &y.pow(2)).scale(&R::from_i64(3)),
        &y.pow(3) - &(&y * &z.pow(2)).scale(&R::from_i64(3)),
        &z.pow(3) - &(&z * &x.pow(2)).scale(&R::from_i64(3)),
    ];
    let mut h = Polynomial::zero(4);
    for b in &basis {
        if rng.gen_bool(0.4) {
            h = h + b.scale(&random_rational(rng));
        }
    }
    h
}

fn random_spatial(rng: &mut impl Rng, max_degree: u32) -> Polynomial<R> {
    let p = random_polynomial(rng, 4, max_degree);
    let zero_t = [Polynomial::zero(4), var(1), var(2), var(3)];
    p.substitute(&zero_t).expect("four variables")
}

/// A solution of the Galilei system:
/// `B = b₀ + ∇h + t c` (h harmonic), `E = ∇φ − ½ c × r`.
pub fn galilei_solution(rng: &mut impl Rng) -> (VectorField3<R>, VectorField3<R>) {
    let b0 = random_vector(rng, 3);
    let c = random_vector(rng, 3);
    let h = random_harmonic(rng);
    let phi = random_polynomial(rng, 4, 3);
    let t = var(0);
    let gh = grad(&h);
    let b = [0, 1, 2].map(|i| {
        &(&gh[i] + &Polynomial::constant(4, b0[i].clone())) + &t.scale(&c[i])
    });
    let r = [var(1), var(2), var(3)];
    let half = R::new(1.into(), 2.into());
    let cross = [
        &r[2].scale(&c[1]) - &r[1].scale(&c[2]),
        &r[0].scale(&c[2]) - &r[2].scale(&c[0]),
        &r[1].scale(&c[0]) - &r[0].scale(&c[1]),
    ];
    let gp = grad(&phi);
    let e = [0, 1, 2].map(|i| &gp[i] - &cross[i].scale(&half));
    (e, b)
}

/// A solution of the Carroll system:
/// `E = curl W(r)`, `B = curl V(r) − t curl E`.
pub fn carroll_solution(rng: &mut impl Rng) -> (VectorField3<R>, VectorField3<R>) {
    let w = [0, 1, 2].map(|_| random_spatial(rng, 3));
    let v = [0, 1, 2].map(|_| random_spatial(rng, 3));
    let e = curl(&w);
    let ce = curl(&e);
    let cv = curl(&v);
    let t = var(0);
    let b = [0, 1, 2].map(|i| &cv[i] - &(&t * &ce[i]));
    (e, b)
}

/// A vacuum solution of the Minkowski system: static gradients of harmonic
/// potentials plus a polynomial wave along x,
/// `E = ∇φ + (0, g(t−x), 0)`, `B = ∇ψ + (0, 0, g(t−x))`.
pub fn minkowski_solution(rng: &mut impl Rng) -> (VectorField3<R>, VectorField3<R>) {
    let phi = random_harmonic(rng);
    let psi = random_harmonic(rng);
    let u = &var(0) - &var(1);
    let mut g = Polynomial::zero(4);
    for k in 0..=3 {
        g = g + u.pow(k).scale(&random_rational(rng));
    }
    let zero = Polynomial::zero(4);
    let (ge, gb) = (grad(&phi), grad(&psi));
    let e = [ge[0].clone(), &ge[1] + &g, &ge[2] + &zero];
    let b = [gb[0].clone(), gb[1].clone(), &gb[2] + &g];
    (e, b)
}

/// Exact solution generator for `kind`.
pub fn random_solution(
    rng: &mut impl Rng,
    kind: SpacetimeKind,
) -> (VectorField3<R>, VectorField3<R>) {
    match kind {
        SpacetimeKind::Minkowski => minkowski_solution(rng),
        SpacetimeKind::Galilean => galilei_solution(rng),
        SpacetimeKind::Carrollian => carroll_solution(rng),
    }
}

/// Rational Lorentz boost along `x` with rapidity parameter `s ∈ (−1, 1)`:
/// `γ = (1+s²)/(1−s²)`, `βγ = 2s/(1−s²)`.
pub fn lorentz_boost_x(s: &R) -> Matrix<R> {
    let one = R::from_i64(1);
    let den = one.clone() - s.clone() * s.clone();
    let gamma = (one.clone() + s.clone() * s.clone()) / den.clone();
    let bg = R::from_i64(2) * s.clone() / den;
    let mut m = Matrix::identity(4);
    m[(0, 0)] = gamma.clone();
    m[(1, 1)] = gamma;
    m[(0, 1)] = bg.clone();
    m[(1, 0)] = bg;
    m
}

/// Random structure-preserving affine map of flat 1+3 spacetime: a boost
/// of the matching kind, a rotation and a translation.
pub fn random_matching_map(rng: &mut impl Rng, kind: SpacetimeKind) -> AffineMap<R> {
    let rot = FrameChange::rotation(&random_rotation(rng, 3)).expect("Cayley rotation");
    let boost = match kind {
        SpacetimeKind::Minkowski => {
            let num: i64 = rng.gen_range(-4..=4);
            let s = R::new(num.into(), 5.into());
            lorentz_boost_x(&s)
        }
        SpacetimeKind::Galilean => FrameChange::galilei_boost(&random_vector(rng, 3)).matrix().clone(),
        SpacetimeKind::Carrollian => FrameChange::carroll_boost(&random_vector(rng, 3)).matrix().clone(),
    };
    let linear = boost.mul(rot.matrix());
    AffineMap::new(linear, random_vector(rng, 4)).expect("invertible linear part")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Nilpotency,
    Oracle,
    Naturality,
    Kernels,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Nilpotency => "nilpotency",
            Suite::Oracle => "oracle",
            Suite::Naturality => "naturality",
            Suite::Kernels => "kernels",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "nilpotency" => Ok(Suite::Nilpotency),
            "oracle" => Ok(Suite::Oracle),
            "naturality" => Ok(Suite::Naturality),
            "kernels" => Ok(Suite::Kernels),
            "all" => Ok(Suite::All),
            other => Err(Error::parse(0, format!("unknown suite `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest spacetime dimension `d` for the exhaustive suites.
    pub max_dim: usize,
    pub seed: u64,
    /// Random frame changes per group in the invariance check.
    pub invariance_samples: usize,
    /// Random invertible matrices in the general naturality check.
    pub naturality_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_dim: 6,
            seed: 0,
            invariance_samples: 200,
            naturality_samples: 50,
        }
    }
}

const MAX_REPORTED: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: usize,
    pub failed: usize,
    pub counterexamples: Vec<String>,
    pub notes: Vec<String>,
}

impl SuiteReport {
    fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            cases: 0,
            failed: 0,
            counterexamples: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.counterexamples.len() < MAX_REPORTED {
                self.counterexamples.push(describe());
            }
        }
    }

    fn check_result(&mut self, res: Result<bool>, describe: impl FnOnce() -> String) {
        match res {
            Ok(ok) => self.check(ok, describe),
            Err(err) => self.check(false, || format!("{}: {err}", describe())),
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "FAILED" };
        write!(
            f,
            "{}: {status} ({} cases, {} failed)",
            self.suite, self.cases, self.failed
        )?;
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        for c in &self.counterexamples {
            write!(f, "\n  counterexample: {c}")?;
        }
        Ok(())
    }
}

fn canonical(kind: SpacetimeKind, d: usize) -> SpacetimeStructure<R> {
    SpacetimeStructure::canonical(kind, d - 1).expect("d ≥ 2")
}

fn basis_forms(d: usize) -> impl Iterator<Item = Form<R>> {
    MultiIndex::all(d).into_iter().map(move |m| Form::basis(d, m))
}

fn dims(max_dim: usize) -> std::ops::RangeInclusive<usize> {
    2..=max_dim.clamp(2, crate::MAX_DIM)
}

/// Signs `c₀, c_d` with `∗_top ∗_0 = c₀` on 0-forms and `∗_0 ∗_top = c_d`
/// on `d`-forms, where `∗_0` and `∗_top` are the stars that are nonzero in
/// the exceptional degrees 0 and d. `None` if a composite is not `±1`.
pub fn exceptional_square_signs(
    kind: SpacetimeKind,
    d: usize,
    table: bool,
) -> Result<(Option<i8>, Option<i8>)> {
    let s = canonical(kind, d);
    let (low, high) = if table {
        let v = StarVariant::table(kind);
        (v, v)
    } else {
        match kind {
            SpacetimeKind::Minkowski => (StarVariant::MinkowskiMetric, StarVariant::MinkowskiMetric),
            SpacetimeKind::Galilean => (StarVariant::GalileanH, StarVariant::GalileanK),
            SpacetimeKind::Carrollian => (StarVariant::CarrollianK, StarVariant::CarrollianH),
        }
    };
    let sign_of = |f: &Form<R>, g: &Form<R>| -> Option<i8> {
        if f == g {
            Some(1)
        } else if *f == -g.clone() {
            Some(-1)
        } else {
            None
        }
    };
    let one = Form::scalar(d, R::from_i64(1));
    let top = Form::basis(d, MultiIndex::full(d));
    let round0 = star_oracle(&star_oracle(&one, &s, low)?, &s, high)?;
    let round_d = star_oracle(&star_oracle(&top, &s, high)?, &s, low)?;
    Ok((sign_of(&round0, &one), sign_of(&round_d, &top)))
}

fn describe(f: &Form<R>) -> String {
    format_form(f)
}

/// `∗∗ = 0` for the degenerate h-based stars away from the extreme degrees,
/// `∗∗ = ±1` for the Lorentzian star, and the exceptional-degree composites.
pub fn nilpotency_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("nilpotency");
    for d in dims(cfg.max_dim) {
        for (kind, variant) in [
            (SpacetimeKind::Galilean, StarVariant::GalileanH),
            (SpacetimeKind::Carrollian, StarVariant::CarrollianH),
        ] {
            let s = canonical(kind, d);
            for a in basis_forms(d).filter(|a| a.degree() != 0 && a.degree() != d) {
                let res = star_oracle(&a, &s, variant)
                    .and_then(|b| star_oracle(&b, &s, variant))
                    .map(|b| b.is_zero());
                rep.check_result(res, || format!("{variant} ∗∗({}) ≠ 0, d = {d}", describe(&a)));
            }
        }
        let s = canonical(SpacetimeKind::Minkowski, d);
        for a in basis_forms(d) {
            let sign = minkowski_square_sign(a.degree(), d);
            let expected = if sign < 0 { -a.clone() } else { a.clone() };
            let res = star_oracle(&a, &s, StarVariant::MinkowskiMetric)
                .and_then(|b| star_oracle(&b, &s, StarVariant::MinkowskiMetric))
                .map(|b| b == expected);
            rep.check_result(res, || {
                format!("Minkowski ∗∗({}) ≠ {sign}·id, d = {d}", describe(&a))
            });
        }
    }
    for kind in [SpacetimeKind::Galilean, SpacetimeKind::Carrollian] {
        let mut observed = Vec::new();
        for d in dims(cfg.max_dim) {
            let res = exceptional_square_signs(kind, d, false);
            let pair = res.as_ref().ok().copied();
            let ok = matches!(pair, Some((Some(a), Some(b))) if a == b);
            rep.check(ok, || format!("{kind} exceptional composite not ±id at d = {d}: {res:?}"));
            if let Some((Some(a), _)) = pair {
                observed.push(format!("d={d}:{a:+}"));
            }
        }
        rep.notes.push(format!(
            "{kind} exceptional-degree composite signs {}",
            observed.join(" ")
        ));
    }
    if cfg.max_dim >= 4 {
        let mut observed = Vec::new();
        for kind in SpacetimeKind::ALL {
            let res = exceptional_square_signs(kind, 4, true);
            let pair = res.as_ref().ok().copied();
            let ok = matches!(pair, Some((Some(a), Some(b))) if a == b);
            rep.check(ok, || format!("{kind} 1+3 table composite not ±id: {res:?}"));
            if let Some((Some(a), _)) = pair {
                observed.push(format!("{kind}:{a:+}"));
            }
        }
        rep.notes
            .push(format!("1+3 table degree-0/degree-4 composite signs {}", observed.join(" ")));
    }
    rep
}

/// Closed forms against contraction, for every variant, degree and basis
/// form, plus `∗̂∗̂ = (−1)^{p(n−p)}` on spatial forms for `n ≤ 5`.
pub fn oracle_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("oracle");
    for d in dims(cfg.max_dim) {
        for kind in SpacetimeKind::ALL {
            let s = canonical(kind, d);
            for variant in StarVariant::for_kind(kind, d) {
                for a in basis_forms(d) {
                    let res = star_oracle(&a, &s, variant)
                        .and_then(|o| star_closed(&a, &s, variant).map(|c| c == o));
                    rep.check_result(res, || {
                        format!("{variant} closed ≠ oracle on {} (d = {d})", describe(&a))
                    });
                }
            }
        }
        if d <= 6 {
            for m in MultiIndex::all(d).into_iter().filter(|m| m.is_spatial()) {
                // Euclidean signature: ∗̂∗̂ = (−1)^{p(n−p)}, the identity for odd n
                let p = m.degree();
                let a = SpatialForm::new(Form::basis(d, m)).expect("spatial");
                let expected = if (p * (d - 1 - p)) % 2 == 0 {
                    a.as_form().clone()
                } else {
                    -a.as_form().clone()
                };
                let twice = hat_star(&hat_star(&a));
                rep.check(twice.as_form() == &expected, || {
                    format!("∗̂∗̂ ≠ (−1)^(p(n−p)) on {}", describe(a.as_form()))
                });
            }
        }
    }
    rep
}

/// Invariance under the adapted groups at `d = 4`, general naturality with
/// transformed structures for `d ≤ 4`, and `det A = 1` / structure fixing.
pub fn naturality_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("naturality");
    let mut rng = rng_from_seed(cfg.seed);
    let d = 4;
    for kind in [SpacetimeKind::Galilean, SpacetimeKind::Carrollian] {
        let s = canonical(kind, d);
        for _ in 0..cfg.invariance_samples {
            let change = random_adapted_change(&mut rng, kind, d - 1);
            rep.check(change.det() == R::from_i64(1), || format!("{kind} change with det ≠ 1"));
            let in_group = match kind {
                SpacetimeKind::Carrollian => change.is_carroll(),
                _ => change.is_galilei(),
            };
            rep.check(in_group, || format!("{kind} change left its group: {:?}", change.matrix()));
            let fixed = pullback_structure(&s, &change).map(|t| t == s);
            rep.check_result(fixed, || format!("{kind} structure moved by {:?}", change.matrix()));
            for variant in StarVariant::for_kind(kind, d) {
                for a in basis_forms(d) {
                    let res = check_invariance(&a, &s, variant, &change);
                    rep.check_result(res, || {
                        format!(
                            "{variant} not invariant on {} under {:?}",
                            describe(&a),
                            change.matrix()
                        )
                    });
                }
            }
        }
    }
    let max_d = cfg.max_dim.min(4);
    for _ in 0..cfg.naturality_samples {
        let d = rng.gen_range(2..=max_d.max(2));
        let change = random_invertible(&mut rng, d);
        let kind = *SpacetimeKind::ALL.choose(&mut rng).expect("nonempty");
        let s = canonical(kind, d);
        for variant in StarVariant::for_kind(kind, d) {
            for a in basis_forms(d) {
                let res = check_naturality(&a, &s, variant, &change);
                rep.check_result(res, || {
                    format!(
                        "{variant} not natural on {} under {:?}",
                        describe(&a),
                        change.matrix()
                    )
                });
            }
        }
    }
    rep
}

/// The kernel statements and the coincidences of h- and k-based stars in
/// the degrees where both are nonzero.
pub fn kernels_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("kernels");
    for d in dims(cfg.max_dim) {
        let n = d - 1;
        let gal = canonical(SpacetimeKind::Galilean, d);
        let car = canonical(SpacetimeKind::Carrollian, d);
        for a in basis_forms(d) {
            let m = a.terms().next().expect("basis form").0;
            let p = a.degree();
            if m.contains(0) && p - 1 != n {
                let res = star_oracle(&a, &gal, StarVariant::GalileanH).map(|b| b.is_zero());
                rep.check_result(res, || format!("GalileanH ∗({}) ≠ 0", describe(&a)));
            }
            if !m.contains(0) && p != 0 {
                let res = star_oracle(&a, &car, StarVariant::CarrollianH).map(|b| b.is_zero());
                rep.check_result(res, || format!("CarrollianH ∗({}) ≠ 0", describe(&a)));
            }
            if p == n {
                let res = star_oracle(&a, &gal, StarVariant::GalileanH).and_then(|h| {
                    star_oracle(&a, &gal, StarVariant::GalileanK).map(|k| h == k)
                });
                rep.check_result(res, || format!("GalileanK ≠ GalileanH on {}", describe(&a)));
            }
            if p == 1 {
                let res = star_oracle(&a, &car, StarVariant::CarrollianH).and_then(|h| {
                    star_oracle(&a, &car, StarVariant::CarrollianK).map(|k| h == k)
                });
                rep.check_result(res, || format!("CarrollianK ≠ CarrollianH on {}", describe(&a)));
            }
        }
    }
    rep
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Vec<SuiteReport> {
    match suite {
        Suite::Nilpotency => vec![nilpotency_suite(cfg)],
        Suite::Oracle => vec![oracle_suite(cfg)],
        Suite::Naturality => vec![naturality_suite(cfg)],
        Suite::Kernels => vec![kernels_suite(cfg)],
        Suite::All => vec![
            nilpotency_suite(cfg),
            oracle_suite(cfg),
            naturality_suite(cfg),
            kernels_suite(cfg),
        ],
    }
}
