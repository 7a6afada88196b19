//! Frame changes, pullbacks and the naturality of the stars.
//!
//! A [`FrameChange`] holds a matrix `A` with `A[b][a] = A^b_a`, so the new
//! frame is `e'_a = Σ_b A[b][a] e_b` and the new coframe is
//! `e'^a = Σ_b (A⁻¹)[a][b] e^b`. The pullback of a form substitutes every
//! coframe leg by its primed counterpart; tensors, ξ, vol and the polyvector
//! transform along with it, which is what makes the naturality law an
//! identity on components.

use crate::error::{Error, Result};
use crate::form::Form;
use crate::hodge::{star_closed, star_oracle, StarVariant};
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::structure::{OneTensor, Polyvector, SpacetimeStructure, SymTensor2, Variance};

#[derive(Clone, Debug, PartialEq)]
pub struct FrameChange<S> {
    matrix: Matrix<S>,
    inverse: Matrix<S>,
}

fn block<S: Scalar>(corner: S, top: &[S], left: &[S], spatial: &Matrix<S>) -> Matrix<S> {
    let d = spatial.rows() + 1;
    Matrix::from_fn(d, d, |i, j| match (i, j) {
        (0, 0) => corner.clone(),
        (0, j) => top[j - 1].clone(),
        (i, 0) => left[i - 1].clone(),
        (i, j) => spatial[(i - 1, j - 1)].clone(),
    })
}

fn spatial_block<S: Scalar>(m: &Matrix<S>) -> Matrix<S> {
    let n = m.rows() - 1;
    Matrix::from_fn(n, n, |i, j| m[(i + 1, j + 1)].clone())
}

fn is_rotation<S: Scalar>(r: &Matrix<S>) -> bool {
    r.is_square()
        && r.transpose().mul(r) == Matrix::identity(r.rows())
        && r.determinant() == S::one()
}

impl<S: Scalar> FrameChange<S> {
    pub fn new(matrix: Matrix<S>) -> Result<Self> {
        let inverse = matrix.inverse()?;
        if matrix.rows() > crate::MAX_DIM {
            return Err(Error::DimensionOutOfRange(matrix.rows()));
        }
        Ok(FrameChange { matrix, inverse })
    }

    pub fn identity(dim: usize) -> Self {
        FrameChange {
            matrix: Matrix::identity(dim),
            inverse: Matrix::identity(dim),
        }
    }

    /// `[[1, 0], [v, I]]`: the time leg of the frame tilts, `e^0` is kept.
    pub fn galilei_boost(v: &[S]) -> Self {
        let n = v.len();
        let zeros = vec![S::zero(); n];
        let neg: Vec<S> = v.iter().map(|x| -x.clone()).collect();
        FrameChange {
            matrix: block(S::one(), &zeros, v, &Matrix::identity(n)),
            inverse: block(S::one(), &zeros, &neg, &Matrix::identity(n)),
        }
    }

    /// `[[1, vᵀ], [0, I]]`: `e_0` is kept, spatial legs pick up time.
    pub fn carroll_boost(v: &[S]) -> Self {
        let n = v.len();
        let zeros = vec![S::zero(); n];
        let neg: Vec<S> = v.iter().map(|x| -x.clone()).collect();
        FrameChange {
            matrix: block(S::one(), v, &zeros, &Matrix::identity(n)),
            inverse: block(S::one(), &neg, &zeros, &Matrix::identity(n)),
        }
    }

    /// `block-diag(1, R)` for an exactly orthogonal `R` with `det R = 1`.
    pub fn rotation(r: &Matrix<S>) -> Result<Self> {
        if !r.is_square() {
            return Err(Error::NotRotation("matrix is not square"));
        }
        if r.transpose().mul(r) != Matrix::identity(r.rows()) {
            return Err(Error::NotRotation("RᵀR ≠ I"));
        }
        if r.determinant() != S::one() {
            return Err(Error::NotRotation("det R ≠ 1"));
        }
        let zeros = vec![S::zero(); r.rows()];
        Ok(FrameChange {
            matrix: block(S::one(), &zeros, &zeros, r),
            inverse: block(S::one(), &zeros, &zeros, &r.transpose()),
        })
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &Matrix<S> {
        &self.inverse
    }

    pub fn inverse(&self) -> Self {
        FrameChange {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &FrameChange<S>) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        Ok(FrameChange {
            matrix: self.matrix.mul(&other.matrix),
            inverse: other.inverse.mul(&self.inverse),
        })
    }

    pub fn det(&self) -> S {
        self.matrix.determinant()
    }

    /// In the homogeneous Galilei group: `[[1, 0], [v, R]]`, `R ∈ SO(n)`.
    pub fn is_galilei(&self) -> bool {
        let m = &self.matrix;
        m[(0, 0)] == S::one()
            && (1..self.dim()).all(|j| m[(0, j)].is_zero())
            && is_rotation(&spatial_block(m))
    }

    /// In the homogeneous Carroll group: `[[1, wᵀ], [0, R]]`, `R ∈ SO(n)`.
    pub fn is_carroll(&self) -> bool {
        let m = &self.matrix;
        m[(0, 0)] == S::one()
            && (1..self.dim()).all(|i| m[(i, 0)].is_zero())
            && is_rotation(&spatial_block(m))
    }
}

/// Affine coordinate map `x' = M x + c` on flat spacetime. Its pullback acts
/// on coordinate differentials as `dx'^a ↦ Σ_b M[a][b] dx^b`.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineMap<S> {
    linear: FrameChange<S>,
    translation: Vec<S>,
}

impl<S: Scalar> AffineMap<S> {
    pub fn new(linear: Matrix<S>, translation: Vec<S>) -> Result<Self> {
        if translation.len() != linear.rows() {
            return Err(Error::DimensionMismatch {
                left: linear.rows(),
                right: translation.len(),
            });
        }
        Ok(AffineMap {
            linear: FrameChange::new(linear)?,
            translation,
        })
    }

    /// `t' = t`, `r' = r + v t`.
    pub fn galilei_boost(v: &[S]) -> Self {
        AffineMap {
            linear: FrameChange::galilei_boost(v),
            translation: vec![S::zero(); v.len() + 1],
        }
    }

    /// `t' = t + v·r`, `r' = r`.
    pub fn carroll_boost(v: &[S]) -> Self {
        AffineMap {
            linear: FrameChange::carroll_boost(v),
            translation: vec![S::zero(); v.len() + 1],
        }
    }

    pub fn with_translation(mut self, c: Vec<S>) -> Result<Self> {
        if c.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                left: self.dim(),
                right: c.len(),
            });
        }
        self.translation = c;
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.linear.dim()
    }

    pub fn linear(&self) -> &Matrix<S> {
        self.linear.matrix()
    }

    pub fn translation(&self) -> &[S] {
        &self.translation
    }

    /// Image `M x + c` of a point.
    pub fn apply(&self, x: &[S]) -> Vec<S> {
        self.linear
            .matrix()
            .mul_vec(x)
            .into_iter()
            .zip(&self.translation)
            .map(|(a, b)| a + b.clone())
            .collect()
    }

    /// Pullback of a constant-coefficient form.
    pub fn pullback_form(&self, a: &Form<S>) -> Result<Form<S>> {
        a.substitute_coframe(self.linear.matrix())
    }

    /// The frame change whose form pullback agrees with this map's.
    pub fn frame_change(&self) -> FrameChange<S> {
        self.linear.inverse()
    }
}

fn check_dims(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}

/// `e^a ↦ Σ_b (A⁻¹)[a][b] e^b` applied to every leg.
pub fn pullback_form<S: Scalar>(a: &Form<S>, change: &FrameChange<S>) -> Result<Form<S>> {
    check_dims(a.dim(), change.dim())?;
    a.substitute_coframe(&change.inverse)
}

fn transform_sym<S: Scalar>(t: &SymTensor2<S>, change: &FrameChange<S>) -> SymTensor2<S> {
    let entries = match t.variance {
        Variance::Upper => change.matrix.mul(&t.entries).mul(&change.matrix.transpose()),
        Variance::Lower => change
            .inverse
            .transpose()
            .mul(&t.entries)
            .mul(&change.inverse),
    };
    SymTensor2 {
        variance: t.variance,
        entries,
    }
}

fn transform_one<S: Scalar>(t: &OneTensor<S>, change: &FrameChange<S>) -> OneTensor<S> {
    let entries = match t.variance {
        Variance::Upper => change.matrix.mul_vec(&t.entries),
        Variance::Lower => change.inverse.transpose().mul_vec(&t.entries),
    };
    OneTensor {
        variance: t.variance,
        entries,
    }
}

/// Transforms every tensor of the structure along with the coframe.
/// Normalization constants are carried over unchanged.
pub fn pullback_structure<S: Scalar>(
    s: &SpacetimeStructure<S>,
    change: &FrameChange<S>,
) -> Result<SpacetimeStructure<S>> {
    check_dims(s.dim(), change.dim())?;
    let det_a = change.det();
    let det_b = change.inverse.determinant();
    let mut out = s.clone();
    out.h = transform_sym(&s.h, change);
    out.xi = s.xi.as_ref().map(|x| transform_one(x, change));
    out.k = s.k.as_ref().map(|k| transform_sym(k, change));
    out.vol = s.vol.scale(&det_b);
    out.polyvol = Polyvector::top(s.dim(), s.polyvol.top_coefficient().clone() * det_a);
    Ok(out)
}

/// `A^*(∗_s a) = ∗_{A^* s}(A^* a)`, both stars computed by contraction.
pub fn check_naturality<S: Scalar>(
    a: &Form<S>,
    s: &SpacetimeStructure<S>,
    variant: StarVariant,
    change: &FrameChange<S>,
) -> Result<bool> {
    let left = pullback_form(&star_oracle(a, s, variant)?, change)?;
    let moved = pullback_structure(s, change)?;
    let right = star_oracle(&pullback_form(a, change)?, &moved, variant)?;
    Ok(left == right)
}

/// `A^*(∗ a) = ∗(A^* a)` with the structure held fixed. Only expected to
/// hold when `A` preserves the structure.
pub fn check_invariance<S: Scalar>(
    a: &Form<S>,
    s: &SpacetimeStructure<S>,
    variant: StarVariant,
    change: &FrameChange<S>,
) -> Result<bool> {
    let star = |f: &Form<S>| {
        if s.is_canonical() {
            star_closed(f, s, variant)
        } else {
            star_oracle(f, s, variant)
        }
    };
    let left = pullback_form(&star(a)?, change)?;
    let right = star(&pullback_form(a, change)?)?;
    Ok(left == right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::literal::parse_form;
    use crate::multi_index::MultiIndex;
    use crate::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn v3(a: i64, b: i64, c: i64) -> Vec<Rational> {
        vec![q(a, 1), q(b, 1), q(c, 1)]
    }

    #[test]
    fn boost_matrices() {
        let g = FrameChange::galilei_boost(&v3(1, 0, 0));
        assert_eq!(g.matrix()[(1, 0)], q(1, 1));
        assert_eq!(g.matrix()[(0, 1)], q(0, 1));
        assert_eq!(g.det(), q(1, 1));
        let c = FrameChange::carroll_boost(&v3(1, 0, 0));
        assert_eq!(c.matrix()[(0, 1)], q(1, 1));
        assert_eq!(c.det(), q(1, 1));
        assert_eq!(
            FrameChange::galilei_boost(&v3(0, 0, 0)),
            FrameChange::identity(4)
        );
    }

    #[test]
    fn boosts_compose_additively() {
        let a = FrameChange::galilei_boost(&v3(1, 2, 3));
        let b = FrameChange::galilei_boost(&[q(1, 2), q(-1, 1), q(0, 1)]);
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab, FrameChange::galilei_boost(&[q(3, 2), q(1, 1), q(3, 1)]));
        let c = FrameChange::carroll_boost(&v3(1, 2, 3))
            .compose(&FrameChange::carroll_boost(&v3(-1, 0, 1)))
            .unwrap();
        assert_eq!(c, FrameChange::carroll_boost(&v3(0, 2, 4)));
    }

    #[test]
    fn rotation_validation() {
        let r = Matrix::from_rows(vec![vec![q(3, 5), q(-4, 5)], vec![q(4, 5), q(3, 5)]]).unwrap();
        let f = FrameChange::rotation(&r).unwrap();
        assert!(f.is_galilei() && f.is_carroll());
        let reflect = Matrix::from_rows(vec![vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(-1, 1)]]).unwrap();
        assert!(matches!(FrameChange::rotation(&reflect), Err(Error::NotRotation(_))));
        let skew = Matrix::from_rows(vec![vec![q(1, 1), q(1, 1)], vec![q(0, 1), q(1, 1)]]).unwrap();
        assert!(FrameChange::rotation(&skew).is_err());
    }

    #[test]
    fn pullback_of_time_leg() {
        let e0 = Form::<Rational>::basis(4, MultiIndex::single(0));
        let g = FrameChange::galilei_boost(&v3(2, 3, 5));
        assert_eq!(pullback_form(&e0, &g).unwrap(), e0);
        let c = FrameChange::carroll_boost(&v3(2, 3, 5));
        assert_eq!(
            pullback_form(&e0, &c).unwrap(),
            parse_form("dt - 2 dx - 3 dy - 5 dz", 4).unwrap()
        );
    }

    #[test]
    fn structures_fixed_by_their_groups() {
        let gal = SpacetimeStructure::<Rational>::galilean(3).unwrap();
        let car = SpacetimeStructure::<Rational>::carrollian(3).unwrap();
        let g = FrameChange::galilei_boost(&v3(1, -2, 3));
        let c = FrameChange::carroll_boost(&v3(1, -2, 3));
        assert_eq!(pullback_structure(&gal, &g).unwrap(), gal);
        assert_eq!(pullback_structure(&car, &c).unwrap(), car);
        assert_ne!(pullback_structure(&gal, &c).unwrap().h(), gal.h());
        assert!(!c.is_galilei() && c.is_carroll());
        assert!(g.is_galilei() && !g.is_carroll());
    }

    #[test]
    fn naturality_and_invariance_on_examples() {
        let gal = SpacetimeStructure::<Rational>::galilean(3).unwrap();
        let a = parse_form::<Rational>("dt^dx + 2 dy^dz - dx^dz", 4).unwrap();
        let g = FrameChange::galilei_boost(&v3(1, 2, -1));
        assert!(check_invariance(&a, &gal, StarVariant::GalileanH, &g).unwrap());
        let m = Matrix::from_rows(vec![
            vec![q(2, 1), q(1, 1), q(0, 1), q(0, 1)],
            vec![q(0, 1), q(1, 1), q(3, 1), q(0, 1)],
            vec![q(1, 1), q(0, 1), q(1, 1), q(1, 1)],
            vec![q(0, 1), q(0, 1), q(1, 2), q(1, 1)],
        ])
        .unwrap();
        let general = FrameChange::new(m).unwrap();
        assert_ne!(general.det(), q(1, 1));
        assert!(check_naturality(&a, &gal, StarVariant::GalileanH, &general).unwrap());
        assert!(!check_invariance(&a, &gal, StarVariant::GalileanH, &general).unwrap());
    }

    #[test]
    fn affine_boosts() {
        let c = AffineMap::carroll_boost(&v3(1, 2, 3));
        let x = vec![q(1, 1), q(1, 1), q(0, 1), q(0, 1)];
        assert_eq!(c.apply(&x), vec![q(2, 1), q(1, 1), q(0, 1), q(0, 1)]);
        let dt = Form::<Rational>::basis(4, MultiIndex::single(0));
        assert_eq!(
            c.pullback_form(&dt).unwrap(),
            parse_form("dt + dx + 2 dy + 3 dz", 4).unwrap()
        );
        assert!(c.frame_change().is_carroll());
    }
}
