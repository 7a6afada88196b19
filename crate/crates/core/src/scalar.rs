//! Coefficient field abstraction.
//!
//! Every algebraic routine in the crate is generic over [`Scalar`]. The exact
//! instances ([`num_rational::BigRational`], `Ratio<i64>`) make identities such
//! as `** = 0` hold with equality; `f32`/`f64` are supported for quick
//! numerical experiments where exact cancellation is not required.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub trait Scalar:
    Num + Clone + Debug + Display + PartialEq + std::ops::Neg<Output = Self> + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// Conversion from an exact rational; lossy for floating point types.
    fn from_big_rational(r: &BigRational) -> Self;

    /// `(-1)^k`.
    fn sign(k: usize) -> Self {
        if k.is_multiple_of(2) {
            Self::one()
        } else {
            -Self::one()
        }
    }

    fn is_negative_value(&self) -> bool;
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_big_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn is_negative_value(&self) -> bool {
        self.is_negative()
    }
}

impl Scalar for Ratio<i64> {
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }

    fn from_big_rational(r: &BigRational) -> Self {
        let n = r.numer().to_i64().expect("numerator overflows i64");
        let d = r.denom().to_i64().expect("denominator overflows i64");
        Ratio::new(n, d)
    }

    fn is_negative_value(&self) -> bool {
        self.is_negative()
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn from_big_rational(r: &BigRational) -> Self {
                r.to_f64().unwrap_or(f64::NAN) as $t
            }

            fn is_negative_value(&self) -> bool {
                *self < 0.0
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

/// Parses `"3"`, `"-2/5"` or `"7/1"` into an exact rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let bad = || Error::parse(0, format!("invalid rational `{text}`"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| bad())?;
    let d = BigInt::from_str(den).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::parse(0, "zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

pub(crate) fn is_one<S: Scalar>(s: &S) -> bool {
    *s == S::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_parsing() {
        let r = parse_rational("-2/4").unwrap();
        assert_eq!(r, BigRational::new((-1).into(), 2.into()));
        assert_eq!(parse_rational(" 3 ").unwrap(), BigRational::from_i64(3));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn sign_alternates() {
        assert_eq!(<f64 as Scalar>::sign(3), -1.0);
        assert_eq!(<Ratio<i64> as Scalar>::sign(4), Ratio::from_integer(1));
    }

    #[test]
    fn lossy_conversions() {
        let r = parse_rational("3/4").unwrap();
        assert_eq!(f64::from_big_rational(&r), 0.75);
        assert_eq!(Ratio::<i64>::from_big_rational(&r), Ratio::new(3, 4));
    }
}
