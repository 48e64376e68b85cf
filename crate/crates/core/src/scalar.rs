//! Scalar fields for multivector coefficients.
//!
//! Two instantiations are sanctioned: exact arbitrary-precision rationals
//! ([`Rational`]) and double-precision floats. Exactness is a property of the
//! type; singularity and centrality tests branch on [`Scalar::EXACT`] so that
//! rational arithmetic never goes through a tolerance.

use std::fmt;
use std::ops::{AddAssign, Div, MulAssign, Neg, Sub, SubAssign};

use num::bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar backed by arbitrary-precision integers.
pub type Rational = num::BigRational;

/// Default absolute/relative tolerance for float-mode zero tests.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Coefficient field of a [`Multivector`](crate::Multivector).
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + Send
    + Sync
    + 'static
{
    /// True when arithmetic is exact and `is_zero` is decisive.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    /// Parse an optionally signed integer literal of any length.
    fn from_integer_str(s: &str) -> Option<Self>;

    /// Parse a plain decimal literal such as `-12.75` (no exponent part).
    /// Exact for rationals: `12.75` becomes `51/4`.
    fn from_decimal_str(s: &str) -> Option<Self>;

    /// Multiplicative inverse; `None` for an exact zero.
    fn try_recip(&self) -> Option<Self>;

    /// Nearest double, used for norms and float-mode tolerance checks.
    fn to_f64(&self) -> f64;

    fn is_negative(&self) -> bool;
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(v.into())
    }

    fn from_integer_str(s: &str) -> Option<Self> {
        let n: BigInt = s.parse().ok()?;
        Some(Rational::from_integer(n))
    }

    fn from_decimal_str(s: &str) -> Option<Self> {
        let (int_part, frac_part) = match s.split_once('.') {
            Some((i, f)) => (i, f),
            None => (s, ""),
        };
        if frac_part.contains(['+', '-', '.']) {
            return None;
        }
        let digits: BigInt = format!("{int_part}{frac_part}").parse().ok()?;
        let denom = num::pow(BigInt::from(10), frac_part.len());
        Some(Rational::new(digits, denom))
    }

    fn try_recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_integer_str(s: &str) -> Option<Self> {
        s.parse().ok()
    }

    fn from_decimal_str(s: &str) -> Option<Self> {
        s.parse().ok()
    }

    fn try_recip(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn is_negative(&self) -> bool {
        *self < 0.0
    }
}

/// Zero test shared by elimination and singularity checks: exact fields
/// ignore the tolerance entirely.
pub(crate) fn is_negligible<S: Scalar>(v: &S, tol: f64) -> bool {
    if S::EXACT {
        v.is_zero()
    } else {
        v.to_f64().abs() <= tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_literals_are_exact_rationals() {
        let v = Rational::from_decimal_str("12.75").unwrap();
        assert_eq!(v, Rational::new(51.into(), 4.into()));
        let neg = Rational::from_decimal_str("-0.5").unwrap();
        assert_eq!(neg, Rational::new((-1).into(), 2.into()));
        assert_eq!(
            Rational::from_decimal_str("3").unwrap(),
            Rational::from_i64(3)
        );
    }

    #[test]
    fn recip_of_zero_is_none() {
        assert_eq!(Rational::zero().try_recip(), None);
        assert_eq!(0.0f64.try_recip(), None);
        assert_eq!(Rational::from_i64(4).try_recip().unwrap(), Rational::new(1.into(), 4.into()));
    }

    #[test]
    fn float_literals_round_trip() {
        let v = f64::from_decimal_str("0.1").unwrap();
        assert_eq!(v, 0.1);
        assert_eq!(f64::from_integer_str("-9807"), Some(-9807.0));
    }
}
