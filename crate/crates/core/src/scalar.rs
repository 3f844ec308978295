//! The coefficient field.
//!
//! Everything in this crate is written against [`Scalar`], a trait-bound alias
//! for an exact field of characteristic zero. The crate root fixes the concrete
//! choice [`crate::Q`] (arbitrary precision rationals); `Ratio<i64>` also
//! satisfies the bound and is handy in tests where overflow cannot occur.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Zero};

/// An exact field of characteristic zero.
///
/// Equality must be exact: every identity checker in this crate treats a
/// residual as satisfied only when it compares equal to zero.
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + fmt::Display + Num + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer fits in the scalar type")
    }

    fn half() -> Self {
        Self::one() / Self::from_int(2)
    }
}

impl<T> Scalar for T where
    T: Clone + PartialEq + fmt::Debug + fmt::Display + Num + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed rational {0:?}")]
pub struct ParseRationalError(pub String);

/// Parses `"p/q"`, `"p"` or either with a leading `-` (ASCII or U+2212).
pub fn parse_rational(text: &str) -> Result<BigRational, ParseRationalError> {
    let err = || ParseRationalError(text.to_string());
    let trimmed = text.trim();
    let (negative, body) = if let Some(rest) = trimmed.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = trimmed.strip_prefix('\u{2212}') {
        (true, rest)
    } else {
        (false, trimmed)
    };
    let digits = |s: &str| !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit());
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    if !digits(num) || !digits(den) {
        return Err(err());
    }
    let num = BigInt::from_str(num).map_err(|_| err())?;
    let den = BigInt::from_str(den).map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    let value = BigRational::new(num, den);
    Ok(if negative { -value } else { value })
}

/// Canonical text form: `"p/q"` in lowest terms, or `"p"` when `q = 1`.
pub fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}
