//! Exact rationals and rationals extended with `+inf`.
//!
//! Every scalar in the library is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. Decimal literals
//! are converted through powers of ten so `"0.45"` is exactly `9/20`.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact fraction in canonical reduced form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer/denom`, reducing and normalizing the sign.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    /// Like [`Rational::new`] for literals known to be valid.
    ///
    /// Panics on a zero denominator.
    pub fn frac(numer: i64, denom: i64) -> Self {
        Self::new(numer, denom).expect("nonzero denominator")
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(value.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn half() -> Self {
        Self::frac(1, 2)
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        (!self.is_zero()).then(|| Rational(self.0.recip()))
    }

    /// `self / other`, or `None` when `other` is zero.
    pub fn checked_div(&self, other: &Rational) -> Option<Self> {
        (!other.is_zero()).then(|| Rational(&self.0 / &other.0))
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    /// Mediant of the *reduced* representations of `self` and `other`.
    pub fn mediant(&self, other: &Rational) -> Self {
        mediant((self.numer(), self.denom()), (other.numer(), other.denom()))
            .expect("reduced denominators are positive")
    }

    /// Decimal rendering with at most `digits` fractional digits.
    pub fn to_decimal(&self, digits: usize) -> Decimal {
        let scale = BigInt::from(10u32).pow(digits);
        let scaled = &self.0.abs() * BigRational::from_integer(scale.clone());
        let exact = scaled.is_integer();
        let rounded = scaled.round().to_integer();

        let (int_part, frac_part) = rounded.div_rem(&scale);
        let mut text = String::new();
        if self.is_negative() && !rounded.is_zero() {
            text.push('-');
        }
        text.push_str(&int_part.to_string());
        if digits > 0 {
            let frac = format!("{:0>width$}", frac_part.to_string(), width = digits);
            let frac = frac.trim_end_matches('0');
            if !frac.is_empty() {
                text.push('.');
                text.push_str(frac);
            }
        }
        Decimal { text, exact }
    }

    /// Lossy conversion for display and plotting only.
    pub fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(&self.0).unwrap_or(f64::NAN)
    }
}

/// A decimal rendering of a rational together with whether it is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decimal {
    pub text: String,
    pub exact: bool,
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exact {
            f.write_str(&self.text)
        } else {
            write!(f, "~{}", self.text)
        }
    }
}

/// Mediant `(n1 + n2) / (d1 + d2)` of two explicit fraction representations.
///
/// The result depends on the representations, not only on the values:
/// `2/4 (+) 1/3 = 3/7` while `1/2 (+) 1/3 = 2/5`.
pub fn mediant(a: (&BigInt, &BigInt), b: (&BigInt, &BigInt)) -> Result<Rational> {
    let (n1, d1) = a;
    let (n2, d2) = b;
    if !d1.is_positive() || !d2.is_positive() {
        return Err(Error::NonPositiveDenominator);
    }
    Rational::new(n1 + n2, d1 + d2)
}

/// Largest decimal exponent accepted by [`parse_rational`].
const MAX_EXPONENT: i64 = 10_000;

/// Parses `"num/den"`, an integer, or a finite decimal literal such as `"0.45"`
/// or `"2.5e-3"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let trimmed = text.trim();
    let fail = |reason| Error::Parse {
        input: text.to_string(),
        reason,
    };
    if trimmed.is_empty() {
        return Err(fail("empty input"));
    }

    if let Some((num, den)) = trimmed.split_once('/') {
        let num = parse_integer(num.trim()).ok_or_else(|| fail("malformed numerator"))?;
        let den = parse_integer(den.trim()).ok_or_else(|| fail("malformed denominator"))?;
        return Rational::new(num, den);
    }

    let (mantissa, exponent) = match trimmed.find(['e', 'E']) {
        Some(pos) => {
            let exp: i64 = trimmed[pos + 1..].parse().map_err(|_| fail("malformed exponent"))?;
            if exp.abs() > MAX_EXPONENT {
                return Err(fail("exponent out of range"));
            }
            (&trimmed[..pos], exp)
        }
        None => (trimmed, 0),
    };

    let (negative, unsigned) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_digits, frac_digits) = unsigned.split_once('.').unwrap_or((unsigned, ""));
    let all_digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
    if int_digits.is_empty() && frac_digits.is_empty() {
        return Err(fail("no digits"));
    }
    if !all_digits(int_digits) || !all_digits(frac_digits) {
        return Err(fail("unexpected character"));
    }

    let digits = format!("{int_digits}{frac_digits}");
    let mut numer: BigInt = digits.parse().map_err(|_| fail("no digits"))?;
    if negative {
        numer = -numer;
    }
    let shift = exponent - frac_digits.len() as i64;
    let ten = BigInt::from(10u32);
    let magnitude = ten.pow(shift.unsigned_abs() as u32);
    if shift >= 0 {
        Ok(Rational::from_integer(numer * magnitude))
    } else {
        Rational::new(numer, magnitude)
    }
}

fn parse_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    text.parse().ok()
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(&self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(self.0, rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($trait::$method(self.0, &rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($trait::$method(&self.0, rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Division panics on a zero divisor, like the integer types; use `checked_div`
// where the divisor may vanish.
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Sum<Rational> for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Self {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

/// A rational or `+inf`, which sits above every rational.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum ExtendedRational {
    Finite(Rational),
    PosInfinity,
}

impl ExtendedRational {
    pub fn is_finite(&self) -> bool {
        matches!(self, ExtendedRational::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtendedRational::Finite(value) => Some(value),
            ExtendedRational::PosInfinity => None,
        }
    }
}

impl Ord for ExtendedRational {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedRational::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), PosInfinity) => Ordering::Less,
            (PosInfinity, Finite(_)) => Ordering::Greater,
            (PosInfinity, PosInfinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ExtendedRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl PartialEq<Rational> for ExtendedRational {
    fn eq(&self, other: &Rational) -> bool {
        self.finite() == Some(other)
    }
}

impl PartialOrd<Rational> for ExtendedRational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(match self {
            ExtendedRational::Finite(value) => value.cmp(other),
            ExtendedRational::PosInfinity => Ordering::Greater,
        })
    }
}

impl From<Rational> for ExtendedRational {
    fn from(value: Rational) -> Self {
        ExtendedRational::Finite(value)
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedRational::Finite(value) => fmt::Display::fmt(value, f),
            ExtendedRational::PosInfinity => f.write_str("inf"),
        }
    }
}

impl fmt::Debug for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExtendedRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "+inf" => Ok(ExtendedRational::PosInfinity),
            other => parse_rational(other).map(ExtendedRational::Finite),
        }
    }
}

impl Serialize for ExtendedRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
