//! Exact membership grades.
//!
//! A [`Grade`] is a rational number in `[0, 1]`. Decimal literals are parsed
//! from their text, so `0.1` is exactly `1/10`. Every order predicate in the
//! crate relies on exact equality of grades.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, One, Pow, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{HfeError, Result};

/// A membership degree in `[0, 1]`, stored as a reduced `i64` fraction.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(Ratio<i64>);

impl Grade {
    pub const ZERO: Grade = Grade(Ratio::new_raw(0, 1));
    pub const ONE: Grade = Grade(Ratio::new_raw(1, 1));

    /// Builds `numer / denom`, rejecting values outside `[0, 1]`.
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(HfeError::parse(
                format!("{numer}/{denom}"),
                "zero denominator",
            ));
        }
        Self::from_ratio(Ratio::new(numer, denom))
    }

    pub fn from_ratio(value: Ratio<i64>) -> Result<Self> {
        if value < Ratio::zero() || value > Ratio::one() {
            return Err(HfeError::Range(value.to_string()));
        }
        Ok(Grade(value))
    }

    /// Converts an exact rational, failing if it does not fit an `i64` fraction.
    pub fn from_big(value: &BigRational) -> Result<Self> {
        let numer = value.numer().to_i64();
        let denom = value.denom().to_i64();
        match (numer, denom) {
            (Some(n), Some(d)) => Self::from_ratio(Ratio::new(n, d)),
            _ => Err(HfeError::parse(
                value.to_string(),
                "fraction does not fit in 64 bits",
            )),
        }
    }

    pub fn ratio(&self) -> Ratio<i64> {
        self.0
    }

    pub fn to_big(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.0.numer()), BigInt::from(*self.0.denom()))
    }

    pub fn to_f64(&self) -> f64 {
        *self.0.numer() as f64 / *self.0.denom() as f64
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// `1 - a`.
    pub fn complement(&self) -> Grade {
        let d = *self.0.denom();
        Grade(Ratio::new_raw(d - *self.0.numer(), d))
    }

    /// `(a + b) / 2`, or `None` when the exact result overflows.
    pub fn midpoint(&self, other: &Grade) -> Option<Grade> {
        let sum = self.0.checked_add(&other.0)?;
        let half = sum.checked_div(&Ratio::from_integer(2))?;
        Some(Grade(half))
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match terminating_decimal(*self.0.numer(), *self.0.denom()) {
            Some(text) => f.write_str(&text),
            None => write!(f, "{}/{}", self.0.numer(), self.0.denom()),
        }
    }
}

impl fmt::Debug for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Exact decimal text for fractions whose denominator is `2^a 5^b`.
fn terminating_decimal(numer: i64, denom: i64) -> Option<String> {
    let mut rest = denom;
    let (mut twos, mut fives) = (0u32, 0u32);
    while rest % 2 == 0 {
        rest /= 2;
        twos += 1;
    }
    while rest % 5 == 0 {
        rest /= 5;
        fives += 1;
    }
    if rest != 1 {
        return None;
    }
    let places = twos.max(fives);
    let scaled = i128::from(numer).checked_mul(10i128.checked_pow(places)?)? / i128::from(denom);
    if places == 0 {
        return Some(scaled.to_string());
    }
    let digits = format!("{:0>width$}", scaled, width = places as usize + 1);
    let (int_part, frac_part) = digits.split_at(digits.len() - places as usize);
    Some(format!("{int_part}.{frac_part}"))
}

impl FromStr for Grade {
    type Err = HfeError;

    /// Accepts decimal literals (`0.25`, `.5`, `1e-1`) and fractions (`1/3`).
    fn from_str(s: &str) -> Result<Self> {
        let text = s.trim();
        if let Some((n, d)) = text.split_once('/') {
            let numer: i64 = n
                .trim()
                .parse()
                .map_err(|_| HfeError::parse(s, "bad numerator"))?;
            let denom: i64 = d
                .trim()
                .parse()
                .map_err(|_| HfeError::parse(s, "bad denominator"))?;
            return Grade::new(numer, denom);
        }
        let value = parse_decimal(text)?;
        if value.is_negative() || value > BigRational::one() {
            return Err(HfeError::Range(text.to_string()));
        }
        Grade::from_big(&value)
    }
}

/// Parses a JSON-style decimal literal into an exact rational.
pub(crate) fn parse_decimal(text: &str) -> Result<BigRational> {
    let bad = |reason: &str| HfeError::parse(text, reason);
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => {
            let exp: i32 = text[pos + 1..].parse().map_err(|_| bad("bad exponent"))?;
            (&text[..pos], exp)
        }
        None => (text, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad("no digits"));
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(bad("not a decimal number"));
    }
    if exponent.unsigned_abs() > 400 || int_part.len() + frac_part.len() > 400 {
        return Err(bad("literal too long"));
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = all_digits
        .parse()
        .map_err(|_| bad("not a decimal number"))?;
    if negative {
        numer = -numer;
    }
    let shift = exponent - frac_part.len() as i32;
    let ten = BigInt::from(10);
    let value = if shift >= 0 {
        BigRational::from_integer(numer * Pow::pow(&ten, shift as u32))
    } else {
        BigRational::new(numer, Pow::pow(&ten, shift.unsigned_abs()))
    };
    Ok(value)
}

impl Serialize for Grade {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Grade {
    /// Reads a JSON number from its literal text, or a string holding a decimal or fraction.
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error;
        let value = serde_json::Value::deserialize(deserializer)?;
        let text = match &value {
            serde_json::Value::Number(n) => n.to_string(),
            serde_json::Value::String(s) => s.clone(),
            other => return Err(D::Error::custom(format!("expected a grade, found {other}"))),
        };
        text.parse().map_err(D::Error::custom)
    }
}
