//! Exact values and their decimal rendering.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{HfeError, Result};

pub fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

pub fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Renders `value` with `precision` fractional digits, rounding half to even.
pub fn render_decimal(value: &BigRational, precision: usize) -> String {
    let scale: BigInt = Pow::pow(&BigInt::from(10), precision);
    let scaled = value.abs() * BigRational::from_integer(scale.clone());
    let (quotient, remainder) = scaled.numer().div_mod_floor(scaled.denom());
    let twice: BigInt = remainder * BigInt::from(2);
    let rounded = match twice.cmp(scaled.denom()) {
        std::cmp::Ordering::Less => quotient,
        std::cmp::Ordering::Greater => quotient + 1,
        std::cmp::Ordering::Equal if quotient.is_even() => quotient,
        std::cmp::Ordering::Equal => quotient + 1,
    };
    let sign = if value.is_negative() && !rounded.is_zero() {
        "-"
    } else {
        ""
    };
    if precision == 0 {
        return format!("{sign}{rounded}");
    }
    let digits = format!("{:0>width$}", rounded.to_string(), width = precision + 1);
    let (int_part, frac_part) = digits.split_at(digits.len() - precision);
    format!("{sign}{int_part}.{frac_part}")
}

/// JSON form of an exact value: numerator and denominator as decimal strings
/// plus a rounded rendering for display.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactJson {
    pub num: String,
    pub den: String,
    pub decimal: String,
}

impl ExactJson {
    pub fn new(value: &BigRational, precision: usize) -> Self {
        ExactJson {
            num: value.numer().to_string(),
            den: value.denom().to_string(),
            decimal: render_decimal(value, precision),
        }
    }

    pub fn value(&self) -> Result<BigRational> {
        let num: BigInt = self
            .num
            .parse()
            .map_err(|_| HfeError::parse(&self.num, "bad numerator"))?;
        let den: BigInt = self
            .den
            .parse()
            .map_err(|_| HfeError::parse(&self.den, "bad denominator"))?;
        if den.is_zero() {
            return Err(HfeError::parse(&self.den, "zero denominator"));
        }
        Ok(BigRational::new(num, den))
    }
}
