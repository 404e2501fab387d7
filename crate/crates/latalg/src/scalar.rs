//! Scalar abstraction shared by every coordinate lattice in the crate.
//!
//! [`Scalar`] covers exactly the operations the lattice/convolution layer
//! needs: ring arithmetic, a total sign decomposition, and order comparison.
//! It is implemented for `f32`, `f64`, and [`num_rational::BigRational`];
//! exact checks use the rational instantiation, float checks use `f64`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, Signed, ToPrimitive};
use std::fmt;

/// Parse failure for exact scalar strings.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {input:?} as a scalar: {reason}")]
pub struct ScalarParseError {
    pub input: String,
    pub reason: String,
}

impl ScalarParseError {
    fn new(input: &str, reason: impl Into<String>) -> Self {
        ScalarParseError {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

/// Ordered scalar with exact sign arithmetic.
///
/// `abs`, `max`, and `min` come from the coordinatewise lattice structure of
/// the ambient field; `to_report_string` / `parse_exact` fix the lossless
/// wire format used by witnesses and reports (`p/q` for rationals, 17
/// significant digits for floats).
pub trait Scalar:
    Num + Signed + PartialOrd + Clone + fmt::Debug + fmt::Display + ToPrimitive + 'static
{
    /// Coordinate supremum of two scalars.
    fn max_of(a: &Self, b: &Self) -> Self {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    /// Coordinate infimum of two scalars.
    fn min_of(a: &Self, b: &Self) -> Self {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    /// Scalar from a small signed integer.
    fn from_int(n: i64) -> Self;

    /// Lossless textual form for reports and witnesses.
    fn to_report_string(&self) -> String;

    /// Inverse of [`Scalar::to_report_string`]; also accepts plain decimal
    /// strings such as `"3.25"` or `"-2"`.
    fn parse_exact(s: &str) -> Result<Self, ScalarParseError>;
}

impl Scalar for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }

    fn to_report_string(&self) -> String {
        format!("{:.16e}", self)
    }

    fn parse_exact(s: &str) -> Result<Self, ScalarParseError> {
        s.trim()
            .parse::<f64>()
            .map_err(|e| ScalarParseError::new(s, e.to_string()))
    }
}

impl Scalar for f32 {
    fn from_int(n: i64) -> Self {
        n as f32
    }

    fn to_report_string(&self) -> String {
        format!("{:.8e}", self)
    }

    fn parse_exact(s: &str) -> Result<Self, ScalarParseError> {
        s.trim()
            .parse::<f32>()
            .map_err(|e| ScalarParseError::new(s, e.to_string()))
    }
}

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn to_report_string(&self) -> String {
        // Display is already canonical: "p" for integers, "p/q" otherwise.
        self.to_string()
    }

    fn parse_exact(s: &str) -> Result<Self, ScalarParseError> {
        parse_rational(s)
    }
}

/// Parse an exact rational from `"p/q"`, an integer string, or a finite
/// decimal expansion such as `"-3.25"`.
pub fn parse_rational(s: &str) -> Result<BigRational, ScalarParseError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ScalarParseError::new(s, "empty string"));
    }
    if let Some((num, den)) = t.split_once('/') {
        let n = num
            .trim()
            .parse::<BigInt>()
            .map_err(|e| ScalarParseError::new(s, format!("bad numerator: {e}")))?;
        let d = den
            .trim()
            .parse::<BigInt>()
            .map_err(|e| ScalarParseError::new(s, format!("bad denominator: {e}")))?;
        if d == BigInt::from(0) {
            return Err(ScalarParseError::new(s, "zero denominator"));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = t.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(ScalarParseError::new(s, "bad decimal fraction"));
        }
        let negative = int_part.trim_start().starts_with('-');
        let int = if int_part == "-" || int_part.is_empty() {
            BigInt::from(0)
        } else {
            int_part
                .parse::<BigInt>()
                .map_err(|e| ScalarParseError::new(s, format!("bad integer part: {e}")))?
        };
        let scale = BigInt::from(10).pow(frac_part.len() as u32);
        let frac = frac_part
            .parse::<BigInt>()
            .map_err(|e| ScalarParseError::new(s, format!("bad fraction part: {e}")))?;
        let unsigned = int.magnitude().clone() * scale.magnitude() + frac.magnitude();
        let mut value = BigRational::new(BigInt::from(unsigned), scale);
        if negative {
            value = -value;
        }
        return Ok(value);
    }
    t.parse::<BigInt>()
        .map(BigRational::from_integer)
        .map_err(|e| ScalarParseError::new(s, e.to_string()))
}

/// Shorthand for an exact rational `n/d` built from machine integers.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_integers_and_decimals() {
        assert_eq!(parse_rational("1/2").unwrap(), ratio(1, 2));
        assert_eq!(parse_rational("-7").unwrap(), ratio(-7, 1));
        assert_eq!(parse_rational("3.25").unwrap(), ratio(13, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational(" 0.125 ").unwrap(), ratio(1, 8));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a.b").is_err());
        assert!(parse_rational("1.2.3").is_err());
    }

    #[test]
    fn report_string_round_trips() {
        let x = ratio(-13, 4);
        assert_eq!(x.to_report_string(), "-13/4");
        assert_eq!(BigRational::parse_exact("-13/4").unwrap(), x);

        let f = 0.1f64 + 0.2f64;
        let s = f.to_report_string();
        assert_eq!(f64::parse_exact(&s).unwrap(), f);
    }

    #[test]
    fn decimal_negative_fraction_below_one() {
        // Sign must survive a zero integer part.
        assert_eq!(parse_rational("-0.25").unwrap(), ratio(-1, 4));
    }
}
