//! Exact real values of the form `q` or `sign * sqrt(q)` with rational `q`,
//! and their decimal renderings.
//!
//! Standardized moments `m_k / sigma^k` are rational for even `k` but involve
//! a square root for odd `k`. Keeping the square and the sign keeps the whole
//! moment pipeline exact; decimals are derived only for display and fitting.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactValue {
    Rational(BigRational),
    /// `sign(square_signed) * sqrt(|square_signed|)`: the magnitude squared,
    /// carrying the sign of the value.
    SignedSqrt(BigRational),
}

impl ExactValue {
    pub fn zero() -> Self {
        ExactValue::Rational(BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ExactValue::Rational(q) | ExactValue::SignedSqrt(q) => q.is_zero(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            ExactValue::Rational(q) | ExactValue::SignedSqrt(q) => q.is_negative(),
        }
    }

    /// Signed square of the value: `sign(v) * v^2`.
    pub fn signed_square(&self) -> BigRational {
        match self {
            ExactValue::Rational(q) => q * q.abs(),
            ExactValue::SignedSqrt(q) => q.clone(),
        }
    }

    /// Divide by a positive rational.
    pub fn div_positive(&self, d: &BigRational) -> Self {
        assert!(d.is_positive(), "divisor must be positive");
        match self {
            ExactValue::Rational(q) => ExactValue::Rational(q / d),
            ExactValue::SignedSqrt(q) => ExactValue::SignedSqrt(q / (d * d)),
        }
    }

    /// Exact comparison of `|v|` against a non-negative rational bound.
    pub fn abs_cmp(&self, bound: &BigRational) -> Ordering {
        match self {
            ExactValue::Rational(q) => q.abs().cmp(bound),
            ExactValue::SignedSqrt(q) => q.abs().cmp(&(bound * bound)),
        }
    }

    /// Decimal rendering with `digits` fractional digits, truncated toward zero.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(digits as u32);
        let (negative, scaled) = match self {
            ExactValue::Rational(q) => {
                let a = q.abs();
                (q.is_negative(), (a.numer() * &scale) / a.denom())
            }
            ExactValue::SignedSqrt(q) => {
                let a = q.abs();
                // floor(sqrt(floor(x))) == floor(sqrt(x)) for x >= 0
                let inner = (a.numer() * &scale * &scale) / a.denom();
                (q.is_negative(), inner.sqrt())
            }
        };
        render_scaled(negative, &scaled, digits)
    }

    pub fn to_f64(&self) -> f64 {
        let r = rational_to_f64(match self {
            ExactValue::Rational(q) | ExactValue::SignedSqrt(q) => q,
        });
        match self {
            ExactValue::Rational(_) => r,
            ExactValue::SignedSqrt(_) => r.signum() * r.abs().sqrt(),
        }
    }
}

impl fmt::Display for ExactValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactValue::Rational(q) => write!(f, "{q}"),
            ExactValue::SignedSqrt(q) if q.is_negative() => write!(f, "-sqrt({})", -q),
            ExactValue::SignedSqrt(q) => write!(f, "sqrt({q})"),
        }
    }
}

/// Decimal rendering of a rational, truncated toward zero.
pub fn rational_to_decimal(q: &BigRational, digits: usize) -> String {
    ExactValue::Rational(q.clone()).to_decimal(digits)
}

fn render_scaled(negative: bool, scaled: &BigInt, digits: usize) -> String {
    let mut s = scaled.to_string();
    if s.len() <= digits {
        s = format!("{}{}", "0".repeat(digits + 1 - s.len()), s);
    }
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{frac}")
    }
}

/// Nearest-ish `f64` of a big rational, robust to numerators and denominators
/// far outside the `f64` range.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let sign = if q.numer().sign() == Sign::Minus {
        -1.0
    } else {
        1.0
    };
    let n = q.numer().abs();
    let d = q.denom().clone();
    let shift = n.bits() as i64 - d.bits() as i64 - 60;
    let scaled = if shift > 0 {
        n / (d << shift as usize)
    } else {
        (n << (-shift) as usize) / d
    };
    let mantissa: f64 = scaled.to_string().parse().unwrap_or(f64::NAN);
    sign * mantissa * 2f64.powi(shift as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rational_decimals() {
        assert_eq!(rational_to_decimal(&r(1, 3), 5), "0.33333");
        assert_eq!(rational_to_decimal(&r(-2, 3), 3), "-0.666");
        assert_eq!(rational_to_decimal(&r(9, 5), 3), "1.800");
        assert_eq!(rational_to_decimal(&r(27, 7), 0), "3");
        assert_eq!(rational_to_decimal(&r(1, 1000), 2), "0.00");
    }

    #[test]
    fn sqrt_decimals() {
        assert_eq!(ExactValue::SignedSqrt(r(2, 1)).to_decimal(6), "1.414213");
        assert_eq!(ExactValue::SignedSqrt(r(-1, 4)).to_decimal(3), "-0.500");
        assert_eq!(ExactValue::SignedSqrt(r(0, 1)).to_decimal(2), "0.00");
    }

    #[test]
    fn division_and_comparison() {
        let v = ExactValue::SignedSqrt(r(-9, 1)).div_positive(&r(3, 1));
        assert_eq!(v, ExactValue::SignedSqrt(r(-1, 1)));
        assert_eq!(v.abs_cmp(&r(1, 1)), Ordering::Equal);
        assert_eq!(
            ExactValue::Rational(r(1, 2000)).abs_cmp(&r(1, 1000)),
            Ordering::Less
        );
        assert_eq!(v.signed_square(), r(-1, 1));
        assert_eq!(ExactValue::Rational(r(-3, 2)).signed_square(), r(-9, 4));
    }

    #[test]
    fn float_conversion() {
        assert!((rational_to_f64(&r(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
        let huge = BigRational::new(BigInt::from(10).pow(400), BigInt::from(10).pow(399) * 7);
        assert!((rational_to_f64(&huge) - 10.0 / 7.0).abs() < 1e-14);
        assert!((ExactValue::SignedSqrt(r(-2, 1)).to_f64() + 2f64.sqrt()).abs() < 1e-15);
    }
}
