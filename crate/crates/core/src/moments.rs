//! Exact moments of a statistic from its counting polynomial.
//!
//! A polynomial `F(t) = sum c_k t^k` with non-negative coefficients is read as
//! the distribution `P(X = k) = c_k / F(1)`. Raw moments are
//! `E[X^j] = (theta^j F)(1) / F(1)` with `theta = t d/dt`; central moments
//! follow by the binomial transform.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{binomial, factorial, ExactValue, IntPoly};

/// Working precision for decimal renderings stored in reports.
pub const DEFAULT_DECIMAL_DIGITS: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MomentError {
    #[error("the zero polynomial is not a distribution")]
    ZeroPolynomial,
    #[error("maximum moment order must be at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("polynomial has a negative coefficient")]
    NegativeCoefficient,
}

/// `m_k / sigma^k`, exact and rendered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StdMoment {
    pub order: usize,
    /// Rational for even `k`; a signed square root for odd `k`.
    pub exact: ExactValue,
    pub decimal: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentReport {
    /// Endpoint parameter, when the report belongs to a walk family `W_{n,n}`.
    pub n: Option<u64>,
    pub mass: BigInt,
    pub mean: BigRational,
    pub variance: BigRational,
    /// Orders `3..=M`; empty when the distribution is degenerate.
    pub std_moments: Vec<StdMoment>,
    /// Variance is zero, so standardized moments are undefined.
    pub degenerate: bool,
}

impl MomentReport {
    pub fn with_n(mut self, n: u64) -> Self {
        self.n = Some(n);
        self
    }

    pub fn std_moment(&self, k: usize) -> Option<&StdMoment> {
        self.std_moments.iter().find(|m| m.order == k)
    }
}

pub fn moment_report(f: &IntPoly, max_moment: usize) -> Result<MomentReport, MomentError> {
    moment_report_with_digits(f, max_moment, DEFAULT_DECIMAL_DIGITS)
}

pub fn moment_report_with_digits(
    f: &IntPoly,
    max_moment: usize,
    digits: usize,
) -> Result<MomentReport, MomentError> {
    if max_moment < 2 {
        return Err(MomentError::OrderTooSmall(max_moment));
    }
    if f.is_zero() {
        return Err(MomentError::ZeroPolynomial);
    }
    if f.coeffs().iter().any(|c| c.is_negative()) {
        return Err(MomentError::NegativeCoefficient);
    }
    let mass = f.sum();
    let mass_q = BigRational::from_integer(mass.clone());

    // raw[j] = E[X^j]
    let mut raw = Vec::with_capacity(max_moment + 1);
    let mut g = f.clone();
    for j in 0..=max_moment {
        if j > 0 {
            g = g.theta();
        }
        raw.push(BigRational::from_integer(g.sum()) / &mass_q);
    }
    let mean = raw[1].clone();
    let central = |k: usize| -> BigRational {
        let neg_mean = -mean.clone();
        (0..=k).fold(BigRational::zero(), |acc, j| {
            let c = BigRational::from_integer(binomial(k as u64, j as u64));
            acc + c * &raw[j] * pow(&neg_mean, k - j)
        })
    };
    let variance = central(2);
    let degenerate = variance.is_zero();
    let std_moments = if degenerate {
        Vec::new()
    } else {
        (3..=max_moment)
            .map(|k| {
                let m = central(k);
                let exact = if k % 2 == 0 {
                    ExactValue::Rational(m / pow(&variance, k / 2))
                } else {
                    let sign = if m.is_negative() {
                        -BigRational::one()
                    } else {
                        BigRational::one()
                    };
                    ExactValue::SignedSqrt(sign * &m * &m / pow(&variance, k))
                };
                let decimal = exact.to_decimal(digits);
                StdMoment {
                    order: k,
                    exact,
                    decimal,
                }
            })
            .collect()
    };
    Ok(MomentReport {
        n: None,
        mass,
        mean,
        variance,
        std_moments,
        degenerate,
    })
}

fn pow(q: &BigRational, k: usize) -> BigRational {
    (0..k).fold(BigRational::one(), |acc, _| acc * q)
}

/// Closed forms for the mean and variance of the break-even count over walks
/// to `(n, n)` with unit steps:
///
/// `mean = (4^n (n!)^2 - (2n)!) / (2n)!`
///
/// `var = -(16^n (n!)^4 + 4^n (n!)^2 (2n)! - 4n ((2n)!)^2 - 2 ((2n)!)^2) / ((2n)!)^2`
pub fn a2_moment_check(n: u64) -> (BigRational, BigRational) {
    let nf = factorial(n);
    let f2n = factorial(2 * n);
    let four_n = BigInt::from(4u32).pow(n as u32);
    let sixteen_n = BigInt::from(16u32).pow(n as u32);
    let nf2 = &nf * &nf;
    let mean = BigRational::new(&four_n * &nf2 - &f2n, f2n.clone());
    let f2n_sq = &f2n * &f2n;
    let numer = &sixteen_n * &nf2 * &nf2 + &four_n * &nf2 * &f2n
        - BigInt::from(4 * n) * &f2n_sq
        - BigInt::from(2u32) * &f2n_sq;
    let variance = BigRational::new(-numer, f2n_sq);
    (mean, variance)
}
