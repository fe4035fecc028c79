//! Exact closed-form results used as independent oracles: the discrete
//! arcsine counts, the Chung–Feller polynomial and its generating function,
//! the break-even generating function, and the forward King walk system.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::algebra::{binomial, IntPoly, RatPoly, SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClosedFormError {
    #[error("k = {k} is outside 0..={n}")]
    OutOfRange { n: u64, k: u64 },
    #[error("truncation order {order} is below the requested coefficient {n}")]
    OrderTooSmall { n: usize, order: usize },
    #[error("coefficient of z^{0} is not an integer polynomial")]
    NonIntegral(usize),
    #[error("King system coefficient at z^{0} changed after it should have stabilized")]
    NonConvergence(usize),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Number of walks of length `2n` with unit steps that have `2k` losing
/// times: `C(2k, k) C(2n-2k, n-k)`.
pub fn arcsine_count(n: u64, k: u64) -> Result<BigInt, ClosedFormError> {
    if k > n {
        return Err(ClosedFormError::OutOfRange { n, k });
    }
    Ok(binomial(2 * k, k) * binomial(2 * (n - k), n - k))
}

/// Counts for `k = 0..=n`.
pub fn arcsine_counts(n: u64) -> Vec<BigInt> {
    (0..=n)
        .map(|k| arcsine_count(n, k).expect("k in range"))
        .collect()
}

/// `C(2n, n) / (n + 1)`
pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n, n) / (n + 1)
}

/// `Catalan(n) * (1 + t^2 + t^4 + ... + t^{2n})`: every even losing count is
/// equally likely over walks to `(n, n)`.
pub fn chung_feller_poly(n: u64) -> IntPoly {
    let c = catalan(n);
    let mut coeffs = vec![BigInt::from(0u32); 2 * n as usize + 1];
    for k in 0..=n as usize {
        coeffs[2 * k] = c.clone();
    }
    IntPoly::from_coeffs(coeffs)
}

fn check_order(n: usize, order: usize) -> Result<(), ClosedFormError> {
    if order < n {
        Err(ClosedFormError::OrderTooSmall { n, order })
    } else {
        Ok(())
    }
}

fn integral_coeff(series: &TruncatedSeries, n: usize) -> Result<IntPoly, ClosedFormError> {
    series
        .coeff(n)
        .to_integer()
        .ok_or(ClosedFormError::NonIntegral(n))
}

fn t_pow(k: usize) -> RatPoly {
    RatPoly::monomial(BigRational::one(), k)
}

fn scalar(n: i64) -> RatPoly {
    RatPoly::constant(BigRational::from_integer(n.into()))
}

/// `sum_{n} z^n sum_{w to (n,n)} t^{a1(w)} = 2 / (sqrt(1 - 4z) + sqrt(1 - 4z t^2))`,
/// evaluated as a truncated series.
pub fn chung_feller_gf(order: usize) -> Result<TruncatedSeries, ClosedFormError> {
    let one = TruncatedSeries::one(order);
    let four_z = TruncatedSeries::monomial(order, 1, scalar(4));
    let four_zt2 = TruncatedSeries::monomial(order, 1, &scalar(4) * &t_pow(2));
    let denom = &(&one - &four_z).sqrt()? + &(&one - &four_zt2).sqrt()?;
    Ok(denom.reciprocal()?.scale(&scalar(2)))
}

/// `[z^n]` of the Chung–Feller generating function.
pub fn chung_feller_gf_coeff(n: usize, order: usize) -> Result<IntPoly, ClosedFormError> {
    check_order(n, order)?;
    integral_coeff(&chung_feller_gf(order)?, n)
}

/// `sum_{n} z^n sum_{w to (n,n)} t^{a2(w)} = 1 / (t sqrt(1 - 4z) - t + 1)`.
pub fn a2_gf(order: usize) -> Result<TruncatedSeries, ClosedFormError> {
    let one = TruncatedSeries::one(order);
    let root = (&one - &TruncatedSeries::monomial(order, 1, scalar(4))).sqrt()?;
    let denom = &(&root.scale(&t_pow(1)) - &TruncatedSeries::constant(order, t_pow(1))) + &one;
    Ok(denom.reciprocal()?)
}

pub fn a2_gf_coeff(n: usize, order: usize) -> Result<IntPoly, ClosedFormError> {
    check_order(n, order)?;
    integral_coeff(&a2_gf(order)?, n)
}

/// Generating functions of forward King walks (steps right, up, diagonal)
/// by endpoint `(n, n)` in `z` and losing times in `t`.
///
/// - `negative` (`F_N`): walks strictly below the diagonal except at their
///   ends. Each is a right step, a nonpositive walk, and an up step, and
///   every point of it is losing: `F_N = z t^2 Phi`.
/// - `nonpositive` (`Phi`): walks in `y <= x`, marked by length in `t`;
///   they split into diagonal steps and negative walks:
///   `Phi = (zt)* (F_N (zt)*)*`.
/// - `positive` (`F_P`): mirror images of negative walks, never losing:
///   `F_P(z, t) = F_N(z, 1)`.
/// - `king` (`F_K`): `z* (F_N z* + F_P z*)*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KingSystem {
    pub order: usize,
    pub negative: TruncatedSeries,
    pub nonpositive: TruncatedSeries,
    pub positive: TruncatedSeries,
    pub king: TruncatedSeries,
}

impl KingSystem {
    /// Right-hand side of `F_N = z t^2 Phi`.
    pub fn negative_rhs(&self) -> TruncatedSeries {
        &TruncatedSeries::monomial(self.order, 1, t_pow(2)) * &self.nonpositive
    }

    /// Right-hand side of `Phi = (zt)* (F_N (zt)*)*`.
    pub fn nonpositive_rhs(&self) -> Result<TruncatedSeries, SeriesError> {
        nonpositive_from(&self.negative, self.order)
    }

    /// Right-hand side of `F_K = z* (F_N z* + F_P z*)*`.
    pub fn king_rhs(&self) -> Result<TruncatedSeries, SeriesError> {
        king_from(&self.negative, &self.positive, self.order)
    }
}

fn nonpositive_from(
    negative: &TruncatedSeries,
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    let diag = TruncatedSeries::zt(order).star()?;
    Ok(&diag * &(negative * &diag).star()?)
}

fn king_from(
    negative: &TruncatedSeries,
    positive: &TruncatedSeries,
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    let diag = TruncatedSeries::z(order).star()?;
    let excursion = &(negative * &diag) + &(positive * &diag);
    Ok(&diag * &excursion.star()?)
}

/// Solves the King system by fixed-point iteration from `F_N = 0`. Every
/// occurrence of `F_N` on the right carries a factor `z`, so each pass fixes
/// one more coefficient; `order + 1` passes reach the fixed point and one
/// extra pass confirms it.
pub fn solve_king_system(order: usize) -> Result<KingSystem, ClosedFormError> {
    let z_t2 = TruncatedSeries::monomial(order, 1, t_pow(2));
    let mut negative = TruncatedSeries::zero(order);
    let mut nonpositive = TruncatedSeries::one(order);
    for pass in 0..=order + 1 {
        nonpositive = nonpositive_from(&negative, order)?;
        let next = &z_t2 * &nonpositive;
        // after `pass` passes, coefficients up to z^pass are final
        if let Some(k) = (0..=pass.min(order)).find(|&k| next.coeff(k) != negative.coeff(k)) {
            return Err(ClosedFormError::NonConvergence(k));
        }
        negative = next;
    }
    let positive = negative.eval_t(&BigRational::one());
    let king = king_from(&negative, &positive, order)?;
    Ok(KingSystem {
        order,
        negative,
        nonpositive,
        positive,
        king,
    })
}
