//! Exact arithmetic: polynomials in `t`, truncated series in `z`, and exact
//! real values for standardized moments.
//!
//! Integers and rationals come from `num-bigint` / `num-rational`; the
//! rationals are always kept in lowest terms with a positive denominator.

mod exact;
mod poly;
mod series;

pub use exact::{rational_to_decimal, rational_to_f64, ExactValue};
pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
pub use poly::{IntPoly, Poly, RatPoly, Ring};
pub use series::{SeriesError, TruncatedSeries};

/// `n!` as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1u32), |acc, k| acc * k)
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0u32);
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}
