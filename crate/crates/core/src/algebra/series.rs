//! Power series in `z` truncated at a fixed order, with coefficients that are
//! polynomials in `t` over the rationals.
//!
//! A series of order `N` is exact modulo `z^{N+1}`. Binary operations on
//! series of different orders truncate to the smaller order.

use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use super::poly::{IntPoly, RatPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("star requires a zero constant term")]
    NonzeroConstantTerm,
    #[error("square root requires constant term 1")]
    BadConstantTerm,
    #[error("reciprocal requires a nonzero constant term")]
    ZeroConstantTerm,
    /// The `z^0` coefficient depends on `t`, so the result would not have
    /// polynomial coefficients.
    #[error("z^0 coefficient must be a scalar, got a polynomial in t")]
    NonScalarConstantTerm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<RatPoly>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            order,
            coeffs: vec![RatPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, RatPoly::one())
    }

    /// A series whose only term is `c(t) z^0`.
    pub fn constant(order: usize, c: RatPoly) -> Self {
        Self::monomial(order, 0, c)
    }

    /// `c(t) z^power`, which is zero when `power > order`.
    pub fn monomial(order: usize, power: usize, c: RatPoly) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// The series `z`.
    pub fn z(order: usize) -> Self {
        Self::monomial(order, 1, RatPoly::one())
    }

    /// The series `z t`.
    pub fn zt(order: usize) -> Self {
        Self::monomial(order, 1, RatPoly::monomial(BigRational::one(), 1))
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// extra ones are dropped.
    pub fn from_coeffs(order: usize, coeffs: impl IntoIterator<Item = RatPoly>) -> Self {
        let mut coeffs: Vec<RatPoly> = coeffs.into_iter().take(order + 1).collect();
        coeffs.resize(order + 1, RatPoly::zero());
        TruncatedSeries { order, coeffs }
    }

    pub fn from_int_coeffs(order: usize, coeffs: impl IntoIterator<Item = IntPoly>) -> Self {
        Self::from_coeffs(order, coeffs.into_iter().map(|p| p.to_rational()))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[RatPoly] {
        &self.coeffs
    }

    /// Coefficient of `z^k`; panics if `k` exceeds the order.
    pub fn coeff(&self, k: usize) -> &RatPoly {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order.min(self.order), self.coeffs.iter().cloned())
    }

    /// Multiply every coefficient by a polynomial in `t`.
    pub fn scale(&self, c: &RatPoly) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| p * c).collect(),
        }
    }

    /// Substitute a scalar for `t`, e.g. `F(z, 1)`.
    pub fn eval_t(&self, t: &BigRational) -> Self {
        TruncatedSeries {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .map(|p| RatPoly::constant(p.eval(t)))
                .collect(),
        }
    }

    fn scalar_constant(&self) -> Result<BigRational, SeriesError> {
        let c0 = &self.coeffs[0];
        if !c0.is_constant() {
            return Err(SeriesError::NonScalarConstantTerm);
        }
        Ok(c0.coeff(0))
    }

    /// `1 / F` by coefficient recursion:
    /// `R_0 = 1/c`, `R_k = -(1/c) * sum_{i=1..k} F_i R_{k-i}`.
    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let c = self.scalar_constant()?;
        if c.is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv = RatPoly::constant(c.recip());
        let neg_inv = RatPoly::constant(-c.recip());
        let mut out: Vec<RatPoly> = Vec::with_capacity(self.order + 1);
        out.push(inv);
        for k in 1..=self.order {
            let mut acc = RatPoly::zero();
            for i in 1..=k {
                if !self.coeffs[i].is_zero() {
                    acc = &acc + &(&self.coeffs[i] * &out[k - i]);
                }
            }
            out.push(&acc * &neg_inv);
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: out,
        })
    }

    /// Kleene star `F* = 1 + F + F^2 + ... = 1/(1 - F)`.
    pub fn star(&self) -> Result<Self, SeriesError> {
        let c = self.scalar_constant()?;
        if !c.is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        (&Self::one(self.order) - self).reciprocal()
    }

    /// The square root with constant term 1:
    /// `G_0 = 1`, `G_k = (F_k - sum_{i=1..k-1} G_i G_{k-i}) / 2`.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        let c = self.scalar_constant()?;
        if !c.is_one() {
            return Err(SeriesError::BadConstantTerm);
        }
        let half = RatPoly::constant(BigRational::new(1.into(), 2.into()));
        let mut out: Vec<RatPoly> = Vec::with_capacity(self.order + 1);
        out.push(RatPoly::one());
        for k in 1..=self.order {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc = &acc - &(&out[i] * &out[k - i]);
            }
            out.push(&acc * &half);
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: out,
        })
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        TruncatedSeries {
            order,
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        TruncatedSeries {
            order,
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] - &rhs.coeffs[k])
                .collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            order: self.order,
            coeffs: self.coeffs.iter().map(|p| -p).collect(),
        }
    }
}

/// Cauchy product truncated at the smaller order.
impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(rhs.order);
        let mut coeffs = vec![RatPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        TruncatedSeries { order, coeffs }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for TruncatedSeries {
            type Output = TruncatedSeries;
            fn $m(self, rhs: TruncatedSeries) -> TruncatedSeries {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);
