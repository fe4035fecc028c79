//! Serializable records for results. Integers and rationals are carried as
//! decimal strings so that nothing passes through floating point.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{rational_to_decimal, ExactValue, IntPoly, TruncatedSeries};
use crate::asymptotics::{AsymptoticTheorem, Book, FittedConstant, Quantity};
use crate::moments::{MomentReport, StdMoment, DEFAULT_DECIMAL_DIGITS};
use crate::walk::GrandPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecordError {
    #[error("cannot parse {0:?} as an exact value")]
    BadNumber(String),
}

/// One command invocation: what was asked and what came back.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub result: ResultRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ResultRecord {
    /// Coefficients of `t^0, t^1, ...`.
    Polynomial {
        coefficients: Vec<String>,
    },
    Moments(MomentRecord),
    Book(BookRecord),
    /// `[z^k]` as a coefficient list in `t`, for `k = 0..=order`.
    Series {
        order: usize,
        coefficients: Vec<Vec<String>>,
    },
    /// Plain integer sequence.
    Counts {
        counts: Vec<String>,
    },
    Grand {
        total: String,
        terms: Vec<GrandTerm>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrandTerm {
    /// Exponents of `t1..t4`.
    pub exponents: [u32; 4],
    pub count: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MomentRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    pub mass: String,
    pub mean: String,
    pub variance: String,
    pub mean_decimal: String,
    pub variance_decimal: String,
    pub std_moments: Vec<StdMomentRecord>,
    pub degenerate: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StdMomentRecord {
    pub order: usize,
    /// `p/q` for even orders, `sqrt(p/q)` or `-sqrt(p/q)` for odd ones.
    pub exact: String,
    pub decimal: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BookRecord {
    pub steps: String,
    pub max_moment: usize,
    pub ranges: Vec<String>,
    pub precision: usize,
    pub theorems: Vec<TheoremRecord>,
    pub excluded: Vec<ExclusionRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremRecord {
    pub steps: String,
    pub safe: bool,
    pub constants: Vec<ConstantRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstantRecord {
    pub quantity: String,
    /// `n`, `n^2` or empty.
    pub ansatz: String,
    pub fits: Vec<FitRecord>,
    pub safe: Option<String>,
    pub display: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FitRecord {
    pub n: u64,
    pub exact: String,
    pub decimal: String,
    /// What the book shows for this range (odd moments near zero become 0).
    pub rendering: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExclusionRecord {
    pub steps: String,
    pub reason: String,
}

pub fn int_strings(p: &IntPoly) -> Vec<String> {
    p.to_decimal_strings()
}

pub fn polynomial(p: &IntPoly) -> ResultRecord {
    ResultRecord::Polynomial {
        coefficients: int_strings(p),
    }
}

pub fn counts<'a>(c: impl IntoIterator<Item = &'a BigInt>) -> ResultRecord {
    ResultRecord::Counts {
        counts: c.into_iter().map(|x| x.to_string()).collect(),
    }
}

/// Series with integral coefficients; non-integral rational coefficients are
/// written as `p/q`.
pub fn series(s: &TruncatedSeries) -> ResultRecord {
    let coefficients = s
        .coeffs()
        .iter()
        .map(|p| match p.to_integer() {
            Some(ip) => int_strings(&ip),
            None => p.coeffs().iter().map(|q| q.to_string()).collect(),
        })
        .collect();
    ResultRecord::Series {
        order: s.order(),
        coefficients,
    }
}

pub fn grand(g: &GrandPolynomial) -> ResultRecord {
    ResultRecord::Grand {
        total: g.total().to_string(),
        terms: g
            .terms()
            .iter()
            .map(|(e, c)| GrandTerm {
                exponents: *e,
                count: c.to_string(),
            })
            .collect(),
    }
}

impl From<&MomentReport> for MomentRecord {
    fn from(r: &MomentReport) -> Self {
        MomentRecord {
            n: r.n,
            mass: r.mass.to_string(),
            mean: r.mean.to_string(),
            variance: r.variance.to_string(),
            mean_decimal: rational_to_decimal(&r.mean, DEFAULT_DECIMAL_DIGITS),
            variance_decimal: rational_to_decimal(&r.variance, DEFAULT_DECIMAL_DIGITS),
            std_moments: r
                .std_moments
                .iter()
                .map(|m| StdMomentRecord {
                    order: m.order,
                    exact: m.exact.to_string(),
                    decimal: m.decimal.clone(),
                })
                .collect(),
            degenerate: r.degenerate,
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, RecordError> {
    s.parse().map_err(|_| RecordError::BadNumber(s.to_string()))
}

/// Inverse of `ExactValue`'s `Display`.
pub fn parse_exact(s: &str) -> Result<ExactValue, RecordError> {
    let bad = || RecordError::BadNumber(s.to_string());
    if let Some(inner) = s.strip_prefix("-sqrt(").and_then(|r| r.strip_suffix(')')) {
        Ok(ExactValue::SignedSqrt(
            -parse_rational(inner).map_err(|_| bad())?,
        ))
    } else if let Some(inner) = s.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
        Ok(ExactValue::SignedSqrt(
            parse_rational(inner).map_err(|_| bad())?,
        ))
    } else {
        Ok(ExactValue::Rational(parse_rational(s).map_err(|_| bad())?))
    }
}

impl MomentRecord {
    /// Rebuilds the exact report.
    pub fn to_report(&self) -> Result<MomentReport, RecordError> {
        let std_moments = self
            .std_moments
            .iter()
            .map(|m| {
                Ok(StdMoment {
                    order: m.order,
                    exact: parse_exact(&m.exact)?,
                    decimal: m.decimal.clone(),
                })
            })
            .collect::<Result<_, RecordError>>()?;
        Ok(MomentReport {
            n: self.n,
            mass: self
                .mass
                .parse()
                .map_err(|_| RecordError::BadNumber(self.mass.clone()))?,
            mean: parse_rational(&self.mean)?,
            variance: parse_rational(&self.variance)?,
            std_moments,
            degenerate: self.degenerate,
        })
    }
}

fn quantity_key(q: Quantity) -> String {
    match q {
        Quantity::Mean => "mean".into(),
        Quantity::Variance => "variance".into(),
        Quantity::Standardized(k) => format!("m{k}"),
    }
}

fn constant_record(c: &FittedConstant) -> ConstantRecord {
    ConstantRecord {
        quantity: quantity_key(c.quantity),
        ansatz: c.quantity.ansatz().suffix().to_string(),
        fits: c
            .fits
            .iter()
            .zip(&c.renderings)
            .map(|(f, r)| FitRecord {
                n: f.n,
                exact: f.value.to_string(),
                decimal: f.decimal.clone(),
                rendering: r.clone(),
            })
            .collect(),
        safe: c.safe.clone(),
        display: c.display(),
    }
}

fn theorem_record(t: &AsymptoticTheorem) -> TheoremRecord {
    TheoremRecord {
        steps: t.steps.label(),
        safe: t.safe,
        constants: t.constants.iter().map(constant_record).collect(),
    }
}

impl From<&Book> for BookRecord {
    fn from(b: &Book) -> Self {
        BookRecord {
            steps: b.config.steps.to_string(),
            max_moment: b.config.max_moment,
            ranges: b.config.ranges.iter().map(|r| r.to_string()).collect(),
            precision: b.config.precision,
            theorems: b.theorems.iter().map(theorem_record).collect(),
            excluded: b
                .excluded
                .iter()
                .map(|e| ExclusionRecord {
                    steps: e.steps.label(),
                    reason: e.reason.to_string(),
                })
                .collect(),
        }
    }
}
