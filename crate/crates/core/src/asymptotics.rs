//! Automated storybooks: for every subset of a step set, compute exact moment
//! reports of the losing-time count over walks to `(n, n)` for a range of
//! `n`, fit the ansatzes `C n` (mean), `C n^2` (variance) and `C` (higher
//! standardized moments), and emit one asymptotic statement per subset.
//!
//! With two disjoint ranges the fits are compared digit by digit and only the
//! common decimal prefix is reported.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::algebra::ExactValue;
use crate::enumerate::{diagonal_polys_2d, DpStat};
use crate::moments::{moment_report_with_digits, MomentReport};
use crate::walk::StepSet2;

pub const DEFAULT_PRECISION: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ansatz {
    /// `C n`
    Linear,
    /// `C n^2`
    Quadratic,
    /// `C`
    Constant,
}

impl Ansatz {
    fn scale(self, n: u64) -> BigRational {
        let n = BigRational::from_integer(BigInt::from(n));
        match self {
            Ansatz::Linear => n,
            Ansatz::Quadratic => &n * &n,
            Ansatz::Constant => BigRational::from_integer(1.into()),
        }
    }

    /// Suffix used when printing a fitted constant, e.g. `0.33n^2`.
    pub fn suffix(self) -> &'static str {
        match self {
            Ansatz::Linear => "n",
            Ansatz::Quadratic => "n^2",
            Ansatz::Constant => "",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quantity {
    Mean,
    Variance,
    /// Standardized central moment of the given order (3 or more).
    Standardized(usize),
}

impl Quantity {
    pub fn ansatz(self) -> Ansatz {
        match self {
            Quantity::Mean => Ansatz::Linear,
            Quantity::Variance => Ansatz::Quadratic,
            Quantity::Standardized(_) => Ansatz::Constant,
        }
    }

    /// Column number in the storybook table: 1 for the mean, 2 for the
    /// variance, `k` for the `k`-th standardized moment.
    pub fn column(self) -> usize {
        match self {
            Quantity::Mean => 1,
            Quantity::Variance => 2,
            Quantity::Standardized(k) => k,
        }
    }

    fn value(self, report: &MomentReport) -> Option<ExactValue> {
        match self {
            Quantity::Mean => Some(ExactValue::Rational(report.mean.clone())),
            Quantity::Variance => Some(ExactValue::Rational(report.variance.clone())),
            Quantity::Standardized(k) => report.std_moment(k).map(|m| m.exact.clone()),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Mean => f.write_str("expectation"),
            Quantity::Variance => f.write_str("variance"),
            Quantity::Standardized(k) => write!(f, "standardized moment {k}"),
        }
    }
}

/// Inclusive range of `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct NRange {
    pub start: u64,
    pub end: u64,
}

impl NRange {
    pub fn new(start: u64, end: u64) -> Self {
        NRange { start, end }
    }
}

impl FromStr for NRange {
    type Err = String;
    /// `K1:K2`
    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s
            .split_once(':')
            .ok_or_else(|| format!("range {s:?} must look like K1:K2"))?;
        let parse = |x: &str| {
            x.trim()
                .parse::<u64>()
                .map_err(|_| format!("invalid range bound {x:?}"))
        };
        Ok(NRange::new(parse(a)?, parse(b)?))
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, self.end)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BookConfig {
    pub steps: StepSet2,
    pub max_moment: usize,
    /// One range, or two for safe mode.
    pub ranges: Vec<NRange>,
    /// Fractional decimal digits in every rendering.
    pub precision: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BookError {
    #[error("maximum moment must be at least 2, got {0}")]
    MaxMoment(usize),
    #[error("expected one or two ranges, got {0}")]
    RangeCount(usize),
    #[error("range {0} must satisfy 1 <= K1 <= K2")]
    BadRange(NRange),
    #[error("range {0} must contain at least 3 values of n")]
    ShortRange(NRange),
}

impl BookConfig {
    pub fn new(steps: StepSet2, max_moment: usize, ranges: Vec<NRange>) -> Self {
        BookConfig {
            steps,
            max_moment,
            ranges,
            precision: DEFAULT_PRECISION,
        }
    }

    pub fn validate(&self) -> Result<(), BookError> {
        if self.max_moment < 2 {
            return Err(BookError::MaxMoment(self.max_moment));
        }
        if self.ranges.is_empty() || self.ranges.len() > 2 {
            return Err(BookError::RangeCount(self.ranges.len()));
        }
        for &r in &self.ranges {
            if r.start == 0 || r.start > r.end {
                return Err(BookError::BadRange(r));
            }
            if r.end - r.start < 2 {
                return Err(BookError::ShortRange(r));
            }
        }
        Ok(())
    }

    pub fn quantities(&self) -> Vec<Quantity> {
        let mut q = vec![Quantity::Mean, Quantity::Variance];
        q.extend((3..=self.max_moment).map(Quantity::Standardized));
        q
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FitError {
    #[error("no data points")]
    EmptyData,
    #[error("need at least 3 data points, got {0}")]
    TooFewPoints(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FitEstimate {
    /// The `n` the estimate was read at.
    pub n: u64,
    /// `value(n) / ansatz(n)`, exact.
    pub value: ExactValue,
    pub decimal: String,
}

/// Estimates `C` as `value(n) / ansatz(n)` at the largest sampled `n`.
pub fn fit_constant(
    data: &[(u64, ExactValue)],
    ansatz: Ansatz,
    precision: usize,
) -> Result<FitEstimate, FitError> {
    if data.is_empty() {
        return Err(FitError::EmptyData);
    }
    if data.len() < 3 {
        return Err(FitError::TooFewPoints(data.len()));
    }
    let (n, v) = data.iter().max_by_key(|(n, _)| *n).expect("non-empty");
    let value = v.div_positive(&ansatz.scale(*n));
    let decimal = value.to_decimal(precision);
    Ok(FitEstimate {
        n: *n,
        value,
        decimal,
    })
}

/// Longest common prefix of two decimal renderings, aligned at the decimal
/// point. `None` when the integer parts already disagree.
pub fn safe_digits(x: &str, y: &str) -> Option<String> {
    let int_len = |s: &str| s.find('.').unwrap_or(s.len());
    if int_len(x) != int_len(y) {
        return None;
    }
    let common: String = x
        .chars()
        .zip(y.chars())
        .take_while(|(a, b)| a == b)
        .map(|(a, _)| a)
        .collect();
    if common.len() < int_len(x) {
        return None;
    }
    Some(common)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FittedConstant {
    pub quantity: Quantity,
    /// One estimate per range.
    pub fits: Vec<FitEstimate>,
    /// Renderings after the near-zero rule for odd moments, one per range.
    pub renderings: Vec<String>,
    /// Common prefix of the renderings in safe mode; `None` when they do not
    /// agree or when there is only one range.
    pub safe: Option<String>,
}

impl FittedConstant {
    /// The digits to report: the safe prefix in safe mode, otherwise the
    /// single-range rendering.
    pub fn display(&self) -> String {
        match (&self.safe, self.renderings.as_slice()) {
            (Some(s), _) => s.clone(),
            (None, [single]) => single.clone(),
            (None, _) => "no agreement".to_string(),
        }
    }

    /// Best estimate: the fit over the last (largest) range.
    pub fn best(&self) -> &FitEstimate {
        self.fits.last().expect("at least one range")
    }
}

/// Moment reports for one subset over one range.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RangeData {
    pub range: NRange,
    pub reports: Vec<MomentReport>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticTheorem {
    pub steps: StepSet2,
    pub constants: Vec<FittedConstant>,
    pub safe: bool,
    pub data: Vec<RangeData>,
}

impl AsymptoticTheorem {
    pub fn constant(&self, q: Quantity) -> Option<&FittedConstant> {
        self.constants.iter().find(|c| c.quantity == q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExclusionReason {
    /// Fewer than 3 values of `n` in a range have `(n, n)` reachable.
    TooFewReachable { range: NRange, reachable: usize },
    /// Every sampled walk has zero losing times.
    NoLosingTimes,
    /// Every sampled distribution is a point mass.
    ZeroVariance,
}

impl fmt::Display for ExclusionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExclusionReason::TooFewReachable { range, reachable } => {
                write!(f, "only {reachable} reachable n in {range}")
            }
            ExclusionReason::NoLosingTimes => f.write_str("no walk has a losing time"),
            ExclusionReason::ZeroVariance => f.write_str("zero variance at every sampled n"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exclusion {
    pub steps: StepSet2,
    pub reason: ExclusionReason,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Book {
    pub config: BookConfig,
    pub theorems: Vec<AsymptoticTheorem>,
    pub excluded: Vec<Exclusion>,
}

/// Odd standardized moments this close to zero render as zero.
fn near_zero_bound() -> BigRational {
    BigRational::new(1.into(), 1000.into())
}

fn zero_rendering(precision: usize) -> String {
    if precision == 0 {
        "0".to_string()
    } else {
        format!("0.{}", "0".repeat(precision))
    }
}

/// Builds the theorem for one subset, or the reason it is excluded.
pub fn subset_theorem(
    steps: &StepSet2,
    config: &BookConfig,
) -> Result<AsymptoticTheorem, ExclusionReason> {
    let n_max = config.ranges.iter().map(|r| r.end).max().unwrap_or(0);
    let polys = diagonal_polys_2d(steps, n_max, DpStat::LosingTimes);

    let mut data = Vec::with_capacity(config.ranges.len());
    for &range in &config.ranges {
        let reachable: Vec<u64> = (range.start..=range.end)
            .filter(|&n| !polys[n as usize].is_zero())
            .collect();
        if reachable.len() < 3 {
            return Err(ExclusionReason::TooFewReachable {
                range,
                reachable: reachable.len(),
            });
        }
        let reports = reachable
            .iter()
            .map(|&n| {
                moment_report_with_digits(&polys[n as usize], config.max_moment, config.precision)
                    .expect("nonzero polynomial with non-negative coefficients")
                    .with_n(n)
            })
            .collect();
        data.push(RangeData { range, reports });
    }

    let sampled = || data.iter().flat_map(|d| d.reports.iter());
    if sampled().all(|r| polys[r.n.unwrap_or(0) as usize].is_constant()) {
        return Err(ExclusionReason::NoLosingTimes);
    }
    if sampled().all(|r| r.degenerate) {
        return Err(ExclusionReason::ZeroVariance);
    }

    let zero_bound = near_zero_bound();
    let constants = config
        .quantities()
        .into_iter()
        .filter_map(|q| {
            let mut fits = Vec::new();
            let mut renderings = Vec::new();
            for d in &data {
                let points: Vec<(u64, ExactValue)> = d
                    .reports
                    .iter()
                    .filter_map(|r| q.value(r).map(|v| (r.n.unwrap_or(0), v)))
                    .collect();
                let fit = fit_constant(&points, q.ansatz(), config.precision).ok()?;
                let odd = matches!(q, Quantity::Standardized(k) if k % 2 == 1);
                let rendering = if odd && fit.value.abs_cmp(&zero_bound) == Ordering::Less {
                    zero_rendering(config.precision)
                } else {
                    fit.decimal.clone()
                };
                fits.push(fit);
                renderings.push(rendering);
            }
            let safe = match renderings.as_slice() {
                [a, b] => safe_digits(a, b),
                _ => None,
            };
            Some(FittedConstant {
                quantity: q,
                fits,
                renderings,
                safe,
            })
        })
        .collect();

    Ok(AsymptoticTheorem {
        steps: steps.clone(),
        constants,
        safe: config.ranges.len() == 2,
        data,
    })
}

/// Runs the storybook over every non-empty subset of the configured steps.
/// Output order is the canonical subset order whatever the scheduling.
pub fn book(config: &BookConfig) -> Result<Book, BookError> {
    config.validate()?;
    let subsets = config.steps.subsets();
    #[cfg(feature = "parallel")]
    let results: Vec<_> = {
        use rayon::prelude::*;
        subsets
            .par_iter()
            .map(|s| (s.clone(), subset_theorem(s, config)))
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<_> = subsets
        .iter()
        .map(|s| (s.clone(), subset_theorem(s, config)))
        .collect();

    let mut theorems = Vec::new();
    let mut excluded = Vec::new();
    for (steps, r) in results {
        match r {
            Ok(t) => theorems.push(t),
            Err(reason) => excluded.push(Exclusion { steps, reason }),
        }
    }
    Ok(Book {
        config: config.clone(),
        theorems,
        excluded,
    })
}

/// Human-readable storybook: one titled statement per emitted subset.
pub fn storybook_text(book: &Book) -> String {
    let mut out = String::new();
    let ranges: Vec<String> = book.config.ranges.iter().map(|r| r.to_string()).collect();
    out.push_str(&format!(
        "Losing times of walks to (n, n) with steps in subsets of {}\n",
        book.config.steps.label()
    ));
    out.push_str(&format!(
        "Fitted over n in {}{}\n\n",
        ranges.join(" and "),
        if book.config.ranges.len() == 2 {
            ", keeping agreeing digits"
        } else {
            ""
        }
    ));
    for (i, t) in book.theorems.iter().enumerate() {
        out.push_str(&format!("Theorem {}. Steps {}.\n", i + 1, t.steps.label()));
        out.push_str(
            "For a walk chosen uniformly at random among walks from (0,0) to (n,n), the number of losing times satisfies, as n grows:\n",
        );
        for c in &t.constants {
            let shown = c.display();
            let suffix = c.quantity.ansatz().suffix();
            let line = match c.quantity {
                Quantity::Mean | Quantity::Variance => {
                    format!("  {} ~ {}{}\n", c.quantity, shown, suffix)
                }
                Quantity::Standardized(_) => format!("  {} -> {}\n", c.quantity, shown),
            };
            out.push_str(&line);
        }
        out.push('\n');
    }
    if !book.excluded.is_empty() {
        out.push_str("Excluded:\n");
        for e in &book.excluded {
            out.push_str(&format!("  {}: {}\n", e.steps.label(), e.reason));
        }
    }
    out
}

/// LaTeX table with one row per theorem: steps, then columns `1..=M`.
pub fn latex_table(book: &Book) -> String {
    let m = book.config.max_moment;
    let mut out = String::new();
    out.push_str(&format!(
        "\\begin{{tabular}}{{c {}}}\n\\hline\n",
        "c ".repeat(m).trim_end()
    ));
    let header: Vec<String> = (1..=m).map(|k| k.to_string()).collect();
    out.push_str(&format!("Steps & {} \\\\\n\\hline\n", header.join(" & ")));
    for t in &book.theorems {
        let steps = t.steps.label().replace('{', "\\{").replace('}', "\\}");
        let cells: Vec<String> = t
            .constants
            .iter()
            .map(|c| format!("${}{}$", c.display(), c.quantity.ansatz().suffix()))
            .collect();
        out.push_str(&format!("${}$ & {} \\\\\n", steps, cells.join(" & ")));
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactValue {
        ExactValue::Rational(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn fit_examples() {
        let linear = [(10, q(10, 1)), (11, q(11, 1)), (12, q(12, 1))];
        let f = fit_constant(&linear, Ansatz::Linear, 4).unwrap();
        assert_eq!(f.decimal, "1.0000");
        assert_eq!(f.n, 12);

        let prop1: Vec<(u64, ExactValue)> = (100u64..=110)
            .map(|n| (n, q((n * n + 2 * n) as i64, 3)))
            .collect();
        let f = fit_constant(&prop1, Ansatz::Quadratic, 6).unwrap();
        // 1/3 + 2/330
        assert_eq!(
            f.value,
            ExactValue::Rational(BigRational::new(112.into(), 330.into()))
        );
        assert!(f.decimal.starts_with("0.3393"));

        let zeros = [(1, q(0, 1)), (2, q(0, 1)), (3, q(0, 1))];
        assert_eq!(
            fit_constant(&zeros, Ansatz::Constant, 3).unwrap().decimal,
            "0.000"
        );
    }

    #[test]
    fn fit_errors() {
        assert_eq!(
            fit_constant(&[], Ansatz::Constant, 3),
            Err(FitError::EmptyData)
        );
        assert_eq!(
            fit_constant(&[(1, q(1, 1))], Ansatz::Constant, 3),
            Err(FitError::TooFewPoints(1))
        );
    }

    #[test]
    fn safe_digit_examples() {
        assert_eq!(safe_digits("0.33963", "0.33398").as_deref(), Some("0.33"));
        assert_eq!(safe_digits("1.800", "1.800").as_deref(), Some("1.800"));
        assert_eq!(safe_digits("1.802", "1.798").as_deref(), Some("1."));
        assert_eq!(safe_digits("1.802", "1.898").as_deref(), Some("1.8"));
        assert_eq!(safe_digits("12.5", "9.5"), None);
        assert_eq!(safe_digits("-0.01", "0.01"), None);
    }

    #[test]
    fn range_parsing() {
        assert_eq!("100:110".parse::<NRange>(), Ok(NRange::new(100, 110)));
        assert!("100-110".parse::<NRange>().is_err());
    }

    #[test]
    fn config_validation() {
        let s = StepSet2::up_right();
        assert!(BookConfig::new(s.clone(), 6, vec![NRange::new(10, 12)])
            .validate()
            .is_ok());
        assert_eq!(
            BookConfig::new(s.clone(), 1, vec![NRange::new(10, 12)]).validate(),
            Err(BookError::MaxMoment(1))
        );
        assert_eq!(
            BookConfig::new(s.clone(), 4, vec![NRange::new(0, 12)]).validate(),
            Err(BookError::BadRange(NRange::new(0, 12)))
        );
        assert_eq!(
            BookConfig::new(s.clone(), 4, vec![NRange::new(10, 11)]).validate(),
            Err(BookError::ShortRange(NRange::new(10, 11)))
        );
        assert_eq!(
            BookConfig::new(s, 4, vec![]).validate(),
            Err(BookError::RangeCount(0))
        );
    }

    #[test]
    fn up_right_book() {
        let cfg = BookConfig::new(
            StepSet2::up_right(),
            6,
            vec![NRange::new(40, 45), NRange::new(60, 65)],
        );
        let b = book(&cfg).unwrap();
        assert_eq!(b.theorems.len() + b.excluded.len(), 3);
        assert_eq!(b.theorems.len(), 1);
        let t = &b.theorems[0];
        let mean = t.constant(Quantity::Mean).unwrap();
        assert_eq!(mean.best().value, q(1, 1));
        assert_eq!(mean.display(), "1.0000000000");
        let var = t.constant(Quantity::Variance).unwrap();
        // 1/3 + 2/(3n) at n = 65
        assert_eq!(var.best().value, q(67, 195));
        // 0.3481... at n = 45 against 0.3435... at n = 65
        assert_eq!(var.display(), "0.34");
        assert_eq!(
            t.constant(Quantity::Standardized(3)).unwrap().display(),
            "0.0000000000"
        );
        assert!(t
            .constant(Quantity::Standardized(4))
            .unwrap()
            .display()
            .starts_with("1.7"));
        for c in &t.constants {
            if let Some(safe) = &c.safe {
                assert!(c.renderings.iter().all(|r| r.starts_with(safe.as_str())));
            }
        }
    }

    #[test]
    fn trivial_subsets_are_excluded() {
        let cfg = BookConfig::new(StepSet2::king(), 4, vec![NRange::new(5, 9)]);
        let b = book(&cfg).unwrap();
        assert_eq!(b.theorems.len() + b.excluded.len(), 7);
        let reason = |label: &str| {
            b.excluded
                .iter()
                .find(|e| e.steps.label() == label)
                .map(|e| e.reason.clone())
        };
        assert!(matches!(
            reason("{01}"),
            Some(ExclusionReason::TooFewReachable { .. })
        ));
        assert!(matches!(
            reason("{11}"),
            Some(ExclusionReason::NoLosingTimes)
        ));
        assert!(matches!(
            reason("{01, 11}"),
            Some(ExclusionReason::NoLosingTimes)
        ));
        let emitted: Vec<String> = b.theorems.iter().map(|t| t.steps.label()).collect();
        assert_eq!(emitted, ["{01, 10}", "{01, 10, 11}"]);
    }
}
