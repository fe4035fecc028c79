//! Browser bindings for the demo page in `www/`.
//!
//! Each export takes plain strings and numbers and returns a JSON document.
//! Integers and rationals are strings, as in the CLI records; `*_f64` fields
//! are lossy copies for plotting only.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use lattice_walks::algebra::{rational_to_f64, BigInt, BigRational};
use lattice_walks::closed_forms::{arcsine_counts, catalan};
use lattice_walks::enumerate::{diagonal_polys_2d, endpoint_poly_2d, DpStat};
use lattice_walks::moments::moment_report;
use lattice_walks::record::MomentRecord;
use lattice_walks::walk::{Stat, StepSet2};

/// Largest coordinate the page may ask for; keeps a click responsive.
pub const MAX_COORD: u64 = 300;

#[derive(Serialize)]
struct Distribution {
    steps: String,
    endpoint: [u64; 2],
    stat: String,
    coefficients: Vec<String>,
    /// `c_k / F(1)`.
    probabilities_f64: Vec<f64>,
    moments: Option<MomentRecord>,
}

#[derive(Serialize)]
struct CurvePoint {
    n: u64,
    mean_over_n: f64,
    variance_over_n2: f64,
    /// Standardized moments `3..=M`, same order as the report.
    std_moments_f64: Vec<f64>,
}

#[derive(Serialize)]
struct MomentCurve {
    steps: String,
    max_moment: usize,
    points: Vec<CurvePoint>,
}

#[derive(Serialize)]
struct LawComparison {
    n: u64,
    /// Free walks of length `2n`, by number of losing times `2k`.
    arcsine: Vec<String>,
    /// Walks to `(n, n)`, by number of losing times `2k`.
    chung_feller: Vec<String>,
    catalan: String,
}

fn parse_steps(steps: &str) -> Result<StepSet2, String> {
    steps.parse().map_err(|e| format!("steps: {e}"))
}

fn check_coord(name: &str, v: u64) -> Result<(), String> {
    if v > MAX_COORD {
        Err(format!("{name} = {v} exceeds {MAX_COORD}"))
    } else {
        Ok(())
    }
}

fn to_json(v: &impl Serialize) -> String {
    serde_json::to_string(v).expect("records serialize")
}

/// Statistic polynomial and exact moments over walks to `(a, b)`.
pub fn endpoint_distribution_json(
    steps: &str,
    a: u64,
    b: u64,
    stat: &str,
    max_moment: usize,
) -> Result<String, String> {
    let set = parse_steps(steps)?;
    check_coord("a", a)?;
    check_coord("b", b)?;
    let stat: Stat = stat.parse()?;
    let dp =
        DpStat::try_from(stat).map_err(|s| format!("{s} is not available here; use a1 or a2"))?;
    let poly = endpoint_poly_2d(&set, (a, b), dp);
    let mass = poly.sum();
    let probabilities_f64 = if poly.is_zero() {
        Vec::new()
    } else {
        let total = BigRational::from_integer(mass.clone());
        poly.coeffs()
            .iter()
            .map(|c| rational_to_f64(&(BigRational::from_integer(c.clone()) / &total)))
            .collect()
    };
    let moments = if poly.is_zero() {
        None
    } else {
        Some(MomentRecord::from(
            &moment_report(&poly, max_moment.max(2)).map_err(|e| e.to_string())?,
        ))
    };
    Ok(to_json(&Distribution {
        steps: set.to_string(),
        endpoint: [a, b],
        stat: stat.to_string(),
        coefficients: poly.to_decimal_strings(),
        probabilities_f64,
        moments,
    }))
}

/// Scaled moments of losing times over walks to `(n, n)` for `n = 1..=n_max`,
/// skipping unreachable `n` and degenerate distributions.
pub fn moment_curve_json(steps: &str, n_max: u64, max_moment: usize) -> Result<String, String> {
    let set = parse_steps(steps)?;
    check_coord("n_max", n_max)?;
    if max_moment < 2 {
        return Err("max_moment must be at least 2".to_string());
    }
    let polys = diagonal_polys_2d(&set, n_max, DpStat::LosingTimes);
    let mut points = Vec::new();
    for (n, p) in polys.iter().enumerate().skip(1) {
        if p.is_zero() {
            continue;
        }
        let r = moment_report(p, max_moment).map_err(|e| e.to_string())?;
        if r.degenerate {
            continue;
        }
        let n = n as u64;
        let nf = n as f64;
        points.push(CurvePoint {
            n,
            mean_over_n: rational_to_f64(&r.mean) / nf,
            variance_over_n2: rational_to_f64(&r.variance) / (nf * nf),
            std_moments_f64: r.std_moments.iter().map(|m| m.exact.to_f64()).collect(),
        });
    }
    Ok(to_json(&MomentCurve {
        steps: set.to_string(),
        max_moment,
        points,
    }))
}

/// Losing-time distributions for free walks of length `2n` and for walks to
/// `(n, n)`, both with unit steps.
pub fn losing_time_laws_json(n: u64) -> Result<String, String> {
    check_coord("n", n)?;
    let bridge = endpoint_poly_2d(&StepSet2::up_right(), (n, n), DpStat::LosingTimes);
    let even = |v: Vec<String>| v.into_iter().step_by(2).collect::<Vec<_>>();
    Ok(to_json(&LawComparison {
        n,
        arcsine: arcsine_counts(n).iter().map(BigInt::to_string).collect(),
        chung_feller: even(bridge.to_decimal_strings()),
        catalan: catalan(n).to_string(),
    }))
}

#[wasm_bindgen(js_name = endpointDistribution)]
pub fn endpoint_distribution(
    steps: &str,
    a: u32,
    b: u32,
    stat: &str,
    max_moment: u32,
) -> Result<String, JsError> {
    endpoint_distribution_json(steps, a.into(), b.into(), stat, max_moment as usize)
        .map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = momentCurve)]
pub fn moment_curve(steps: &str, n_max: u32, max_moment: u32) -> Result<String, JsError> {
    moment_curve_json(steps, n_max.into(), max_moment as usize).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = losingTimeLaws)]
pub fn losing_time_laws(n: u32) -> Result<String, JsError> {
    losing_time_laws_json(n.into()).map_err(|e| JsError::new(&e))
}
