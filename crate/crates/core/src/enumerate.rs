//! Dynamic-programming enumeration of statistic polynomials over all walks
//! to a fixed endpoint.
//!
//! Walks to `(x, y)` are the walks to `(x, y) - s` extended by `s`, for each
//! step `s`. Each cell keeps two polynomials: walks whose last point is not
//! strictly below the diagonal, and walks whose last point is. That one bit
//! of history is all the losing-time rule needs beyond the current height.
//!
//! Cells are filled row by row in `x`; since every step is non-negative and
//! non-zero, predecessors always come earlier. Only the last `max dx + 1`
//! rows are kept alive.

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::algebra::IntPoly;
use crate::walk::{classify_region_3d, Region3, Stat, StepSet2, StepSet3};

/// Statistics the DP can track: `a1` and `a2`. The other two need history
/// beyond the previous point and are served by the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DpStat {
    LosingTimes,
    BreakEvens,
}

impl TryFrom<Stat> for DpStat {
    type Error = Stat;
    fn try_from(s: Stat) -> Result<Self, Stat> {
        match s {
            Stat::A1 => Ok(DpStat::LosingTimes),
            Stat::A2 => Ok(DpStat::BreakEvens),
            other => Err(other),
        }
    }
}

impl From<DpStat> for Stat {
    fn from(s: DpStat) -> Stat {
        match s {
            DpStat::LosingTimes => Stat::A1,
            DpStat::BreakEvens => Stat::A2,
        }
    }
}

/// Raw coefficient vector; trailing zeros allowed, empty means zero.
type Coeffs = Vec<BigUint>;

#[derive(Clone, Default)]
struct Cell {
    not_below: Coeffs,
    below: Coeffs,
}

/// `dst += src * t^shift`
fn add_shifted(dst: &mut Coeffs, src: &Coeffs, shift: usize) {
    if src.is_empty() {
        return;
    }
    if dst.len() < src.len() + shift {
        dst.resize(src.len() + shift, BigUint::zero());
    }
    for (d, s) in dst[shift..].iter_mut().zip(src) {
        if !s.is_zero() {
            *d += s;
        }
    }
}

fn to_poly(c: &Coeffs) -> IntPoly {
    IntPoly::from_coeffs(c.iter().map(|x| BigInt::from(x.clone())).collect())
}

/// Runs the DP over the box `[0, a] x [0, b]`, calling `visit(x, y, poly)`
/// on each cell selected by `wanted` once it is final.
fn run_dp_2d(
    steps: &StepSet2,
    a: u64,
    b: u64,
    stat: DpStat,
    wanted: impl Fn(u64, u64) -> bool,
    mut visit: impl FnMut(u64, u64, IntPoly),
) {
    let max_dx = steps.steps().iter().map(|s| s.dx()).max().unwrap_or(0) as usize;
    let window = max_dx + 1;
    let width = b as usize + 1;
    let mut rows: Vec<Vec<Cell>> = vec![vec![Cell::default(); width]; window];

    for x in 0..=a as usize {
        let slot = x % window;
        rows[slot].iter_mut().for_each(|c| *c = Cell::default());
        for y in 0..width {
            let mut cell = Cell::default();
            if x == 0 && y == 0 {
                cell.not_below.push(BigUint::from(1u32));
            }
            let h = y as i64 - x as i64;
            for s in steps.steps() {
                let (dx, dy) = (s.dx() as usize, s.dy() as usize);
                if dx > x || dy > y {
                    continue;
                }
                let prev = if dx == 0 {
                    &rows[slot][y - dy]
                } else {
                    &rows[(x - dx) % window][y - dy]
                };
                for (src, prev_below) in [(&prev.not_below, false), (&prev.below, true)] {
                    if src.is_empty() {
                        continue;
                    }
                    let inc = match stat {
                        DpStat::LosingTimes => h < 0 || prev_below,
                        DpStat::BreakEvens => h == 0,
                    } as usize;
                    let dst = if h < 0 {
                        &mut cell.below
                    } else {
                        &mut cell.not_below
                    };
                    add_shifted(dst, src, inc);
                }
            }
            if wanted(x as u64, y as u64) {
                let mut total = cell.not_below.clone();
                add_shifted(&mut total, &cell.below, 0);
                visit(x as u64, y as u64, to_poly(&total));
            }
            rows[slot][y] = cell;
        }
    }
}

/// `F_{a,b}(t)` for walks with steps in `steps` ending at `(a, b)`. Zero when
/// the endpoint is unreachable.
pub fn endpoint_poly_2d(steps: &StepSet2, end: (u64, u64), stat: DpStat) -> IntPoly {
    let mut out = IntPoly::zero();
    run_dp_2d(
        steps,
        end.0,
        end.1,
        stat,
        |x, y| (x, y) == end,
        |_, _, p| out = p,
    );
    out
}

/// `F_{n,n}(t)` for every `n` in `0..=n_max` from a single table.
pub fn diagonal_polys_2d(steps: &StepSet2, n_max: u64, stat: DpStat) -> Vec<IntPoly> {
    let mut out = vec![IntPoly::zero(); n_max as usize + 1];
    run_dp_2d(
        steps,
        n_max,
        n_max,
        stat,
        |x, y| x == y,
        |x, _, p| out[x as usize] = p,
    );
    out
}

/// Full table of `F_{x,y}(t)` over `[0, a] x [0, b]`, indexed `[x][y]`.
/// Intended for small boxes (tests, visualization).
pub fn table_2d(steps: &StepSet2, a: u64, b: u64, stat: DpStat) -> Vec<Vec<IntPoly>> {
    let mut out = vec![vec![IntPoly::zero(); b as usize + 1]; a as usize + 1];
    run_dp_2d(
        steps,
        a,
        b,
        stat,
        |_, _| true,
        |x, y, p| out[x as usize][y as usize] = p,
    );
    out
}

/// Polynomial in `t` marking visits to `region` over 3D walks to `end`.
/// Step endpoints count as visits, the origin does not.
pub fn endpoint_poly_3d(steps: &StepSet3, end: [u64; 3], region: Region3) -> IntPoly {
    let [a, b, c] = end.map(|v| v as usize);
    let idx = |x: usize, y: usize, z: usize| (x * (b + 1) + y) * (c + 1) + z;
    let mut table: Vec<Coeffs> = vec![Vec::new(); (a + 1) * (b + 1) * (c + 1)];
    table[0].push(BigUint::from(1u32));
    for x in 0..=a {
        for y in 0..=b {
            for z in 0..=c {
                if x + y + z == 0 {
                    continue;
                }
                let inc = (classify_region_3d([x as u64, y as u64, z as u64]) == region) as usize;
                let mut acc: Coeffs = Vec::new();
                for s in steps.steps() {
                    let [dx, dy, dz] = s.components().map(|v| v as usize);
                    if dx <= x && dy <= y && dz <= z {
                        add_shifted(&mut acc, &table[idx(x - dx, y - dy, z - dz)], inc);
                    }
                }
                table[idx(x, y, z)] = acc;
            }
        }
    }
    to_poly(&table[idx(a, b, c)])
}
