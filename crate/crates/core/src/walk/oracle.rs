//! Brute-force enumeration of explicit walks.
//!
//! Everything here materializes each walk and evaluates statistics on it
//! directly, so it shares no code path with the dynamic-programming
//! enumerators it is used to validate.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use thiserror::Error;

use super::region::{classify_region_3d, Region3};
use super::stats::{compute_stats, Stat, StatVector, Walk};
use super::steps::{Step2, StepSet2, StepSet3};
use crate::algebra::IntPoly;

pub const DEFAULT_ORACLE_LIMIT: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("enumeration needs more than {limit} walks or search nodes")]
    TooLarge { limit: u64 },
}

/// Exhaustive enumerator with a configurable work guard.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    pub limit: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            limit: DEFAULT_ORACLE_LIMIT,
        }
    }
}

/// `sum_w t1^a1 t2^a2 t3^a3 t4^a4` over all walks of a fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GrandPolynomial {
    terms: BTreeMap<[u32; 4], BigUint>,
}

impl GrandPolynomial {
    pub fn add_walk(&mut self, stats: StatVector) {
        *self.terms.entry(stats.as_array()).or_default() += 1u32;
    }

    pub fn terms(&self) -> &BTreeMap<[u32; 4], BigUint> {
        &self.terms
    }

    pub fn total(&self) -> BigUint {
        self.terms.values().sum()
    }

    /// Sets every variable except the one for `stat` to 1.
    pub fn marginal(&self, stat: Stat) -> IntPoly {
        let idx = stat as usize;
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (exps, count) in &self.terms {
            let e = exps[idx] as usize;
            if coeffs.len() <= e {
                coeffs.resize(e + 1, BigInt::zero());
            }
            coeffs[e] += BigInt::from(count.clone());
        }
        IntPoly::from_coeffs(coeffs)
    }

    fn merge(&mut self, other: GrandPolynomial) {
        for (k, v) in other.terms {
            *self.terms.entry(k).or_default() += v;
        }
    }
}

impl Oracle {
    pub fn with_limit(limit: u64) -> Self {
        Oracle { limit }
    }

    fn check_count(&self, base: usize, len: u32) -> Result<(), OracleError> {
        let fits = (base as u64)
            .checked_pow(len)
            .is_some_and(|total| total <= self.limit);
        if fits {
            Ok(())
        } else {
            Err(OracleError::TooLarge { limit: self.limit })
        }
    }

    /// Calls `visit` on every walk of exactly `len` steps, in lexicographic
    /// order of step sequences.
    pub fn for_each_walk(
        &self,
        steps: &StepSet2,
        len: usize,
        mut visit: impl FnMut(&Walk),
    ) -> Result<(), OracleError> {
        self.check_count(steps.len(), len as u32)?;
        let k = steps.len();
        let mut idx = vec![0usize; len];
        loop {
            let walk = Walk::new(idx.iter().map(|&i| steps.steps()[i]).collect());
            visit(&walk);
            // odometer increment
            let mut pos = len;
            loop {
                if pos == 0 {
                    return Ok(());
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < k {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    /// The grand polynomial over all `|S|^len` walks of length `len`.
    pub fn grand_poly(&self, steps: &StepSet2, len: usize) -> Result<GrandPolynomial, OracleError> {
        self.check_count(steps.len(), len as u32)?;
        if len == 0 {
            let mut g = GrandPolynomial::default();
            g.add_walk(StatVector::default());
            return Ok(g);
        }
        // split on the first step; each branch enumerates the remaining suffix
        let branch = |first: Step2| -> GrandPolynomial {
            let mut g = GrandPolynomial::default();
            self.for_each_walk(steps, len - 1, |suffix| {
                let mut all = Vec::with_capacity(len);
                all.push(first);
                all.extend_from_slice(suffix.steps());
                g.add_walk(compute_stats(&Walk::new(all)));
            })
            .expect("guard checked above");
            g
        };
        #[cfg(feature = "parallel")]
        let parts: Vec<GrandPolynomial> = {
            use rayon::prelude::*;
            steps.steps().par_iter().map(|&s| branch(s)).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let parts: Vec<GrandPolynomial> = steps.steps().iter().map(|&s| branch(s)).collect();
        let mut out = GrandPolynomial::default();
        for p in parts {
            out.merge(p);
        }
        Ok(out)
    }

    /// Calls `visit` on every walk from the origin to `end`, by depth-first
    /// search. Counts search nodes against the guard.
    pub fn for_each_walk_to(
        &self,
        steps: &StepSet2,
        end: (u64, u64),
        mut visit: impl FnMut(&Walk),
    ) -> Result<(), OracleError> {
        let mut path: Vec<Step2> = Vec::new();
        let mut nodes = 0u64;
        self.dfs2(steps, end, (0, 0), &mut path, &mut nodes, &mut visit)
    }

    fn dfs2(
        &self,
        steps: &StepSet2,
        end: (u64, u64),
        at: (u64, u64),
        path: &mut Vec<Step2>,
        nodes: &mut u64,
        visit: &mut impl FnMut(&Walk),
    ) -> Result<(), OracleError> {
        *nodes += 1;
        if *nodes > self.limit {
            return Err(OracleError::TooLarge { limit: self.limit });
        }
        if at == end {
            visit(&Walk::new(path.clone()));
            return Ok(());
        }
        for &s in steps.steps() {
            let next = (at.0 + s.dx() as u64, at.1 + s.dy() as u64);
            if next.0 <= end.0 && next.1 <= end.1 {
                path.push(s);
                self.dfs2(steps, end, next, path, nodes, visit)?;
                path.pop();
            }
        }
        Ok(())
    }

    /// `F_{a,b}(t) = sum t^{stat(w)}` over walks to `(a, b)`; zero when
    /// the endpoint is unreachable.
    pub fn endpoint_poly(
        &self,
        steps: &StepSet2,
        end: (u64, u64),
        stat: Stat,
    ) -> Result<IntPoly, OracleError> {
        let mut counts: Vec<BigInt> = Vec::new();
        self.for_each_walk_to(steps, end, |w| {
            let e = compute_stats(w).get(stat) as usize;
            if counts.len() <= e {
                counts.resize(e + 1, BigInt::zero());
            }
            counts[e] += 1;
        })?;
        Ok(IntPoly::from_coeffs(counts))
    }

    /// Polynomial marking visits to `region` over 3D walks to `end`; the
    /// origin is not a visit, step endpoints are.
    pub fn endpoint_poly_3d(
        &self,
        steps: &StepSet3,
        end: [u64; 3],
        region: Region3,
    ) -> Result<IntPoly, OracleError> {
        let mut counts: Vec<BigInt> = Vec::new();
        let mut path: Vec<[u64; 3]> = Vec::new();
        let mut nodes = 0u64;
        self.dfs3(
            steps,
            end,
            [0, 0, 0],
            &mut path,
            &mut nodes,
            &mut |points| {
                let visits = points
                    .iter()
                    .filter(|&&p| classify_region_3d(p) == region)
                    .count();
                if counts.len() <= visits {
                    counts.resize(visits + 1, BigInt::zero());
                }
                counts[visits] += 1;
            },
        )?;
        Ok(IntPoly::from_coeffs(counts))
    }

    fn dfs3(
        &self,
        steps: &StepSet3,
        end: [u64; 3],
        at: [u64; 3],
        path: &mut Vec<[u64; 3]>,
        nodes: &mut u64,
        visit: &mut impl FnMut(&[[u64; 3]]),
    ) -> Result<(), OracleError> {
        *nodes += 1;
        if *nodes > self.limit {
            return Err(OracleError::TooLarge { limit: self.limit });
        }
        if at == end {
            visit(path);
            return Ok(());
        }
        for s in steps.steps() {
            let c = s.components();
            let next = [
                at[0] + c[0] as u64,
                at[1] + c[1] as u64,
                at[2] + c[2] as u64,
            ];
            if (0..3).all(|i| next[i] <= end[i]) {
                path.push(next);
                self.dfs3(steps, end, next, path, nodes, visit)?;
                path.pop();
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn grand_poly_examples() {
        let o = Oracle::default();
        let s = StepSet2::up_right();
        let g1 = o.grand_poly(&s, 1).unwrap();
        assert_eq!(g1.total(), BigUint::from(2u32));
        assert_eq!(g1.marginal(Stat::A1), ip(&[1, 1]));
        let g0 = o.grand_poly(&s, 0).unwrap();
        assert_eq!(g0.terms().len(), 1);
        assert_eq!(g0.marginal(Stat::A1), ip(&[1]));
        assert_eq!(
            o.grand_poly(&s, 2).unwrap().marginal(Stat::A1),
            ip(&[2, 0, 2])
        );
    }

    #[test]
    fn endpoint_poly_examples() {
        let o = Oracle::default();
        let ur = StepSet2::up_right();
        assert_eq!(
            o.endpoint_poly(&ur, (1, 1), Stat::A1).unwrap(),
            ip(&[1, 0, 1])
        );
        assert_eq!(
            o.endpoint_poly(&StepSet2::king(), (1, 1), Stat::A1)
                .unwrap(),
            ip(&[2, 0, 1])
        );
        let jump: StepSet2 = "2,0;0,1".parse().unwrap();
        assert!(o.endpoint_poly(&jump, (1, 1), Stat::A1).unwrap().is_zero());
    }

    #[test]
    fn guard_trips() {
        let o = Oracle::with_limit(1000);
        let s = StepSet2::up_right();
        assert_eq!(
            o.grand_poly(&s, 10),
            Err(OracleError::TooLarge { limit: 1000 })
        );
        assert!(o.endpoint_poly(&s, (10, 10), Stat::A1).is_err());
        assert!(o.grand_poly(&s, 9).is_ok());
    }

    #[test]
    fn three_d_unit_walks() {
        let o = Oracle::default();
        let s = StepSet3::unit();
        let p = o.endpoint_poly_3d(&s, [0, 0, 0], Region3::Tie).unwrap();
        assert_eq!(p, ip(&[1]));
        let p = o.endpoint_poly_3d(&s, [1, 1, 1], Region3::Tie).unwrap();
        assert_eq!(p.sum(), BigInt::from(6));
        // each unit walk to (1,1,1) visits ties at (1,0,0)-type points, at the
        // (1,1,0)-type point and at the endpoint
        assert_eq!(p, ip(&[0, 0, 0, 6]));
    }
}
