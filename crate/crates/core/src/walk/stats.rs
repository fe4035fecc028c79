use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::steps::Step2;

/// An explicit walk from the origin.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Walk {
    steps: Vec<Step2>,
}

impl Walk {
    pub fn new(steps: Vec<Step2>) -> Self {
        Walk { steps }
    }

    /// Parses `r`, `u`, `d` letters (right, up, diagonal).
    pub fn from_letters(s: &str) -> Option<Self> {
        s.chars()
            .map(|c| match c {
                'r' => Some(Step2::RIGHT),
                'u' => Some(Step2::UP),
                'd' => Some(Step2::DIAGONAL),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(Walk::new)
    }

    pub fn steps(&self) -> &[Step2] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn endpoint(&self) -> (u64, u64) {
        self.steps
            .iter()
            .fold((0, 0), |(x, y), s| (x + s.dx() as u64, y + s.dy() as u64))
    }

    /// Heights `h_0 = 0, h_1, ..., h_n` where `h_i = y_i - x_i`.
    pub fn heights(&self) -> Vec<i64> {
        let mut h = Vec::with_capacity(self.steps.len() + 1);
        h.push(0);
        let mut cur = 0i64;
        for s in &self.steps {
            cur += s.height_change();
            h.push(cur);
        }
        h
    }

    /// Mirror image across `y = x`.
    pub fn reflect(&self) -> Walk {
        Walk::new(self.steps.iter().map(Step2::reflect).collect())
    }
}

/// The four walk statistics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Stat {
    /// Losing times.
    A1,
    /// Break-even times.
    A2,
    /// Last break-even time.
    A3,
    /// Sign changes.
    A4,
}

impl FromStr for Stat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "a1" => Ok(Stat::A1),
            "a2" => Ok(Stat::A2),
            "a3" => Ok(Stat::A3),
            "a4" => Ok(Stat::A4),
            other => Err(format!("unknown statistic {other:?} (expected a1..a4)")),
        }
    }
}

impl fmt::Display for Stat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Stat::A1 => "a1",
            Stat::A2 => "a2",
            Stat::A3 => "a3",
            Stat::A4 => "a4",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct StatVector {
    pub a1: u32,
    pub a2: u32,
    pub a3: u32,
    pub a4: u32,
}

impl StatVector {
    pub fn get(&self, stat: Stat) -> u32 {
        match stat {
            Stat::A1 => self.a1,
            Stat::A2 => self.a2,
            Stat::A3 => self.a3,
            Stat::A4 => self.a4,
        }
    }

    pub fn as_array(&self) -> [u32; 4] {
        [self.a1, self.a2, self.a3, self.a4]
    }
}

/// Evaluates the four statistics on an explicit walk.
///
/// With heights `h_i = y_i - x_i`:
/// - `a1` counts `i >= 1` with `h_i < 0` or `h_{i-1} < 0`: the step into
///   point `i` starts or ends below the diagonal. For unit steps this is the
///   usual rule (below, or back on the diagonal from below); a jump such as
///   `(0, 2)` from height -1 to 1 also counts;
/// - `a2` counts `i >= 1` with `h_i = 0`;
/// - `a3` is the largest such `i`, or 0 if the walk never returns;
/// - `a4` counts `1 <= i <= n-1` with `h_{i-1} * h_{i+1} < 0`.
pub fn compute_stats(walk: &Walk) -> StatVector {
    let h = walk.heights();
    let mut v = StatVector::default();
    for i in 1..h.len() {
        if h[i] < 0 || h[i - 1] < 0 {
            v.a1 += 1;
        }
        if h[i] == 0 {
            v.a2 += 1;
            v.a3 = i as u32;
        }
        if i + 1 < h.len() && h[i - 1].signum() * h[i + 1].signum() < 0 {
            v.a4 += 1;
        }
    }
    v
}
