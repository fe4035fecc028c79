use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A lattice step with non-negative components, never the zero vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step<const D: usize>([u32; D]);

pub type Step2 = Step<2>;
pub type Step3 = Step<3>;

impl<const D: usize> Step<D> {
    pub fn new(components: [u32; D]) -> Result<Self, StepError> {
        if components.iter().all(|&c| c == 0) {
            return Err(StepError::ZeroStep);
        }
        Ok(Step(components))
    }

    pub fn components(&self) -> [u32; D] {
        self.0
    }
}

impl Step2 {
    pub const RIGHT: Step2 = Step([1, 0]);
    pub const UP: Step2 = Step([0, 1]);
    pub const DIAGONAL: Step2 = Step([1, 1]);

    pub fn dx(&self) -> u32 {
        self.0[0]
    }

    pub fn dy(&self) -> u32 {
        self.0[1]
    }

    /// Change in height `y - x` caused by this step.
    pub fn height_change(&self) -> i64 {
        self.0[1] as i64 - self.0[0] as i64
    }

    /// Mirror image across the diagonal.
    pub fn reflect(&self) -> Step2 {
        Step([self.0[1], self.0[0]])
    }
}

impl Step3 {
    pub const UNIT: [Step3; 3] = [Step([1, 0, 0]), Step([0, 1, 0]), Step([0, 0, 1])];
}

impl<const D: usize> fmt::Display for Step<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StepError {
    #[error("the zero step is not allowed")]
    ZeroStep,
    #[error("step set is empty")]
    Empty,
    #[error("duplicate step {0}")]
    Duplicate(String),
    #[error("step {got:?} must have {expected} comma-separated components")]
    Arity { expected: usize, got: String },
    #[error("invalid step component {0:?}")]
    Component(String),
}

/// A non-empty set of distinct non-zero steps, stored in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StepSet<const D: usize> {
    steps: Vec<Step<D>>,
}

pub type StepSet2 = StepSet<2>;
pub type StepSet3 = StepSet<3>;

impl<const D: usize> StepSet<D> {
    pub fn new(steps: impl IntoIterator<Item = Step<D>>) -> Result<Self, StepError> {
        let mut steps: Vec<Step<D>> = steps.into_iter().collect();
        if steps.is_empty() {
            return Err(StepError::Empty);
        }
        steps.sort();
        if let Some(w) = steps.windows(2).find(|w| w[0] == w[1]) {
            return Err(StepError::Duplicate(w[0].to_string()));
        }
        Ok(StepSet { steps })
    }

    pub fn from_components(
        components: impl IntoIterator<Item = [u32; D]>,
    ) -> Result<Self, StepError> {
        let steps = components
            .into_iter()
            .map(Step::new)
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(steps)
    }

    pub fn steps(&self) -> &[Step<D>] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// All non-empty subsets, ordered by size and then lexicographically.
    pub fn subsets(&self) -> Vec<StepSet<D>> {
        let k = self.steps.len();
        let mut out: Vec<Vec<Step<D>>> = (1u64..(1u64 << k))
            .map(|mask| {
                (0..k)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| self.steps[i])
                    .collect()
            })
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out.into_iter().map(|steps| StepSet { steps }).collect()
    }

    /// Compact label in the `ij` notation, e.g. `{01, 10}`; components
    /// above 9 are separated by dots.
    pub fn label(&self) -> String {
        let parts: Vec<String> = self
            .steps
            .iter()
            .map(|s| {
                let c = s.components();
                if c.iter().all(|&x| x < 10) {
                    c.iter().map(|x| x.to_string()).collect()
                } else {
                    c.iter()
                        .map(|x| x.to_string())
                        .collect::<Vec<_>>()
                        .join(".")
                }
            })
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl StepSet2 {
    /// `{(1,0), (0,1)}`
    pub fn up_right() -> Self {
        StepSet::new([Step2::RIGHT, Step2::UP]).expect("valid")
    }

    /// `{(1,0), (0,1), (1,1)}`
    pub fn king() -> Self {
        StepSet::new([Step2::RIGHT, Step2::UP, Step2::DIAGONAL]).expect("valid")
    }

    /// Closed under `(dx, dy) -> (dy, dx)`.
    pub fn is_diagonal_symmetric(&self) -> bool {
        self.steps.iter().all(|s| self.steps.contains(&s.reflect()))
    }
}

impl StepSet3 {
    pub fn unit() -> Self {
        StepSet::new(Step3::UNIT).expect("valid")
    }
}

/// Step sets parse from `dx,dy(;dx,dy)*`; whitespace is ignored.
impl<const D: usize> FromStr for StepSet<D> {
    type Err = StepError;

    fn from_str(s: &str) -> Result<Self, StepError> {
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let steps = cleaned
            .split(';')
            .filter(|p| !p.is_empty())
            .map(|part| {
                let comps: Vec<&str> = part.split(',').collect();
                if comps.len() != D {
                    return Err(StepError::Arity {
                        expected: D,
                        got: part.to_string(),
                    });
                }
                let mut arr = [0u32; D];
                for (slot, c) in arr.iter_mut().zip(comps) {
                    *slot = c.parse().map_err(|_| StepError::Component(c.to_string()))?;
                }
                Step::new(arr)
            })
            .collect::<Result<Vec<_>, _>>()?;
        StepSet::new(steps)
    }
}

impl<const D: usize> fmt::Display for StepSet<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let s: StepSet2 = "1,0;0,1;1,1".parse().unwrap();
        assert_eq!(s, StepSet2::king());
        assert_eq!(s.to_string(), "0,1;1,0;1,1");
        let s3: StepSet3 = " 1,0,0 ; 0,1,0;0,0,1 ".parse().unwrap();
        assert_eq!(s3, StepSet3::unit());
    }

    #[test]
    fn parse_errors() {
        assert_eq!("".parse::<StepSet2>(), Err(StepError::Empty));
        assert_eq!("0,0".parse::<StepSet2>(), Err(StepError::ZeroStep));
        assert!(matches!(
            "1,0;1,0".parse::<StepSet2>(),
            Err(StepError::Duplicate(_))
        ));
        assert!(matches!(
            "1,0,0".parse::<StepSet2>(),
            Err(StepError::Arity { .. })
        ));
        assert!(matches!(
            "1,-1".parse::<StepSet2>(),
            Err(StepError::Component(_))
        ));
    }

    #[test]
    fn subsets_are_canonical() {
        let s: StepSet2 = "1,0;0,1;1,1;2,0;0,2".parse().unwrap();
        let subs = s.subsets();
        assert_eq!(subs.len(), 31);
        assert_eq!(subs[0].label(), "{01}");
        assert_eq!(subs[5].label(), "{01, 02}");
        assert_eq!(subs[30].label(), "{01, 02, 10, 11, 20}");
    }

    #[test]
    fn symmetry() {
        assert!(StepSet2::king().is_diagonal_symmetric());
        assert!(!"0,1;2,0"
            .parse::<StepSet2>()
            .unwrap()
            .is_diagonal_symmetric());
    }
}
