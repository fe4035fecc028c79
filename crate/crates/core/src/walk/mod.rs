//! Walks, step sets, the four walk statistics, and the brute-force oracle.

mod oracle;
mod region;
mod stats;
mod steps;

pub use oracle::{GrandPolynomial, Oracle, OracleError, DEFAULT_ORACLE_LIMIT};
pub use region::{classify_region_3d, Region3};
pub use stats::{compute_stats, Stat, StatVector, Walk};
pub use steps::{Step, Step2, Step3, StepError, StepSet, StepSet2, StepSet3};
