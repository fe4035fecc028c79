//! Exact enumeration and experimental asymptotics for lattice walks.
//!
//! The crate counts walks with an arbitrary set of non-negative steps,
//! tracks walk statistics (losing times, break-even times, last break-even
//! time, sign changes) as generating polynomials, extracts exact moments,
//! cross-checks them against closed-form generating functions, and fits
//! asymptotic constants over ranges of walk sizes.

pub mod algebra;
pub mod asymptotics;
pub mod closed_forms;
pub mod enumerate;
pub mod moments;
pub mod record;
pub mod walk;
