//! The GTOPX interplanetary trajectory benchmarks.
//!
//! * [`astro`] - ephemerides, Kepler propagation, Lambert, swing-bys.
//! * [`mga`] and [`mga_dsm`] - the two trajectory models.
//! * [`suite`] - the ten instances behind [`suite::evaluate`].
//! * [`landscape`] - sampling, grid search and Pareto utilities.
//! * [`vectors`] - the plain-text decision vector format.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod astro;
pub mod error;
pub mod landscape;
pub mod mga;
pub mod mga_dsm;
pub mod suite;
pub mod vectors;

pub use error::ModelError;
pub use suite::{evaluate, info, is_feasible, EvalResult, ProblemSpec, SuiteError};
