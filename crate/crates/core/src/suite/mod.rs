//! The ten benchmark instances behind one evaluation call.
//!
//! | id | name               | o | n  | m |
//! |----|--------------------|---|----|---|
//! | 1  | Cassini1           | 1 | 6  | 4 |
//! | 2  | Cassini2           | 1 | 22 | 0 |
//! | 3  | Messenger (reduced)| 1 | 18 | 0 |
//! | 4  | Messenger (full)   | 1 | 26 | 0 |
//! | 5  | GTOC1              | 1 | 8  | 6 |
//! | 6  | Rosetta            | 1 | 22 | 0 |
//! | 7  | Sagas              | 1 | 12 | 2 |
//! | 8  | Cassini1-MINLP     | 1 | 10 | 4 |
//! | 9  | Cassini1-MO        | 2 | 6  | 5 |
//! | 10 | Cassini1-MO-MINLP  | 2 | 10 | 5 |
//!
//! Constraints follow the `g >= 0` feasibility convention.

mod bounds;
mod instances;

use std::sync::OnceLock;

use thiserror::Error;

use crate::astro::{AnalyticEphemeris, BodyId, Ephemeris};
use crate::error::ModelError;

pub use bounds::{parse_bounds, BoundsTable, BOUNDS_SHA256, BOUNDS_SOURCE};
pub use instances::{
    cassini1_mission, decode_flyby_planet, minlp_mission, mission_dsm, GTOC1_INITIAL_MASS, GTOC1_ISP,
    GTOC1_LAUNCH_ALLOWANCE, MO_BOUND_CASSINI1, MO_BOUND_MINLP, SAGAS_ONBOARD_LIMIT, SAGAS_TOTAL_LIMIT,
};

pub const BENCHMARK_COUNT: u32 = 10;

/// Immutable description of one instance.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemSpec {
    pub id: u32,
    pub name: &'static str,
    pub n_obj: usize,
    pub n_cont: usize,
    pub n_int: usize,
    /// `n_cont + n_int`.
    pub n: usize,
    pub m: usize,
    pub lb: Vec<f64>,
    pub ub: Vec<f64>,
    /// Start body, fly-bys, target. For the mixed-integer instances this is
    /// the sequence the integer slots default to.
    pub default_sequence: Vec<BodyId>,
    /// Zero-based positions of the integer variables.
    pub integer_slots: Vec<usize>,
    pub best_known_f: Option<f64>,
}

impl ProblemSpec {
    pub fn is_integer(&self, index: usize) -> bool {
        self.integer_slots.contains(&index)
    }

    /// Whether `x` lies inside the box, bounds included.
    pub fn in_bounds(&self, x: &[f64]) -> bool {
        x.len() == self.n && x.iter().zip(self.lb.iter().zip(&self.ub)).all(|(v, (l, u))| *l <= *v && *v <= *u)
    }
}

/// Objectives and constraints of one evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct EvalResult {
    pub f: Vec<f64>,
    pub g: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SuiteError {
    #[error("unknown benchmark {0}")]
    UnknownBenchmark(i64),
    #[error("benchmark {id}: dimension mismatch: expected {expected} variables, got {got}")]
    Dimension { id: u32, expected: usize, got: usize },
    #[error("benchmark {id}: invalid fly-by planet {value} in variable {}", index + 1)]
    InvalidFlybyPlanet { id: u32, index: usize, value: f64 },
    #[error("benchmark {id}: {source}")]
    Evaluation {
        id: u32,
        #[source]
        source: ModelError,
    },
}

/// True iff every constraint is non-negative.
pub fn is_feasible(r: &EvalResult) -> bool {
    r.g.iter().all(|g| *g >= 0.0)
}

/// All ten specs, in id order.
pub fn problems() -> &'static [ProblemSpec] {
    static SPECS: OnceLock<Vec<ProblemSpec>> = OnceLock::new();
    SPECS.get_or_init(|| {
        let table = parse_bounds(BOUNDS_SOURCE).expect("bundled bounds table is valid");
        (1..=BENCHMARK_COUNT)
            .map(|id| {
                let (lb, ub) = table.get(&id).cloned().expect("bounds for every instance");
                instances::spec(id, lb, ub)
            })
            .collect()
    })
}

pub fn info(id: u32) -> Result<&'static ProblemSpec, SuiteError> {
    match id {
        1..=BENCHMARK_COUNT => Ok(&problems()[id as usize - 1]),
        _ => Err(SuiteError::UnknownBenchmark(id.into())),
    }
}

/// Evaluates instance `id` at `x` with the bundled ephemerides.
///
/// `x` is not clipped to the bounds. Integer slots are rounded half away
/// from zero and must land in 1..=9.
pub fn evaluate(id: u32, x: &[f64]) -> Result<EvalResult, SuiteError> {
    evaluate_with(&AnalyticEphemeris, id, x)
}

/// [`evaluate`] against a caller-provided ephemeris.
pub fn evaluate_with<E: Ephemeris + ?Sized>(eph: &E, id: u32, x: &[f64]) -> Result<EvalResult, SuiteError> {
    let spec = info(id)?;
    if x.len() != spec.n {
        return Err(SuiteError::Dimension { id, expected: spec.n, got: x.len() });
    }
    instances::evaluate(eph, spec, x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions_match_published_table() {
        let expected = [
            (1, 6, 4, 0),
            (1, 22, 0, 0),
            (1, 18, 0, 0),
            (1, 26, 0, 0),
            (1, 8, 6, 0),
            (1, 22, 0, 0),
            (1, 12, 2, 0),
            (1, 10, 4, 4),
            (2, 6, 5, 0),
            (2, 10, 5, 4),
        ];
        for (k, (o, n, m, ni)) in expected.into_iter().enumerate() {
            let s = info(k as u32 + 1).unwrap();
            assert_eq!((s.n_obj, s.n, s.m, s.n_int), (o, n, m, ni), "{}", s.name);
            assert_eq!(s.n, s.n_cont + s.n_int);
            assert_eq!(s.lb.len(), s.n);
            assert!(s.lb.iter().zip(&s.ub).all(|(l, u)| l < u));
        }
        assert_eq!(info(1).unwrap().name, "Cassini1");
        assert_eq!(info(8).unwrap().integer_slots, vec![6, 7, 8, 9]);
    }

    #[test]
    fn unknown_ids() {
        assert_eq!(info(0).unwrap_err(), SuiteError::UnknownBenchmark(0));
        assert_eq!(info(11).unwrap_err(), SuiteError::UnknownBenchmark(11));
        assert!(matches!(evaluate(11, &[0.0]), Err(SuiteError::UnknownBenchmark(11))));
    }

    #[test]
    fn feasibility_rule() {
        let r = |g: Vec<f64>| EvalResult { f: vec![0.0], g };
        assert!(is_feasible(&r(vec![])));
        assert!(is_feasible(&r(vec![0.0, 0.5])));
        assert!(!is_feasible(&r(vec![-1e-12])));
    }

    #[test]
    fn dimension_error_reports_expected() {
        assert_eq!(evaluate(1, &[1.0, 2.0, 3.0]).unwrap_err(), SuiteError::Dimension { id: 1, expected: 6, got: 3 });
    }

    #[test]
    fn best_known_values() {
        assert_eq!(info(1).unwrap().best_known_f, Some(4.9307));
        assert_eq!(info(5).unwrap().best_known_f, Some(-1581950.0));
        assert_eq!(info(9).unwrap().best_known_f, None);
        assert_eq!(info(10).unwrap().best_known_f, None);
    }
}
