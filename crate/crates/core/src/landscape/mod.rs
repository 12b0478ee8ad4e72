//! Fitness-landscape tools: local sampling around a point, exhaustive
//! pairwise grids, improvement tracking, non-dominated filtering and CSV
//! export of the raw data.
//!
//! Everything here is deterministic. Random draws come from ChaCha8 with one
//! stream per sample index, so results do not depend on thread count or on
//! evaluation order.

mod export;
mod grid;
mod pareto;
mod sample;
mod track;

use std::io;
use std::path::PathBuf;

use thiserror::Error;

use crate::suite::SuiteError;

pub use export::{read_records, write_grid, write_records, RecordWriter};
pub use grid::{grid_axis, grid_pair, GridSlice, GRID_POINTS};
pub use pareto::{pareto_filter, pareto_indices};
pub use sample::{local_sample, mutation_draws, perturb, LocalSampler, SampleRecord};
pub use track::{percent_change, track_best, Improvement, ImprovementReport, SIGNIFICANT_PERCENT};

#[derive(Debug, Error)]
pub enum LandscapeError {
    #[error(transparent)]
    Suite(#[from] SuiteError),
    #[error("center has {got} values, instance {id} has {expected} variables")]
    CenterDimension { id: u32, expected: usize, got: usize },
    #[error("sample count must be at least 1")]
    EmptyCount,
    #[error("variable {} out of range for {n} variables", index + 1)]
    IndexOutOfRange { index: usize, n: usize },
    #[error("grid needs two distinct variables, got variable {} twice", .0 + 1)]
    SameIndex(usize),
    #[error("grid over integer variable unsupported (variable {})", .0 + 1)]
    IntegerGridVariable(usize),
    #[error("point {index} has {got} objectives, expected {expected}")]
    MixedLengths { index: usize, expected: usize, got: usize },
    #[error("point {0} has a non-finite objective")]
    NonFinitePoint(usize),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("{}: {source}", path.display())]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("{}: line {line}: {message}", path.display())]
    Format { path: PathBuf, line: u64, message: String },
}
