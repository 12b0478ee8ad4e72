use std::path::PathBuf;

use gtopx::landscape::LandscapeError;
use gtopx::vectors::VectorParseError;
use gtopx::SuiteError;
use thiserror::Error;

/// Exit status for bad arguments, unreadable input or dimension mismatches.
pub const EXIT_USAGE: i32 = 2;
/// Exit status when the model cannot evaluate a well-formed input.
pub const EXIT_EVALUATION: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Parse {
        path: PathBuf,
        #[source]
        source: VectorParseError,
    },
    #[error(transparent)]
    Suite(#[from] SuiteError),
    #[error(transparent)]
    Landscape(#[from] LandscapeError),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Suite(e) | CliError::Landscape(LandscapeError::Suite(e)) => suite_code(e),
            _ => EXIT_USAGE,
        }
    }
}

fn suite_code(e: &SuiteError) -> i32 {
    match e {
        SuiteError::Evaluation { .. } => EXIT_EVALUATION,
        SuiteError::UnknownBenchmark(_) | SuiteError::Dimension { .. } | SuiteError::InvalidFlybyPlanet { .. } => {
            EXIT_USAGE
        }
    }
}
