use thiserror::Error;

use crate::astro::AstroError;

/// Failure while evaluating a trajectory model.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    Dimension { expected: usize, got: usize },
    /// `leg` is 1-based.
    #[error("leg {leg}: {source}")]
    Leg {
        leg: usize,
        #[source]
        source: AstroError,
    },
    #[error(transparent)]
    Astro(#[from] AstroError),
}

impl ModelError {
    pub(crate) fn leg(leg: usize) -> impl FnOnce(AstroError) -> ModelError {
        move |source| ModelError::Leg { leg, source }
    }
}
