use thiserror::Error;
use weylkit_core::CoreError;

/// Errors reported by the closed-form number families.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulasError {
    /// An index tuple falls outside the family's domain.
    #[error("{family}: {detail}")]
    OutOfRange {
        /// Which family rejected the indices.
        family: &'static str,
        /// Human-readable description of the violated bound.
        detail: String,
    },
    /// A coefficient-level failure, e.g. an inexact polynomial division.
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl FormulasError {
    pub(crate) fn out_of_range(family: &'static str, detail: impl Into<String>) -> Self {
        FormulasError::OutOfRange {
            family,
            detail: detail.into(),
        }
    }
}
