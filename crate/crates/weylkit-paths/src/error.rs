//! Error type for path counting and continued-fraction expansion.

use thiserror::Error;
use weylkit_core::CoreError;

/// Errors reported by the lattice-path and continued-fraction operations.
#[derive(Debug, Error)]
pub enum PathsError {
    /// A continued fraction must keep at least one level.
    #[error("a continued fraction needs truncation depth at least 1")]
    ZeroDepth,

    /// The requested expansion order needs more levels than the fraction
    /// keeps: a path of length `2 d` can touch altitude `d`, so coefficients
    /// through `z^N` are only exact when the depth exceeds `N / 2`.
    #[error(
        "expanding through order {order} needs depth at least {required}, \
         but the fraction keeps only {found} levels"
    )]
    InsufficientDepth {
        /// Expansion order that was requested.
        order: usize,
        /// Smallest depth that leaves those coefficients unperturbed.
        required: usize,
        /// Depth the fraction actually keeps.
        found: usize,
    },

    /// An underlying coefficient computation failed.
    #[error(transparent)]
    Core(#[from] CoreError),
}
