//! Error type for diagram construction, enumeration, and decoding.

use thiserror::Error;
use weylkit_core::CoreError;

/// Everything that can go wrong while building or enumerating diagrams.
#[derive(Error, Debug)]
pub enum DiagramsError {
    /// A gate must produce or consume something; the `(0, 0)` type would be
    /// an invisible identity vertex.
    #[error("a gate needs at least one output or input; (0, 0) is not a gate")]
    IdentityGate,

    /// Gate types within one basis must be distinct so that weights are
    /// unambiguous.
    #[error("gate type ({outputs}, {inputs}) appears twice in the basis")]
    DuplicateGate {
        /// Number of outputs of the repeated type.
        outputs: u32,
        /// Number of inputs of the repeated type.
        inputs: u32,
    },

    /// Exhaustive enumeration grows too fast to run unbounded; sizes past
    /// the configured limit are refused rather than silently truncated.
    #[error("enumeration of size {requested} exceeds the configured bound {bound}")]
    TooManyGates {
        /// Requested diagram size.
        requested: usize,
        /// Configured maximum size.
        bound: usize,
    },

    /// Companion bound on the number of distinct gate types.
    #[error("basis of {size} gate types exceeds the configured bound {bound}")]
    BasisTooLarge {
        /// Number of gate types supplied.
        size: usize,
        /// Configured maximum basis size.
        bound: usize,
    },

    /// A binding refers to a gate or output slot that does not exist, binds
    /// an output twice, or points forward in label order.
    #[error("invalid binding at gate {gate}, input slot {slot}: {reason}")]
    InvalidBinding {
        /// 1-based label of the gate whose input is at fault.
        gate: usize,
        /// Input slot index within that gate.
        slot: u32,
        /// What went wrong.
        reason: String,
    },

    /// A contour-plus-rooks encoding that does not describe any diagram.
    #[error("invalid diagram encoding: {reason}")]
    InvalidEncoding {
        /// What went wrong.
        reason: String,
    },

    /// An error bubbled up from the operator layer.
    #[error(transparent)]
    Core(#[from] CoreError),
}
