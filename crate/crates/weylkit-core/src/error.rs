//! Error type shared by all operations in this crate.

use thiserror::Error;

/// Errors reported by coefficient arithmetic, operator construction, and
/// normal-ordering routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    /// A parameter name is not a valid identifier.
    #[error("invalid parameter name `{0}`: expected [A-Za-z_][A-Za-z0-9_]*")]
    InvalidParameterName(String),

    /// The same name was declared twice in one parameter set.
    #[error("duplicate parameter name `{0}` in declaration")]
    DuplicateParameter(String),

    /// A name was used that is not part of the declared parameter set.
    #[error("unknown parameter `{name}`; declared parameters are [{declared}]")]
    UnknownParameter { name: String, declared: String },

    /// Polynomial division left a nonzero remainder.
    #[error("exact polynomial division failed: nonzero remainder")]
    InexactDivision,

    /// A letter refers to a mode outside the operator's declared mode count.
    #[error("mode index {mode} out of range: operator is declared on {modes} mode(s)")]
    ModeOutOfRange { mode: usize, modes: usize },

    /// Duality is only defined for the undeformed algebra.
    #[error("dual is only defined for deformation 1, but deformation is `{0}`")]
    DualOfDeformed(String),

    /// Pairing-based normal ordering refuses oversized words because the
    /// number of pairings grows faster than exponentially with length.
    #[error(
        "word of length {len} exceeds the pairing-expansion bound of {bound} letters; \
         raise the bound explicitly to force the computation"
    )]
    PairingBoundExceeded { len: usize, bound: usize },

    /// Pairing-based normal ordering handles one mode at a time.
    #[error("pairing-based normal ordering requires a single-mode word")]
    PairingRequiresSingleMode,

    /// Pairing-based normal ordering is stated for the undeformed algebra.
    #[error("pairing-based normal ordering requires deformation 1, found `{0}`")]
    PairingRequiresUndeformed(String),

    /// Two values built over different parameter declarations were combined.
    #[error("parameter contexts differ: [{left}] vs [{right}]")]
    ContextMismatch { left: String, right: String },

    /// Two operators with different deformations were combined.
    #[error("deformations differ: `{left}` vs `{right}`")]
    DeformationMismatch { left: String, right: String },

    /// Two values declared over different mode counts were combined.
    #[error("mode counts differ: {left} vs {right}")]
    ModeCountMismatch { left: usize, right: usize },

    /// An exponent outside the supported range was requested.
    #[error("exponent {0} exceeds the supported range")]
    ExponentOverflow(u64),
}
