//! Error type for series construction and manipulation.

use thiserror::Error;
use weylkit_core::CoreError;

/// Errors reported by series operations.
///
/// Analytic preconditions (a vanishing or unit constant term) are checked up
/// front, and the offending constant term is echoed back verbatim so the
/// caller can see exactly which value broke the requirement.
#[derive(Debug, Error)]
pub enum SeriesError {
    /// An operation that needs a vanishing constant term was handed a series
    /// whose constant term is nonzero.
    #[error("{operation} requires a series with constant term 0, but the constant term is {found}")]
    ConstantTermNotZero {
        /// Name of the rejected operation.
        operation: &'static str,
        /// Canonical rendering of the offending constant term.
        found: String,
    },

    /// An operation that needs a unit constant term was handed a series whose
    /// constant term differs from 1.
    #[error("{operation} requires a series with constant term 1, but the constant term is {found}")]
    ConstantTermNotOne {
        /// Name of the rejected operation.
        operation: &'static str,
        /// Canonical rendering of the offending constant term.
        found: String,
    },

    /// Division was attempted by a series whose constant term is not an
    /// invertible rational constant.
    #[error(
        "division requires a divisor whose constant term is a nonzero rational \
         constant, but the constant term is {found}"
    )]
    NonInvertibleConstantTerm {
        /// Canonical rendering of the offending constant term.
        found: String,
    },

    /// A system of equations was assembled from parts of inconsistent arity.
    #[error("the system declares {expected} unknowns but one part refers to {found}")]
    ArityMismatch {
        /// Number of unknowns the system declares.
        expected: usize,
        /// Number of unknowns the offending part refers to.
        found: usize,
    },

    /// The requested truncation order is too small for the operation to say
    /// anything meaningful.
    #[error("{operation} needs truncation order at least {required}, got {found}")]
    OrderTooSmall {
        /// Name of the rejected operation.
        operation: &'static str,
        /// Smallest acceptable truncation order.
        required: usize,
        /// Order that was actually requested.
        found: usize,
    },

    /// The raise-power generating function is only defined for gate exponents
    /// of at least two.
    #[error("the raise-power family needs a gate exponent of at least 2, got {found}")]
    GatePowerTooSmall {
        /// Exponent that was actually requested.
        found: u32,
    },

    /// An underlying coefficient or operator computation failed.
    #[error(transparent)]
    Core(#[from] CoreError),
}
