//! Exact normal ordering for boson-like operator words.
//!
//! The algebra has, per mode, a raising letter `X` and a lowering letter `D`
//! subject to `D X = 1 + c X D` with a configurable deformation `c`
//! (`c = 1` is the classical case, where the rule reads `D X = X D + 1`);
//! letters of distinct modes commute freely. This crate provides:
//!
//! - [`Coefficient`]: canonical sparse multivariate polynomials over exact
//!   rationals, with declared parameter sets;
//! - [`Word`] / [`OperatorPolynomial`]: sums of letter words;
//! - [`NormalForm`]: operators rewritten into the `X^a D^b` basis, with
//!   products, powers, duals, and constant terms;
//! - [`ModelPolynomial`]: the action on polynomials, an independent
//!   semantics for validating the rewrite engine;
//! - [`normal_order_by_pairings`]: a second independent route to normal
//!   forms by summing over contraction pairings.

mod arith;
mod coeff;
mod error;
mod model;
mod op;
mod pairing;
mod params;
mod rewrite;
mod word;

pub use coeff::Coefficient;
pub use error::CoreError;
pub use model::ModelPolynomial;
pub use op::{deformation_integer, NormalForm, NormalMonomial, OperatorPolynomial};
pub use pairing::{normal_order_by_pairings, DEFAULT_PAIRING_BOUND};
pub use params::Parameters;
pub use rewrite::RewriteStrategy;
pub use word::{Letter, LetterKind, Word};

/// Exact integer combinatorics helpers (factorials, binomials, and
/// friends), shared by the sibling crates.
pub mod combinatorics {
    pub use crate::arith::{
        binomial, factorial, falling_factorial, odd_double_factorial, rising_factorial,
    };
}
