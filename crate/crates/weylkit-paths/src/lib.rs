//! Weighted lattice paths and truncated continued fractions.
//!
//! Normally ordering a word in raising and lowering letters is, coefficient
//! by coefficient, a walk: read the word right to left, climb on a raise,
//! earn the current altitude and descend on a lower. This crate makes the
//! walk side of that dictionary executable. [`weyl_path_ct`] extracts a
//! constant term without touching the rewrite system, [`lattice_count`]
//! totals the weights of arbitrary nonnegative step-set paths, and
//! [`jfraction_expand`] turns a truncated continued fraction into the very
//! same path generating function, one series division at the end.
//!
//! Everything is exact: weights are symbolic coefficients, so q-deformed
//! step weights and parameter-valued level terms cost nothing extra.

mod error;
mod jfraction;
mod steps;
mod walk;

pub use error::PathsError;
pub use jfraction::{jfraction_expand, JFractionSpec};
pub use steps::{lattice_count, Step, StepSet, WeightRule};
pub use walk::weyl_path_ct;
