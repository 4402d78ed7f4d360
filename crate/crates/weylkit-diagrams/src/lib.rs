//! Labelled diagrams for normally ordered operator powers.
//!
//! Raising to a power `n` an operator that is a sum of gates — monomials
//! `X^r D^s` — produces a normal form whose coefficients count combinatorial
//! objects: sequences of `n` labelled gates in which each input is either
//! left free or bound to a dangling output of an earlier gate. This crate
//! builds those diagrams explicitly and cross-checks them against faster
//! ways of reaching the same numbers:
//!
//! - [`transfer_coefficients`] runs the two-counter recurrence that tracks
//!   only how many outputs and inputs are still free, computing the whole
//!   coefficient table without materialising a single diagram;
//! - [`enumerate_diagrams`] materialises every diagram (within configured
//!   [`EnumerationLimits`]) so that finer statistics can be read off;
//! - [`crossing_number`] embeds a diagram in the plane and counts crossing
//!   edge pairs, the statistic whose generating polynomial matches the
//!   deformed rewrite system's coefficients;
//! - [`FerrersBoard`], [`rook_count`], and [`RookEncoding`] translate
//!   diagrams into non-attacking rook placements on a staircase board, a
//!   third route to the same coefficients and a lossless serialisation.
//!
//! All weights are exact rational functions of the ambient parameters; no
//! floating point is involved anywhere.

mod basis;
mod contour;
mod crossings;
mod diagram;
mod enumerate;
mod error;
mod transfer;

pub use basis::{Gate, GateBasis};
pub use contour::{rook_count, ContourLetter, FerrersBoard, RookEncoding};
pub use crossings::crossing_number;
pub use diagram::{Component, LabelledDiagram, OutputRef, PlacedGate};
pub use enumerate::{
    crossing_weighted_count, enumerate_diagrams, enumerate_sequence_diagrams, Enumeration,
    EnumerationLimits,
};
pub use error::DiagramsError;
pub use transfer::transfer_coefficients;
