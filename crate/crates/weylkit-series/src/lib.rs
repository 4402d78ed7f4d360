//! Exact truncated power series and the solvers built on them: ring and
//! analytic operations with explicit truncation tracking, polynomial
//! first-order systems solved order by order, closed-form generating
//! functions for the classical operator families, and a series-level identity
//! check for iterated multiply-then-differentiate.
//!
//! Coefficients are the exact symbolic [`Coefficient`] values of
//! `weylkit-core`, so a series can carry formal markers (deformation
//! parameters, raise/lower counters) through every operation and be compared
//! verbatim against the output of the operator rewriting engine. Nothing here
//! floats: fractional powers, trigonometric kernels, and exponentials are all
//! generated by the first-order equations they satisfy.
//!
//! [`Coefficient`]: weylkit_core::Coefficient

mod check;
mod error;
mod gf;
mod ode;
mod polyspec;
mod series;

pub use check::exp_times_derivative_check;
pub use error::SeriesError;
pub use gf::{closed_gf, GfFamily};
pub use ode::{solve_increasing_tree, OdeSystem, SystemPolynomial};
pub use polyspec::PolynomialSpec;
pub use series::TruncatedSeries;
