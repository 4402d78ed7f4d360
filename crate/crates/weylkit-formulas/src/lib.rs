//! Closed-form combinatorial number families: Stirling triangles of both
//! kinds and their multi-step generalizations, Bell-type row sums, matching
//! crossing polynomials, deformed integers, and exact discrete probability
//! laws (urn exchange, coupon collection) together with two path/matrix
//! counting sequences.
//!
//! Every family here is computed from its own closed form or recurrence,
//! independently of the operator rewriting engine in `weylkit-core`, so the
//! two sides can be used as cross-checks of one another. All arithmetic is
//! exact: big integers, big rationals, and [`Coefficient`] polynomials.
//!
//! [`Coefficient`]: weylkit_core::Coefficient

mod coupon;
mod counting;
mod ehrenfest;
mod error;
mod involution;
mod lah;
mod matchings;
mod qint;
mod stirling;
mod table;
mod util;

pub use coupon::{coupon_collector, coupon_expected, CouponGroup};
pub use counting::{duchon, matrix_counts};
pub use ehrenfest::{ehrenfest_lambda, ehrenfest_prob};
pub use error::FormulasError;
pub use involution::involution_coeff;
pub use lah::{lah_gamma, scherk_c};
pub use matchings::{matching_crossing_polynomial, touchard_riordan};
pub use qint::{q_factorial, q_integer, QInteger};
pub use stirling::{
    bell, gen_bell_22, gen_stirling_balanced, gen_stirling_rs, stirling1, stirling2,
    stirling2_from_sum,
};
pub use table::CoefficientTable;
