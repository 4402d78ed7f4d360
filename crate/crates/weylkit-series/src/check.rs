//! A series-level identity check for iterated multiply-then-differentiate.

use num_rational::BigRational;
use weylkit_core::{Coefficient, Parameters};
use weylkit_formulas::stirling1;

use crate::error::SeriesError;
use crate::series::TruncatedSeries;

/// Checks, on the monomial `f = x^m`, that applying the operator
/// `e^x * d/dx` a total of `n` times agrees with the one-shot evaluation
/// `e^(n x) * sum_k stirling1(n, k) * f^(k)(x)`.
///
/// Both sides are expanded as truncated series in `x` and compared exactly;
/// the returned boolean is the verdict. Each differentiation costs one order
/// of precision, so the comparison is made through order `order - n`.
///
/// # Errors
///
/// Returns [`SeriesError::OrderTooSmall`] when `order < m + n`, which would
/// leave no meaningful coefficients to compare.
pub fn exp_times_derivative_check(
    n: u32,
    m: u32,
    order: usize,
) -> Result<bool, SeriesError> {
    let required = (n as usize) + (m as usize);
    if order < required {
        return Err(SeriesError::OrderTooSmall {
            operation: "the multiply-differentiate comparison",
            required,
            found: order,
        });
    }
    let params = Parameters::empty();
    let monomial = TruncatedSeries::from_fn(&params, order, |k| {
        if k == m as usize {
            Coefficient::one(&params)
        } else {
            Coefficient::zero(&params)
        }
    });
    let expx = TruncatedSeries::variable(&params, order).exp()?;

    // Left side: n rounds of differentiate, then multiply by e^x.
    let mut left = monomial.clone();
    for _ in 0..n {
        left = left.differentiate().mul(&expx);
    }

    // Right side: e^(n x) times the Stirling-cycle combination of the
    // derivatives of the monomial.
    let compare_order = order - n as usize;
    let mut combination = TruncatedSeries::zero(&params, compare_order);
    let mut derivative = monomial;
    for k in 0..=n {
        let cycles = stirling1(n, k).expect("0 <= k <= n is always in range");
        let weight = Coefficient::from_rational(&params, BigRational::from_integer(cycles));
        combination = combination.add(&derivative.truncate(compare_order).scale(&weight));
        derivative = derivative.differentiate();
    }
    let scaled_exp = TruncatedSeries::variable(&params, order)
        .scale(&Coefficient::from_integer(&params, i64::from(n)))
        .exp()?;
    let right = scaled_exp.truncate(compare_order).mul(&combination);

    Ok(left.truncate(compare_order) == right)
}
