//! Exact occupancy probabilities for the two-urn ball-exchange chain.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use weylkit_core::combinatorics::binomial;

use crate::error::FormulasError;
use crate::util::{rational_pow, sign};

/// `lambda_n^{(i,j)} = [z^n] (1+z)^i (1-z)^j`, the signed convolution
/// `sum_t C(i, t) C(j, n-t) (-1)^{n-t}`.
pub fn ehrenfest_lambda(n: u32, i: u32, j: u32) -> BigInt {
    let mut sum = BigInt::zero();
    for t in 0..=n {
        if t > i || n - t > j {
            continue;
        }
        sum += binomial(i.into(), t.into()) * binomial(j.into(), (n - t).into()) * sign(n - t);
    }
    sum
}

/// Probability that the ball-exchange chain on `m` balls moves from `a0`
/// balls in the first urn to `a` balls after exactly `n` single-ball moves:
///
/// `2^{-m} * sum_j lambda_j^{(a0, m-a0)} * lambda_{m-a}^{(m-j, j)} *
/// (1 - 2j/m)^n`.
pub fn ehrenfest_prob(m: u32, n: u32, a0: u32, a: u32) -> Result<BigRational, FormulasError> {
    if m == 0 {
        return Err(FormulasError::out_of_range(
            "ehrenfest_prob",
            "need m >= 1".to_string(),
        ));
    }
    if a0 > m || a > m {
        return Err(FormulasError::out_of_range(
            "ehrenfest_prob",
            format!("need 0 <= a0, a <= m = {m}, got a0 = {a0}, a = {a}"),
        ));
    }
    let b0 = m - a0;
    let mut sum = BigRational::zero();
    for j in 0..=m {
        let weight = BigRational::from_integer(
            ehrenfest_lambda(j, a0, b0) * ehrenfest_lambda(m - a, m - j, j),
        );
        if weight.is_zero() {
            continue;
        }
        let rate = BigRational::new(BigInt::from(m) - BigInt::from(2 * j), BigInt::from(m));
        sum += weight * rational_pow(&rate, n);
    }
    Ok(sum / BigRational::from_integer(BigInt::from(2).pow(m)))
}
