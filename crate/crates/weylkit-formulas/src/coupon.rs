//! Exact waiting-time laws for collecting all of `m` coupon types, drawing
//! one coupon or an ordered pair of distinct coupons per step.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use weylkit_core::combinatorics::{binomial, factorial};

use crate::error::FormulasError;
use crate::stirling::{gen_stirling_rs, stirling2};
use crate::util::{harmonic, rational_pow};

/// How many coupons each draw produces.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CouponGroup {
    /// One coupon per draw.
    Single,
    /// An ordered pair of two distinct coupons per draw.
    Pair,
}

impl CouponGroup {
    /// Group size as an integer (1 or 2).
    pub fn size(self) -> u32 {
        match self {
            CouponGroup::Single => 1,
            CouponGroup::Pair => 2,
        }
    }
}

impl TryFrom<u8> for CouponGroup {
    type Error = FormulasError;

    fn try_from(value: u8) -> Result<Self, FormulasError> {
        match value {
            1 => Ok(CouponGroup::Single),
            2 => Ok(CouponGroup::Pair),
            other => Err(FormulasError::out_of_range(
                "coupon group",
                format!("group must be 1 or 2, got {other}"),
            )),
        }
    }
}

/// Probability that all `m` coupon types have appeared within `n` draws.
///
/// Single draws: `m!/m^n * {n, m}`. Pair draws: `m!/(m(m-1))^n * {n, m}_{2,2}`.
pub fn coupon_collector(m: u32, n: u32, group: CouponGroup) -> Result<BigRational, FormulasError> {
    if m < group.size() {
        return Err(FormulasError::out_of_range(
            "coupon_collector",
            format!("need m >= {}, got m = {m}", group.size()),
        ));
    }
    let stirling = match group {
        CouponGroup::Single => {
            if n < m {
                return Ok(BigRational::zero());
            }
            stirling2(n, m)?
        }
        CouponGroup::Pair => {
            if 2 * n < m {
                return Ok(BigRational::zero());
            }
            gen_stirling_rs(n, m, 2, 2)?
        }
    };
    let draws = match group {
        CouponGroup::Single => BigInt::from(m),
        CouponGroup::Pair => BigInt::from(m) * BigInt::from(m - 1),
    };
    Ok(BigRational::from_integer(factorial(m.into()) * stirling)
        / rational_pow(&BigRational::from_integer(draws), n))
}

/// Expected number of draws until all `m` coupon types have appeared.
///
/// Single draws: `m * H_m`. Pair draws: the closed form
/// `m(m-1)/(2m-1) * (H_m + 1/(2m-1) - (-1)^m / ((m+1) C(2m-1, m+1)))`.
pub fn coupon_expected(m: u32, group: CouponGroup) -> Result<BigRational, FormulasError> {
    if m < group.size() {
        return Err(FormulasError::out_of_range(
            "coupon_expected",
            format!("need m >= {}, got m = {m}", group.size()),
        ));
    }
    match group {
        CouponGroup::Single => Ok(BigRational::from_integer(BigInt::from(m)) * harmonic(m)),
        CouponGroup::Pair => {
            let odd = BigInt::from(2 * m) - BigInt::one();
            let lead = BigRational::new(BigInt::from(m) * BigInt::from(m - 1), odd.clone());
            let mut inner = harmonic(m) + BigRational::new(BigInt::one(), odd);
            let tail = BigRational::new(
                BigInt::one(),
                BigInt::from(m + 1) * binomial((2 * m - 1).into(), (m + 1).into()),
            );
            if m % 2 == 0 {
                inner -= tail;
            } else {
                inner += tail;
            }
            Ok(lead * inner)
        }
    }
}
