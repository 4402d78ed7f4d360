//! Small exact-arithmetic helpers shared by the family implementations.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `x^n` for an exact rational base, by repeated squaring.
pub(crate) fn rational_pow(x: &BigRational, n: u32) -> BigRational {
    let mut result = BigRational::one();
    let mut base = x.clone();
    let mut exp = n;
    while exp > 0 {
        if exp & 1 == 1 {
            result *= &base;
        }
        exp >>= 1;
        if exp > 0 {
            base = &base * &base;
        }
    }
    result
}

/// Generalized binomial coefficient `C(x, n) = x (x-1) ... (x-n+1) / n!`
/// with a rational upper argument.
pub(crate) fn rational_binomial(x: &BigRational, n: u32) -> BigRational {
    let mut acc = BigRational::one();
    for i in 0..n {
        acc *= x - BigRational::from_integer(BigInt::from(i));
        acc /= BigRational::from_integer(BigInt::from(i + 1));
    }
    acc
}

/// Harmonic number `H_m = 1 + 1/2 + ... + 1/m` as an exact rational.
pub(crate) fn harmonic(m: u32) -> BigRational {
    let mut acc = BigRational::zero();
    for i in 1..=m {
        acc += BigRational::new(BigInt::one(), BigInt::from(i));
    }
    acc
}

/// Converts a rational that is known to be an integer, panicking otherwise.
/// Every caller divides a quantity that is an integer by construction, so a
/// failure here indicates a bug in the calling formula.
pub(crate) fn expect_integer(value: BigRational, what: &str) -> BigInt {
    assert!(
        value.is_integer(),
        "{what} must be an integer, got {value}"
    );
    value.to_integer()
}

/// Signed parity factor `(-1)^n`.
pub(crate) fn sign(n: u32) -> BigInt {
    if n % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Exact integer division, panicking on a nonzero remainder. Used where
/// divisibility is a theorem about the formula being evaluated.
pub(crate) fn exact_int_div(numerator: BigInt, denominator: &BigInt) -> BigInt {
    let (quotient, remainder) = num_integer::Integer::div_rem(&numerator, denominator);
    assert!(
        remainder.is_zero(),
        "expected {numerator} to be divisible by {denominator}"
    );
    quotient
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn helpers_compute_exact_values() {
        assert_eq!(
            rational_pow(&BigRational::new(2.into(), 3.into()), 3),
            BigRational::new(8.into(), 27.into())
        );
        assert_eq!(
            rational_binomial(&BigRational::new(4.into(), 3.into()), 2),
            BigRational::new(2.into(), 9.into())
        );
        assert_eq!(harmonic(3), BigRational::new(11.into(), 6.into()));
        assert_eq!(exact_int_div(BigInt::from(12), &BigInt::from(4)), BigInt::from(3));
        assert!(sign(3).is_negative());
    }
}
