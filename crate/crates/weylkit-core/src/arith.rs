//! Exact integer combinatorics helpers used across the workspace.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `n!` as an exact big integer.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient `C(n, k)` as an exact big integer (0 when `k > n`).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Falling factorial `n * (n-1) * ... * (n-k+1)` with `k` factors.
pub fn falling_factorial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n - i);
    }
    acc
}

/// Rising factorial `n * (n+1) * ... * (n+k-1)` with `k` factors.
pub fn rising_factorial(n: u64, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(n + i);
    }
    acc
}

/// Double factorial of an odd argument: `(2n-1)!! = 1 * 3 * ... * (2n-1)`.
pub fn odd_double_factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 1..=n {
        acc *= BigInt::from(2 * k - 1);
    }
    acc
}
