//! Exact counts of two path/matrix families: nonnegative bridges with
//! steps +2/-3, and square matrices counted by generalized Stirling rows.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use weylkit_core::combinatorics::binomial;

use crate::stirling::gen_stirling_rs;
use crate::util::{exact_int_div, expect_integer};

/// Number of nonnegative lattice paths with steps +2 and -3 of length `5n`
/// that start and end at altitude 0.
///
/// Computed through the cycle-lemma generating function: the counts are the
/// coefficients of `exp(sum_{j>=1} C(5j, 2j)/(5j) * t^j)`, expanded exactly
/// over rationals. Starts 1, 2, 23, 377, 7229.
pub fn duchon(n: u32) -> BigInt {
    let order = n as usize;
    // a_j = C(5j, 2j) / (5j) for j >= 1.
    let mut a = vec![BigRational::zero(); order + 1];
    for j in 1..=order {
        a[j] = BigRational::new(binomial(5 * j as u64, 2 * j as u64), BigInt::from(5 * j as u64));
    }
    // b = exp(a) via b_0 = 1, n b_n = sum_{k=1..n} k a_k b_{n-k}.
    let mut b = vec![BigRational::zero(); order + 1];
    b[0] = BigRational::one();
    for m in 1..=order {
        let mut acc = BigRational::zero();
        for k in 1..=m {
            acc += BigRational::from_integer(BigInt::from(k as u64)) * &a[k] * &b[m - k];
        }
        b[m] = acc / BigRational::from_integer(BigInt::from(m as u64));
    }
    expect_integer(b[order].clone(), "duchon")
}

/// `(M_pm, M_plus)`: matrix counts derived from the `(2,2)` Stirling rows.
///
/// `M_pm = sum_{k=2}^{2n} k! {n, k}_{2,2}` counts matrices with `n` rows
/// and any number of columns, entries in `{0, +1, -1}`, exactly one `+1`
/// and one `-1` per row, and no all-zero column. `M_plus = M_pm / 2^n`
/// (an exact division) is the unoriented variant with two `1`-entries per
/// row. Starts 1, 13, 409, 23917 from `n = 1`.
pub fn matrix_counts(n: u32) -> (BigInt, BigInt) {
    let signed = if n == 0 {
        BigInt::one()
    } else {
        let mut acc = BigInt::zero();
        let mut k_factorial = BigInt::one();
        for k in 1..=2 * n {
            k_factorial *= BigInt::from(k);
            if k >= 2 {
                acc += &k_factorial * gen_stirling_rs(n, k, 2, 2).expect("k in range");
            }
        }
        acc
    };
    let positive = exact_int_div(signed.clone(), &BigInt::from(2).pow(n));
    (signed, positive)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_and_matrix_counts() {
        let expected = [1u64, 2, 23, 377, 7229];
        for (n, &value) in expected.iter().enumerate() {
            assert_eq!(duchon(n as u32), BigInt::from(value));
        }
        assert_eq!(matrix_counts(1), (BigInt::from(2), BigInt::from(1)));
        assert_eq!(matrix_counts(2), (BigInt::from(52), BigInt::from(13)));
    }
}
