//! Coefficient families for powers of one-lowering gates `X^r D`, by the
//! Lah closed form (`r = 2`), a rational-binomial alternating sum
//! (`r >= 3`), and the ordered-index product sum attributed to Scherk.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use weylkit_core::combinatorics::{binomial, factorial};

use crate::error::FormulasError;
use crate::util::{expect_integer, rational_binomial, sign};

/// Coefficient of `X^{k + (r-1) n} D^k` in the normal ordering of
/// `(X^r D)^n`, for `r >= 2`.
///
/// The `r = 2` column is the Lah triangle `C(n-1, k-1) n!/k!`; for
/// `r >= 3` an alternating sum over binomials with rational upper argument
/// `n + l/(r-1) - 1` is evaluated exactly in the rational field.
pub fn lah_gamma(n: u32, k: u32, r: u32) -> Result<BigInt, FormulasError> {
    if r < 2 {
        return Err(FormulasError::out_of_range(
            "lah_gamma",
            format!("need r >= 2, got r = {r}"),
        ));
    }
    if n == 0 || k == 0 || k > n {
        return Err(FormulasError::out_of_range(
            "lah_gamma",
            format!("need 1 <= k <= n, got n = {n}, k = {k}"),
        ));
    }
    if r == 2 {
        let value = binomial(u64::from(n) - 1, u64::from(k) - 1) * factorial(n.into());
        return Ok(crate::util::exact_int_div(value, &factorial(k.into())));
    }

    let step = BigRational::new(BigInt::one(), BigInt::from(r - 1));
    let scale = BigRational::from_integer(BigInt::from(r - 1).pow(n));
    let mut sum = BigRational::zero();
    for l in 0..=k {
        let upper = BigRational::from_integer(BigInt::from(n) - BigInt::one())
            + &step * BigRational::from_integer(BigInt::from(l));
        let term = BigRational::from_integer(sign(k - l) * binomial(k.into(), l.into()))
            * rational_binomial(&upper, n)
            * &scale;
        sum += term;
    }
    let value = sum * BigRational::new(factorial(n.into()), factorial(k.into()));
    Ok(expect_integer(value, "lah_gamma"))
}

/// Coefficient of `X^k D^k` in `X^{-n(p-1)} (X^p D)^n`, by the ordered
/// product sum `sum over 1 <= j_1 <= ... <= j_{n-k} <= k` of
/// `prod_i [(j_i + i - 1) p - (i - 1)]`.
pub fn scherk_c(n: u32, k: u32, p: u32) -> Result<BigInt, FormulasError> {
    if p == 0 {
        return Err(FormulasError::out_of_range(
            "scherk_c",
            format!("need p >= 1, got p = {p}"),
        ));
    }
    if n == 0 || k == 0 || k > n {
        return Err(FormulasError::out_of_range(
            "scherk_c",
            format!("need 1 <= k <= n, got n = {n}, k = {k}"),
        ));
    }
    let length = (n - k) as usize;
    let mut total = BigInt::zero();
    // Depth-first walk over weakly increasing index tuples in {1..k}^length.
    let mut stack: Vec<(usize, u32, BigInt)> = vec![(0, 1, BigInt::one())];
    while let Some((depth, min_j, partial)) = stack.pop() {
        if depth == length {
            total += partial;
            continue;
        }
        let i = depth as u32 + 1;
        for j in min_j..=k {
            let factor = BigInt::from((j + i - 1) * p - (i - 1));
            stack.push((depth + 1, j, &partial * factor));
        }
    }
    Ok(total)
}
