//! Stirling numbers of both kinds, Bell numbers, and their generalizations
//! to gates with several raising and lowering steps.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use weylkit_core::combinatorics::{binomial, factorial, falling_factorial};
use weylkit_core::{Coefficient, CoreError, Parameters};

use crate::error::FormulasError;
use crate::util::{exact_int_div, sign};

fn check_triangle(family: &'static str, n: u32, k: u32) -> Result<(), FormulasError> {
    if k > n {
        return Err(FormulasError::out_of_range(
            family,
            format!("need 0 <= k <= n, got n = {n}, k = {k}"),
        ));
    }
    Ok(())
}

/// Stirling set number `{n, k}`: partitions of an `n`-set into `k` blocks.
/// Computed by the additive recurrence.
pub fn stirling2(n: u32, k: u32) -> Result<BigInt, FormulasError> {
    check_triangle("stirling2", n, k)?;
    // Row-by-row recurrence {n, k} = {n-1, k-1} + k * {n-1, k}.
    let mut row = vec![BigInt::one()];
    for _ in 1..=n {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (j, value) in row.iter().enumerate() {
            next[j + 1] += value;
            next[j] += BigInt::from(j) * value;
        }
        row = next;
    }
    Ok(row[k as usize].clone())
}

/// Stirling set number `{n, k}` by the alternating binomial sum
/// `(1/k!) * sum_j (-1)^{k-j} C(k, j) j^n`. Must agree with [`stirling2`];
/// both are exposed so the agreement can be asserted.
pub fn stirling2_from_sum(n: u32, k: u32) -> Result<BigInt, FormulasError> {
    check_triangle("stirling2", n, k)?;
    if n == 0 && k == 0 {
        return Ok(BigInt::one());
    }
    let mut sum = BigInt::zero();
    for j in 0..=k {
        sum += sign(k - j) * binomial(k.into(), j.into()) * BigInt::from(j).pow(n);
    }
    Ok(exact_int_div(sum, &factorial(k.into())))
}

/// Unsigned Stirling cycle number `[n, k]`: the coefficient of `x^k` in the
/// rising factorial `x (x+1) ... (x+n-1)`.
pub fn stirling1(n: u32, k: u32) -> Result<BigInt, FormulasError> {
    check_triangle("stirling1", n, k)?;
    // [n, k] = [n-1, k-1] + (n-1) * [n-1, k].
    let mut row = vec![BigInt::one()];
    for m in 1..=n {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (j, value) in row.iter().enumerate() {
            next[j + 1] += value;
            next[j] += BigInt::from(m - 1) * value;
        }
        row = next;
    }
    Ok(row[k as usize].clone())
}

/// Bell number: the number of set partitions of an `n`-set, as the row sum
/// of the Stirling set triangle.
pub fn bell(n: u32) -> BigInt {
    (0..=n)
        .map(|k| stirling2(n, k).expect("k <= n by construction"))
        .sum()
}

/// Row sum of the `(2,2)`-generalized Stirling triangle: the number of
/// "partition-like" configurations counted by gates with two raising and
/// two lowering steps. Starts 1, 1, 7, 87, 1657 from `n = 0`.
pub fn gen_bell_22(n: u32) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    (2..=2 * n)
        .map(|k| gen_stirling_rs(n, k, 2, 2).expect("k in range by construction"))
        .sum()
}

/// Generalized Stirling number `{n, k}_{r,s}`: the coefficient of
/// `X^{n(r-s)} X^k D^k` in the normal ordering of `(X^r D^s)^n`, by the
/// alternating sum with falling-factorial products.
///
/// Requires `r, s >= 1`; the case `r < s` is routed through the duality
/// `{n, k}_{r,s} = {n, k}_{s,r}`.
pub fn gen_stirling_rs(n: u32, k: u32, r: u32, s: u32) -> Result<BigInt, FormulasError> {
    if r == 0 || s == 0 {
        return Err(FormulasError::out_of_range(
            "gen_stirling_rs",
            format!("need r, s >= 1, got r = {r}, s = {s}"),
        ));
    }
    if r < s {
        return gen_stirling_rs(n, k, s, r);
    }
    if n == 0 {
        return Err(FormulasError::out_of_range(
            "gen_stirling_rs",
            "need n >= 1".to_string(),
        ));
    }
    if k < s || k > s * n {
        return Err(FormulasError::out_of_range(
            "gen_stirling_rs",
            format!("need s <= k <= s*n, got k = {k} with s = {s}, n = {n}"),
        ));
    }
    let mut sum = BigInt::zero();
    for j in 0..=k {
        let mut product = BigInt::one();
        for p in 0..n {
            product *= falling_factorial(u64::from(j) + u64::from(p) * u64::from(r - s), s.into());
            if product.is_zero() {
                break;
            }
        }
        sum += sign(k - j) * binomial(k.into(), j.into()) * product;
    }
    Ok(exact_int_div(sum, &factorial(k.into())))
}

/// Generalized Stirling number for a balanced gate described by the
/// falling-factorial weights `eta`: with `h(x) = sum_l eta_l * x^(l falling)`,
/// returns `(1/k!) * sum_j (-1)^{k-j} C(k, j) h(j)^n`.
///
/// The weights live in the `params` coefficient ring, so symbolic gate
/// weights are allowed. For `eta` a single 1 at index `l = 2` this is the
/// `(2,2)` triangle; for a single 1 at `l = 1` it is the plain set triangle.
pub fn gen_stirling_balanced(
    params: &Parameters,
    n: u32,
    k: u32,
    eta: &[Coefficient],
) -> Result<Coefficient, FormulasError> {
    for weight in eta {
        if weight.parameters() != params {
            return Err(FormulasError::Core(CoreError::ContextMismatch {
                left: params.describe(),
                right: weight.parameters().describe(),
            }));
        }
    }
    let degree = eta
        .iter()
        .rposition(|w| !w.is_zero())
        .map(|d| d as u32)
        .unwrap_or(0);
    if k > degree * n {
        return Err(FormulasError::out_of_range(
            "gen_stirling_balanced",
            format!("need k <= n * deg(eta) = {}, got k = {k}", degree * n),
        ));
    }

    // h(j) = sum_l eta_l * j (j-1) ... (j-l+1), evaluated exactly.
    let h = |j: u32| -> Coefficient {
        let mut value = Coefficient::zero(params);
        for (l, weight) in eta.iter().enumerate() {
            let factor = falling_factorial(j.into(), l as u64);
            if factor.is_zero() {
                continue;
            }
            value += &weight.scale(&BigRational::from_integer(factor));
        }
        value
    };

    let mut sum = Coefficient::zero(params);
    for j in 0..=k {
        let signed = BigRational::from_integer(sign(k - j) * binomial(k.into(), j.into()));
        sum += &h(j).pow(n).scale(&signed);
    }
    Ok(sum.scale(&BigRational::new(BigInt::one(), factorial(k.into()))))
}
