//! Closed form for the normally ordered powers of a general linear
//! combination of one raising and one lowering step.

use num_rational::BigRational;
use weylkit_core::combinatorics::factorial;
use weylkit_core::Coefficient;

/// Coefficient of `X^raises D^lowers` in the normal ordering of
/// `(alpha X + beta D)^n`:
///
/// `n! / (2^c c! raises! lowers!) * alpha^{(n+raises-lowers)/2} *
/// beta^{(n-raises+lowers)/2}` with `c = (n - raises - lowers)/2`,
/// and `0` whenever `n - raises - lowers` is negative or odd.
///
/// `alpha` and `beta` must share one parameter declaration.
pub fn involution_coeff(
    n: u32,
    raises: u32,
    lowers: u32,
    alpha: &Coefficient,
    beta: &Coefficient,
) -> Coefficient {
    let params = alpha.parameters();
    if raises + lowers > n || (n - raises - lowers) % 2 != 0 {
        return Coefficient::zero(params);
    }
    let contractions = (n - raises - lowers) / 2;
    let alpha_exp = (n + raises - lowers) / 2;
    let beta_exp = (n - raises + lowers) / 2;

    let numerator = BigRational::from_integer(factorial(n.into()));
    let denominator = BigRational::from_integer(
        num_bigint::BigInt::from(2).pow(contractions)
            * factorial(contractions.into())
            * factorial(raises.into())
            * factorial(lowers.into()),
    );

    (alpha.pow(alpha_exp) * beta.pow(beta_exp)).scale(&(numerator / denominator))
}
