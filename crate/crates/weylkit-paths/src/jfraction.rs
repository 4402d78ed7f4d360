//! Truncated Jacobi-type continued fractions and their series expansion.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use weylkit_core::{combinatorics, Coefficient, Parameters};
use weylkit_formulas::q_integer;
use weylkit_series::TruncatedSeries;

use crate::error::PathsError;

type LevelFn = Arc<dyn Fn(u32) -> Coefficient + Send + Sync>;

/// A continued fraction of the shape
///
/// ```text
///                1
///   -------------------------------
///                          mu_1 z^2
///   1 - lambda_0 z - ---------------------
///                                 mu_2 z^2
///                    1 - lambda_1 z - ...
/// ```
///
/// truncated at a finite depth: `depth` is the number of levels kept, so the
/// deepest retained denominator is `1 - lambda_{depth-1} z`. The level
/// coefficients `lambda_k` and product coefficients `mu_k` are given as
/// functions of the level index, which keeps specs with unbounded
/// coefficient growth (factorial-like products, q-integers) cheap to state.
///
/// The expansion of such a fraction is the ordinary generating function of
/// weighted nonnegative lattice paths: `lambda_k` weighs a level step at
/// altitude `k` and `mu_k` weighs a descent starting at altitude `k`, with
/// all ascents weighing 1.
#[derive(Clone)]
pub struct JFractionSpec {
    params: Parameters,
    depth: usize,
    level: LevelFn,
    product: LevelFn,
}

impl JFractionSpec {
    /// Builds a spec from its level and product coefficient rules.
    ///
    /// `level(k)` is the coefficient of `z` at level `k >= 0`; `product(k)`
    /// is the coefficient of `z^2` linking level `k - 1` to level `k`, so it
    /// is consulted for `k >= 1` only.
    ///
    /// # Errors
    ///
    /// [`PathsError::ZeroDepth`] if `depth` is 0: a fraction needs at least
    /// its outermost level.
    pub fn new(
        params: &Parameters,
        depth: usize,
        level: impl Fn(u32) -> Coefficient + Send + Sync + 'static,
        product: impl Fn(u32) -> Coefficient + Send + Sync + 'static,
    ) -> Result<Self, PathsError> {
        if depth == 0 {
            return Err(PathsError::ZeroDepth);
        }
        Ok(Self {
            params: params.clone(),
            depth,
            level: Arc::new(level),
            product: Arc::new(product),
        })
    }

    /// The fraction with no level terms and products `mu_k = k`, whose
    /// expansion has the odd double factorials `1, 3, 15, 105, ...` at the
    /// even powers: the moment fraction of perfect matchings.
    pub fn matchings(params: &Parameters, depth: usize) -> Result<Self, PathsError> {
        Self::sum_powers(params, 1, depth)
    }

    /// The fraction with no level terms and products
    /// `mu_k = (rk)(rk - 1)...(rk - r + 1)`, the moment fraction of the
    /// normally ordered powers of `X^r + D^r`. `power = 1` recovers
    /// [`JFractionSpec::matchings`].
    ///
    /// # Panics
    ///
    /// Panics if `power` is 0; the fraction is only defined for genuine
    /// raise/lower powers.
    pub fn sum_powers(
        params: &Parameters,
        power: u32,
        depth: usize,
    ) -> Result<Self, PathsError> {
        assert!(power >= 1, "the summed power must be at least 1");
        let zero_params = params.clone();
        let product_params = params.clone();
        Self::new(
            params,
            depth,
            move |_| Coefficient::zero(&zero_params),
            move |k| {
                Coefficient::from_rational(
                    &product_params,
                    BigRational::from_integer(combinatorics::falling_factorial(
                        u64::from(power) * u64::from(k),
                        u64::from(power),
                    )),
                )
            },
        )
    }

    /// The fraction with no level terms and q-integer products
    /// `mu_k = 1 + q + ... + q^{k-1}`, whose expansion carries the
    /// crossing-number polynomials of perfect matchings at the even powers.
    pub fn q_inversion(q: &Coefficient, depth: usize) -> Result<Self, PathsError> {
        let params = q.parameters().clone();
        let zero_params = params.clone();
        let q = q.clone();
        Self::new(
            &params,
            depth,
            move |_| Coefficient::zero(&zero_params),
            move |k| q_integer(&q, k),
        )
    }

    /// The fraction with no level terms and paired q-integer products
    /// `mu_k = [2k-1]_q [2k]_q`, which reduces at `q = 1` to
    /// [`JFractionSpec::sum_powers`] with power 2.
    pub fn q_inversion_paired(q: &Coefficient, depth: usize) -> Result<Self, PathsError> {
        let params = q.parameters().clone();
        let zero_params = params.clone();
        let q = q.clone();
        Self::new(
            &params,
            depth,
            move |_| Coefficient::zero(&zero_params),
            move |k| &q_integer(&q, 2 * k - 1) * &q_integer(&q, 2 * k),
        )
    }

    /// The parameter context of the fraction coefficients.
    pub fn parameters(&self) -> &Parameters {
        &self.params
    }

    /// Number of levels retained by the truncation.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// The coefficient of `z` at level `k`.
    pub fn level(&self, k: u32) -> Coefficient {
        (self.level)(k)
    }

    /// The coefficient of `z^2` linking level `k - 1` to level `k`.
    pub fn product(&self, k: u32) -> Coefficient {
        (self.product)(k)
    }
}

impl fmt::Debug for JFractionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("JFractionSpec").field("depth", &self.depth).finish_non_exhaustive()
    }
}

/// Expands a truncated continued fraction as a series through `z^order`.
///
/// The bottom convergent `1 / (1 - lambda_{d-1} z)` is lifted level by level
/// as a pair of polynomial series `(P, Q)` with `P/Q` the running fraction:
/// prepending level `j` maps `(P, Q)` to `(Q, Q (1 - lambda_j z) - P mu_{j+1}
/// z^2)`. Only the final `P/Q` performs a series division, whose divisor has
/// constant term 1 by construction.
///
/// # Errors
///
/// [`PathsError::InsufficientDepth`] if `depth <= order / 2`: a path of
/// length `2k` can touch altitude `k`, so the coefficient of `z^order` needs
/// every level up to `order / 2` to be present.
pub fn jfraction_expand(
    spec: &JFractionSpec,
    order: usize,
) -> Result<TruncatedSeries, PathsError> {
    let required = order / 2 + 1;
    if spec.depth() < required {
        return Err(PathsError::InsufficientDepth { order, required, found: spec.depth() });
    }
    let params = spec.parameters();
    let z = TruncatedSeries::variable(params, order);
    let one = TruncatedSeries::constant(Coefficient::one(params), order);
    let depth = u32::try_from(spec.depth()).expect("depth fits in a level index");

    let denominator_line = |k: u32| {
        // 1 - lambda_k z
        one.sub(&z.scale(&spec.level(k)))
    };

    let mut p = one.clone();
    let mut q = denominator_line(depth - 1);
    for j in (0..depth - 1).rev() {
        let linking = z.mul(&z).scale(&spec.product(j + 1));
        let next_q = q.mul(&denominator_line(j)).sub(&p.mul(&linking));
        p = q;
        q = next_q;
    }
    Ok(p.div(&q).expect("the truncated denominator has constant term 1"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_depth_is_rejected() {
        let params = Parameters::empty();
        assert!(matches!(
            JFractionSpec::matchings(&params, 0),
            Err(PathsError::ZeroDepth)
        ));
    }

    #[test]
    fn shallow_fractions_refuse_deep_expansions() {
        let params = Parameters::empty();
        let spec = JFractionSpec::matchings(&params, 3).unwrap();
        match jfraction_expand(&spec, 8) {
            Err(PathsError::InsufficientDepth { order, required, found }) => {
                assert_eq!((order, required, found), (8, 5, 3));
            }
            other => panic!("expected an insufficient-depth error, got {other:?}"),
        }
        assert!(jfraction_expand(&spec, 5).is_ok());
    }

    #[test]
    fn pure_level_fraction_is_geometric() {
        let params = Parameters::empty();
        // 1/(1 - z) truncated at any depth: lambda_0 = 1, products 0.
        let spec = JFractionSpec::new(
            &params,
            6,
            {
                let params = params.clone();
                move |_| Coefficient::one(&params)
            },
            {
                let params = params.clone();
                move |_| Coefficient::zero(&params)
            },
        )
        .unwrap();
        let series = jfraction_expand(&spec, 9).unwrap();
        for n in 0..=9 {
            assert!(series.coefficient(n).is_one());
        }
    }
}
