//! Closed-form generating functions for the classical operator families.
//!
//! Each family here has a known closed expression for the exponential
//! generating function of its normally ordered powers, with formal markers
//! `u` (surviving raise letters) and `v` (surviving lower letters) where the
//! family refines by both. The expansions below build those closed forms
//! with exact series arithmetic only — `exp`, `log`, division by unit
//! constants, and rational-exponent binomials driven by their defining
//! first-order equations — so the resulting coefficients are exact and can be
//! compared verbatim against the rewrite engine's output.

use num_bigint::BigInt;
use num_rational::BigRational;
use weylkit_core::{combinatorics, Coefficient, Parameters};

use crate::error::SeriesError;
use crate::ode::solve_increasing_tree;
use crate::polyspec::PolynomialSpec;
use crate::series::TruncatedSeries;

/// A generating-function family with a closed-form expansion.
///
/// The carried coefficients (markers and weights) must all live over one
/// parameter context; expansion panics otherwise, mirroring coefficient
/// arithmetic. Markers may be formal parameters or concrete values — pass 1
/// to forget a marker.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GfFamily {
    /// Set partitions: `exp(u (e^z - 1))`, with `u` marking blocks.
    Bell {
        /// Marker for the number of blocks.
        u: Coefficient,
    },
    /// Two-colored involutions: `exp(alpha u z + beta v z + alpha beta z^2 / 2)`,
    /// where pairs weigh `alpha * beta` and unpaired points of the two colors
    /// weigh `alpha` and `beta` and are marked by `u` and `v`.
    Involution {
        /// Weight of the first kind of unpaired point.
        alpha: Coefficient,
        /// Weight of the second kind of unpaired point.
        beta: Coefficient,
        /// Marker for unpaired points of the first kind.
        u: Coefficient,
        /// Marker for unpaired points of the second kind.
        v: Coefficient,
    },
    /// Normally ordered exponential of `D^2 + X`:
    /// `exp(z^3/3 + z u + z^2 v + z v^2)`.
    LowerSquaredPlusRaise {
        /// Marker for surviving raise letters.
        u: Coefficient,
        /// Marker for surviving lower letters.
        v: Coefficient,
    },
    /// Normally ordered exponential of `X^2 + D`:
    /// `exp(z^3/3 + z^2 u + z u^2 + z v)`.
    RaiseSquaredPlusLower {
        /// Marker for surviving raise letters.
        u: Coefficient,
        /// Marker for surviving lower letters.
        v: Coefficient,
    },
    /// Normally ordered exponential of `X^2 + D^2`:
    /// `sec^(1/2)(2z) * exp((u^2 + v^2) tan(2z) / 2 + u v (sec(2z) - 1))`.
    Zigzag {
        /// Marker for surviving raise letters.
        u: Coefficient,
        /// Marker for surviving lower letters.
        v: Coefficient,
    },
    /// Normally ordered exponential of `X^r D` for `r >= 2`:
    /// `exp(u v ([1 - (r-1) u^(r-1) z]^(-1/(r-1)) - 1))`.
    RaisePower {
        /// Raise exponent of the single gate, at least 2.
        r: u32,
        /// Marker for surviving raise letters.
        u: Coefficient,
        /// Marker for surviving lower letters.
        v: Coefficient,
    },
    /// Permutations by ascents: `1 / (1 - u E)` with
    /// `E = sum_(n>=1) (1-u)^(n-1) z^n / n!`.
    Eulerian {
        /// Marker whose power records the ascent statistic.
        u: Coefficient,
    },
    /// Increasing trees with node expansion rule `phi` and node weight `rho`:
    /// `exp(R) * exp(v T)` where `T' = phi(u + T)`, `R' = rho(u + T)`, and
    /// both vanish at 0.
    IncreasingTree {
        /// Expansion rule: the polynomial applied at the active node.
        phi: PolynomialSpec,
        /// Weight rule integrated along the tree growth.
        rho: PolynomialSpec,
        /// Shift marking the starting value of the active node.
        u: Coefficient,
        /// Marker for the active-node count.
        v: Coefficient,
    },
}

impl GfFamily {
    /// Expands the family's closed form through the requested order.
    ///
    /// # Errors
    ///
    /// Returns [`SeriesError::GatePowerTooSmall`] for a raise-power family
    /// with `r < 2`. Other families expand for every order.
    pub fn expand(&self, order: usize) -> Result<TruncatedSeries, SeriesError> {
        match self {
            Self::Bell { u } => bell_series(u, order),
            Self::Involution { alpha, beta, u, v } => involution_series(alpha, beta, u, v, order),
            Self::LowerSquaredPlusRaise { u, v } => {
                let third = Coefficient::from_rational(u.parameters(), BigRational::new(1.into(), 3.into()));
                cubic_exponent_series(&[&(u + &v.pow(2)), v, &third], order)
            }
            Self::RaiseSquaredPlusLower { u, v } => {
                let third = Coefficient::from_rational(u.parameters(), BigRational::new(1.into(), 3.into()));
                cubic_exponent_series(&[&(&u.pow(2) + v), u, &third], order)
            }
            Self::Zigzag { u, v } => zigzag_series(u, v, order),
            Self::RaisePower { r, u, v } => raise_power_series(*r, u, v, order),
            Self::Eulerian { u } => eulerian_series(u, order),
            Self::IncreasingTree { phi, rho, u, v } => increasing_tree_series(phi, rho, u, v, order),
        }
    }
}

/// Expands a family's closed-form generating function through `order`.
///
/// Free-function form of [`GfFamily::expand`].
///
/// # Errors
///
/// See [`GfFamily::expand`].
pub fn closed_gf(family: &GfFamily, order: usize) -> Result<TruncatedSeries, SeriesError> {
    family.expand(order)
}

fn one_over_factorial(params: &Parameters, n: usize) -> Coefficient {
    Coefficient::from_rational(
        params,
        BigRational::new(1.into(), combinatorics::factorial(n as u64)),
    )
}

fn bell_series(u: &Coefficient, order: usize) -> Result<TruncatedSeries, SeriesError> {
    let params = u.parameters();
    let exp_minus_one = TruncatedSeries::from_fn(params, order, |n| {
        if n == 0 {
            Coefficient::zero(params)
        } else {
            one_over_factorial(params, n)
        }
    });
    exp_minus_one.scale(u).exp()
}

fn involution_series(
    alpha: &Coefficient,
    beta: &Coefficient,
    u: &Coefficient,
    v: &Coefficient,
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    let params = alpha.parameters();
    let linear = &(alpha * u) + &(beta * v);
    let half_pair = (alpha * beta).scale(&BigRational::new(1.into(), 2.into()));
    let arg = TruncatedSeries::from_fn(params, order, |n| match n {
        1 => linear.clone(),
        2 => half_pair.clone(),
        _ => Coefficient::zero(params),
    });
    arg.exp()
}

/// `exp(c_1 z + c_2 z^2 + c_3 z^3)` for the two degree-three families.
fn cubic_exponent_series(
    coeffs: &[&Coefficient; 3],
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    let params = coeffs[0].parameters();
    let arg = TruncatedSeries::from_fn(params, order, |n| match n {
        1..=3 => coeffs[n - 1].clone(),
        _ => Coefficient::zero(params),
    });
    arg.exp()
}

/// Taylor series of `cos(2z)` through `order`.
fn cosine_double(params: &Parameters, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_fn(params, order, |n| {
        if n % 2 != 0 {
            return Coefficient::zero(params);
        }
        let mut numerator = BigInt::from(1) << n;
        if (n / 2) % 2 == 1 {
            numerator = -numerator;
        }
        Coefficient::from_rational(
            params,
            BigRational::new(numerator, combinatorics::factorial(n as u64)),
        )
    })
}

fn zigzag_series(
    u: &Coefficient,
    v: &Coefficient,
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    let params = u.parameters();
    let one = TruncatedSeries::constant(Coefficient::one(params), order + 1);
    let half = BigRational::new(1.into(), 2.into());

    // log cos(2z), one order above the target so its derivative is full.
    let log_cos = cosine_double(params, order + 1).log()?;
    // tan(2z) = -(1/2) d/dz log cos(2z).
    let tangent = log_cos.differentiate().scale(&Coefficient::from_rational(params, -half.clone()));
    // sec(2z) - 1 = exp(-log cos(2z)) - 1.
    let secant_minus_one = log_cos
        .scale(&-Coefficient::one(params))
        .exp()?
        .sub(&one);

    let squares = (&u.pow(2) + &v.pow(2)).scale(&half);
    let cross = u * v;
    let arg = tangent
        .scale(&squares)
        .add(&secant_minus_one.scale(&cross))
        .add(&log_cos.scale(&Coefficient::from_rational(params, -half)));
    arg.exp()
}

fn raise_power_series(
    r: u32,
    u: &Coefficient,
    v: &Coefficient,
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    if r < 2 {
        return Err(SeriesError::GatePowerTooSmall { found: r });
    }
    let params = u.parameters();
    // s = -(r-1) u^(r-1) z, so 1 + s is the binomial base.
    let slope = u.pow(r - 1).scale(&BigRational::from_integer((-i64::from(r - 1)).into()));
    let s = TruncatedSeries::variable(params, order).scale(&slope);
    let exponent = BigRational::new((-1).into(), i64::from(r - 1).into());
    let root = s.binomial_pow(&exponent)?;
    let one = TruncatedSeries::constant(Coefficient::one(params), order);
    root.sub(&one).scale(&(u * v)).exp()
}

fn eulerian_series(u: &Coefficient, order: usize) -> Result<TruncatedSeries, SeriesError> {
    let params = u.parameters();
    let one_minus_u = &Coefficient::one(params) - u;
    let kernel = TruncatedSeries::from_fn(params, order, |n| {
        if n == 0 {
            Coefficient::zero(params)
        } else {
            &one_minus_u.pow(n as u32 - 1) * &one_over_factorial(params, n)
        }
    });
    let one = TruncatedSeries::constant(Coefficient::one(params), order);
    one.div(&one.sub(&kernel.scale(u)))
}

fn increasing_tree_series(
    phi: &PolynomialSpec,
    rho: &PolynomialSpec,
    u: &Coefficient,
    v: &Coefficient,
    order: usize,
) -> Result<TruncatedSeries, SeriesError> {
    let t = solve_increasing_tree(phi, u, order);
    let shifted = t.add(&TruncatedSeries::constant(u.clone(), order));
    let weight = rho.evaluate_series(&shifted).integrate().truncate(order);
    weight.add(&t.scale(v)).exp()
}
