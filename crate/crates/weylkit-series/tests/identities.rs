//! Cross-checks of series expansions against the operator rewrite engine,
//! closed trigonometric and hyperbolic forms, direct enumeration, and
//! independently computed number triangles.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use proptest::prelude::*;
use weylkit_core::{
    combinatorics, Coefficient, ModelPolynomial, OperatorPolynomial, Parameters, Word,
};
use weylkit_formulas::{bell, involution_coeff, lah_gamma, stirling2};
use weylkit_series::{
    closed_gf, GfFamily, OdeSystem, PolynomialSpec, SystemPolynomial, TruncatedSeries,
};

/// Expands `exp(z * op)` with the rewrite engine and reads the result off as
/// a series whose `z^n` coefficient is the image of the `n`-th normally
/// ordered power under raise `-> u`, lower `-> v`, divided by `n!`.
fn image_series(
    op: &OperatorPolynomial,
    u: &Coefficient,
    v: &Coefficient,
    order: usize,
) -> TruncatedSeries {
    let params = op.parameters().clone();
    let powers = op.normal_order().powers(order as u32).unwrap();
    TruncatedSeries::from_fn(&params, order, |n| {
        let mut sum = Coefficient::zero(&params);
        for (monomial, coeff) in powers[n].terms() {
            let marker = &u.pow(monomial.raises()[0]) * &v.pow(monomial.lowers()[0]);
            sum += &(coeff * &marker);
        }
        sum.scale(&BigRational::new(1.into(), combinatorics::factorial(n as u64)))
    })
}

/// `n! * [z^n]`.
fn egf_value(series: &TruncatedSeries, n: usize) -> Coefficient {
    series
        .coefficient(n)
        .scale(&BigRational::from_integer(combinatorics::factorial(n as u64)))
}

/// A single-mode operator from (raises, lowers, integer weight) triples.
fn single_mode_op(params: &Parameters, words: &[(u32, u32, &Coefficient)]) -> OperatorPolynomial {
    let mut op = OperatorPolynomial::zero(params, 1);
    for &(a, b, coeff) in words {
        op.add_word(Word::normal_single_mode(a, b), coeff.clone()).unwrap();
    }
    op
}

// ---------------------------------------------------------------------------
// Ring laws on randomized sparse series.
// ---------------------------------------------------------------------------

fn sparse_series(max_order: usize) -> impl Strategy<Value = TruncatedSeries> {
    (
        0..=max_order,
        proptest::collection::vec((0..=max_order, -6i64..=6, 1i64..=4), 0..6),
    )
        .prop_map(move |(order, terms)| {
            let params = Parameters::empty();
            let mut coeffs = vec![Coefficient::zero(&params); order + 1];
            for (index, numerator, denominator) in terms {
                if index <= order {
                    coeffs[index] = &coeffs[index]
                        + &Coefficient::from_rational(
                            &params,
                            BigRational::new(numerator.into(), denominator.into()),
                        );
                }
            }
            TruncatedSeries::from_coefficients(&params, coeffs)
        })
}

proptest! {
    #[test]
    fn addition_and_multiplication_satisfy_the_ring_laws(
        a in sparse_series(24),
        b in sparse_series(24),
        c in sparse_series(24),
    ) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn exp_and_log_invert_each_other(a in sparse_series(16)) {
        let params = a.parameters().clone();
        let mut coeffs = a.coefficients().to_vec();
        coeffs[0] = Coefficient::zero(&params);
        let f = TruncatedSeries::from_coefficients(&params, coeffs);
        prop_assert_eq!(f.exp().unwrap().log().unwrap(), f.clone());

        let g = f.add(&TruncatedSeries::constant(Coefficient::one(&params), f.order()));
        prop_assert_eq!(g.log().unwrap().exp().unwrap(), g);
    }
}

// ---------------------------------------------------------------------------
// Operator images against the closed-form families.
// ---------------------------------------------------------------------------

#[test]
fn degree_one_powers_match_the_involution_family() {
    let params = Parameters::new(["alpha", "beta", "u", "v"]).unwrap();
    let alpha = Coefficient::parameter(&params, "alpha").unwrap();
    let beta = Coefficient::parameter(&params, "beta").unwrap();
    let u = Coefficient::parameter(&params, "u").unwrap();
    let v = Coefficient::parameter(&params, "v").unwrap();
    let op = single_mode_op(&params, &[(1, 0, &alpha), (0, 1, &beta)]);
    let family = GfFamily::Involution {
        alpha: alpha.clone(),
        beta: beta.clone(),
        u: u.clone(),
        v: v.clone(),
    };
    assert_eq!(image_series(&op, &u, &v, 8), family.expand(8).unwrap());
}

#[test]
fn involution_family_refines_by_the_pairing_coefficients() {
    let params = Parameters::new(["alpha", "beta", "u", "v"]).unwrap();
    let alpha = Coefficient::parameter(&params, "alpha").unwrap();
    let beta = Coefficient::parameter(&params, "beta").unwrap();
    let u = Coefficient::parameter(&params, "u").unwrap();
    let v = Coefficient::parameter(&params, "v").unwrap();
    let series = GfFamily::Involution {
        alpha: alpha.clone(),
        beta: beta.clone(),
        u: u.clone(),
        v: v.clone(),
    }
    .expand(7)
    .unwrap();
    for n in 0..=7u32 {
        let mut expected = Coefficient::zero(&params);
        for raises in 0..=n {
            for lowers in 0..=n {
                let weight = involution_coeff(n, raises, lowers, &alpha, &beta);
                expected += &(&weight * &(&u.pow(raises) * &v.pow(lowers)));
            }
        }
        assert_eq!(egf_value(&series, n as usize), expected, "mismatch at order {n}");
    }
}

#[test]
fn cubic_volume_families_match_their_operators() {
    let params = Parameters::new(["u", "v"]).unwrap();
    let u = Coefficient::parameter(&params, "u").unwrap();
    let v = Coefficient::parameter(&params, "v").unwrap();
    let one = Coefficient::one(&params);

    let lower_squared = single_mode_op(&params, &[(0, 2, &one), (1, 0, &one)]);
    let family = GfFamily::LowerSquaredPlusRaise { u: u.clone(), v: v.clone() };
    assert_eq!(image_series(&lower_squared, &u, &v, 8), family.expand(8).unwrap());

    let raise_squared = single_mode_op(&params, &[(2, 0, &one), (0, 1, &one)]);
    let family = GfFamily::RaiseSquaredPlusLower { u: u.clone(), v: v.clone() };
    assert_eq!(image_series(&raise_squared, &u, &v, 8), family.expand(8).unwrap());
}

#[test]
fn bell_family_refines_by_the_stirling_set_triangle() {
    let params = Parameters::new(["u"]).unwrap();
    let u = Coefficient::parameter(&params, "u").unwrap();
    let series = GfFamily::Bell { u: u.clone() }.expand(8).unwrap();
    for n in 0..=8u32 {
        let mut expected = Coefficient::zero(&params);
        for k in 0..=n {
            let entry = BigRational::from_integer(stirling2(n, k).unwrap());
            expected += &u.pow(k).scale(&entry);
        }
        assert_eq!(egf_value(&series, n as usize), expected, "mismatch at order {n}");
    }
}

#[test]
fn raise_power_family_refines_by_the_factorial_triangle() {
    let params = Parameters::new(["u", "v"]).unwrap();
    let u = Coefficient::parameter(&params, "u").unwrap();
    let v = Coefficient::parameter(&params, "v").unwrap();
    for r in 2..=4u32 {
        let series = GfFamily::RaisePower { r, u: u.clone(), v: v.clone() }
            .expand(4)
            .unwrap();
        assert!(egf_value(&series, 0).is_one());
        for n in 1..=4u32 {
            let mut expected = Coefficient::zero(&params);
            for k in 1..=n {
                let entry = BigRational::from_integer(lah_gamma(n, k, r).unwrap());
                let marker = &u.pow((r - 1) * n + k) * &v.pow(k);
                expected += &marker.scale(&entry);
            }
            assert_eq!(
                egf_value(&series, n as usize),
                expected,
                "mismatch at order {n} for gate power {r}"
            );
        }
    }
}

#[test]
fn raise_power_family_matches_its_operator() {
    let params = Parameters::new(["u", "v"]).unwrap();
    let u = Coefficient::parameter(&params, "u").unwrap();
    let v = Coefficient::parameter(&params, "v").unwrap();
    let one = Coefficient::one(&params);
    for r in 2..=3u32 {
        let op = single_mode_op(&params, &[(r, 1, &one)]);
        let family = GfFamily::RaisePower { r, u: u.clone(), v: v.clone() };
        assert_eq!(image_series(&op, &u, &v, 5), family.expand(5).unwrap());
    }
}

#[test]
fn increasing_tree_family_matches_gate_plus_weight_operators() {
    let params = Parameters::new(["u", "v"]).unwrap();
    let u = Coefficient::parameter(&params, "u").unwrap();
    let v = Coefficient::parameter(&params, "v").unwrap();
    let one = Coefficient::one(&params);

    // phi = y^2, rho = y: the operator X^2 D + X.
    let op = single_mode_op(&params, &[(2, 1, &one), (1, 0, &one)]);
    let family = GfFamily::IncreasingTree {
        phi: PolynomialSpec::from_integers(&params, &[0, 0, 1]),
        rho: PolynomialSpec::from_integers(&params, &[0, 1]),
        u: u.clone(),
        v: v.clone(),
    };
    assert_eq!(image_series(&op, &u, &v, 6), family.expand(6).unwrap());

    // phi = y^3, rho = 1 + y^2: the operator X^3 D + 1 + X^2.
    let op = single_mode_op(&params, &[(3, 1, &one), (0, 0, &one), (2, 0, &one)]);
    let family = GfFamily::IncreasingTree {
        phi: PolynomialSpec::from_integers(&params, &[0, 0, 0, 1]),
        rho: PolynomialSpec::from_integers(&params, &[1, 0, 1]),
        u: u.clone(),
        v: v.clone(),
    };
    assert_eq!(image_series(&op, &u, &v, 6), family.expand(6).unwrap());
}

// ---------------------------------------------------------------------------
// The quadratic model: symbolic system, closed tangent forms, zigzag limit.
// ---------------------------------------------------------------------------

/// The four-unknown system `A' = beta + 2 gamma A + 4 alpha A^2`,
/// `B' = alpha + 2 gamma B + 4 beta B^2`, `C' = (gamma + 4 alpha A)(C + 1)`,
/// `D' = 2 alpha A`, all vanishing at 0.
fn quadratic_model_system(
    alpha: &Coefficient,
    beta: &Coefficient,
    gamma: &Coefficient,
) -> OdeSystem {
    let params = alpha.parameters();
    let two = |c: &Coefficient| c.scale(&BigRational::from_integer(2.into()));
    let four = |c: &Coefficient| c.scale(&BigRational::from_integer(4.into()));
    let a_rhs = SystemPolynomial::zero(params, 4)
        .with_term(&[0, 0, 0, 0], beta.clone())
        .with_term(&[1, 0, 0, 0], two(gamma))
        .with_term(&[2, 0, 0, 0], four(alpha));
    let b_rhs = SystemPolynomial::zero(params, 4)
        .with_term(&[0, 0, 0, 0], alpha.clone())
        .with_term(&[0, 1, 0, 0], two(gamma))
        .with_term(&[0, 2, 0, 0], four(beta));
    let c_rhs = SystemPolynomial::zero(params, 4)
        .with_term(&[0, 0, 0, 0], gamma.clone())
        .with_term(&[1, 0, 0, 0], four(alpha))
        .with_term(&[0, 0, 1, 0], gamma.clone())
        .with_term(&[1, 0, 1, 0], four(alpha));
    let d_rhs = SystemPolynomial::zero(params, 4).with_term(&[1, 0, 0, 0], two(alpha));
    let shifts = vec![Coefficient::zero(params); 4];
    OdeSystem::new(shifts, vec![a_rhs, b_rhs, c_rhs, d_rhs]).unwrap()
}

#[test]
fn quadratic_model_powers_match_the_system_exponential() {
    let params = Parameters::new(["alpha", "beta", "gamma", "u", "v"]).unwrap();
    let alpha = Coefficient::parameter(&params, "alpha").unwrap();
    let beta = Coefficient::parameter(&params, "beta").unwrap();
    let gamma = Coefficient::parameter(&params, "gamma").unwrap();
    let u = Coefficient::parameter(&params, "u").unwrap();
    let v = Coefficient::parameter(&params, "v").unwrap();

    let op = single_mode_op(&params, &[(2, 0, &beta), (1, 1, &gamma), (0, 2, &alpha)]);
    let image = image_series(&op, &u, &v, 7);

    let solved = quadratic_model_system(&alpha, &beta, &gamma).solve(7);
    let combined = solved[0]
        .scale(&u.pow(2))
        .add(&solved[1].scale(&v.pow(2)))
        .add(&solved[2].scale(&(&u * &v)))
        .add(&solved[3]);
    assert_eq!(image, combined.exp().unwrap());
}

#[test]
fn quadratic_model_solutions_match_the_tangent_closed_forms() {
    fn eval_f64(series: &TruncatedSeries, z: f64) -> f64 {
        series.coefficients().iter().rev().fold(0.0, |acc, c| {
            acc * z + c.as_rational().unwrap().to_f64().unwrap()
        })
    }

    for (alpha, beta, gamma) in [(1i64, 1i64, 1i64), (2, 3, 1)] {
        let params = Parameters::empty();
        let system = quadratic_model_system(
            &Coefficient::from_integer(&params, alpha),
            &Coefficient::from_integer(&params, beta),
            &Coefficient::from_integer(&params, gamma),
        );
        let solved = system.solve(16);

        let (af, bf, gf) = (alpha as f64, beta as f64, gamma as f64);
        let delta = (4.0 * af * bf - gf * gf).sqrt();
        let theta = (gf / delta).atan();
        for &z in &[0.01f64, 0.025, 0.04] {
            let tangent = (delta * z + theta).tan();
            let ratio = theta.cos() / (delta * z + theta).cos();
            let a_closed = delta / (4.0 * af) * tangent - gf / (4.0 * af);
            let b_closed = delta / (4.0 * bf) * tangent - gf / (4.0 * bf);
            let c_closed = ratio - 1.0;
            let d_closed = 0.5 * ratio.ln() - gf * z / 2.0;
            assert!((eval_f64(&solved[0], z) - a_closed).abs() < 1e-9);
            assert!((eval_f64(&solved[1], z) - b_closed).abs() < 1e-9);
            assert!((eval_f64(&solved[2], z) - c_closed).abs() < 1e-9);
            assert!((eval_f64(&solved[3], z) - d_closed).abs() < 1e-9);
        }
    }
}

#[test]
fn zigzag_specialization_matches_the_closed_trigonometric_forms() {
    let params = Parameters::empty();
    let one = Coefficient::one(&params);
    let system = quadratic_model_system(&one, &one, &Coefficient::zero(&params));
    let solved = system.solve(12);

    // cos(2z) through order 13, so its logarithm's derivative is full at 12.
    let cosine = TruncatedSeries::from_fn(&params, 13, |n| {
        if n % 2 != 0 {
            return Coefficient::zero(&params);
        }
        let mut numerator = BigInt::from(1) << n;
        if (n / 2) % 2 == 1 {
            numerator = -numerator;
        }
        Coefficient::from_rational(
            &params,
            BigRational::new(numerator, combinatorics::factorial(n as u64)),
        )
    });
    let log_cos = cosine.log().unwrap();
    let minus_half = Coefficient::from_rational(&params, BigRational::new((-1).into(), 2.into()));
    let tangent = log_cos.differentiate().scale(&minus_half);
    let half_tangent = tangent.scale(&Coefficient::from_rational(
        &params,
        BigRational::new(1.into(), 2.into()),
    ));
    let secant_minus_one = log_cos
        .scale(&-Coefficient::one(&params))
        .exp()
        .unwrap()
        .sub(&TruncatedSeries::constant(Coefficient::one(&params), 13))
        .truncate(12);
    let log_component = log_cos.scale(&minus_half).truncate(12);

    assert_eq!(solved[0], half_tangent);
    assert_eq!(solved[1], half_tangent);
    assert_eq!(solved[2], secant_minus_one);
    assert_eq!(solved[3], log_component);
}

#[test]
fn zigzag_family_matches_its_operator() {
    let params = Parameters::new(["u", "v"]).unwrap();
    let u = Coefficient::parameter(&params, "u").unwrap();
    let v = Coefficient::parameter(&params, "v").unwrap();
    let one = Coefficient::one(&params);
    let op = single_mode_op(&params, &[(2, 0, &one), (0, 2, &one)]);
    let family = GfFamily::Zigzag { u: u.clone(), v: v.clone() };
    assert_eq!(image_series(&op, &u, &v, 7), family.expand(7).unwrap());
}

// ---------------------------------------------------------------------------
// The two-mode exchange model: hyperbolic solutions and the operator action.
// ---------------------------------------------------------------------------

fn exchange_solutions(params: &Parameters, order: usize) -> (TruncatedSeries, TruncatedSeries) {
    let x = Coefficient::parameter(params, "x").unwrap();
    let y = Coefficient::parameter(params, "y").unwrap();
    let one = Coefficient::one(params);
    let first = SystemPolynomial::zero(params, 2).with_term(&[0, 1], one.clone());
    let second = SystemPolynomial::zero(params, 2).with_term(&[1, 0], one);
    let system = OdeSystem::new(vec![x, y], vec![first, second]).unwrap();
    let mut solved = system.solve(order);
    let second = solved.pop().unwrap();
    (solved.pop().unwrap(), second)
}

#[test]
fn exchange_solutions_are_hyperbolic() {
    let params = Parameters::new(["x", "y"]).unwrap();
    let x = Coefficient::parameter(&params, "x").unwrap();
    let y = Coefficient::parameter(&params, "y").unwrap();
    let (tx, ty) = exchange_solutions(&params, 10);
    // T_x = x (cosh z - 1) + y sinh z, and symmetrically for T_y.
    let expected_x = TruncatedSeries::from_fn(&params, 10, |n| {
        let scale = BigRational::new(1.into(), combinatorics::factorial(n as u64));
        match n {
            0 => Coefficient::zero(&params),
            _ if n % 2 == 0 => x.scale(&scale),
            _ => y.scale(&scale),
        }
    });
    let expected_y = TruncatedSeries::from_fn(&params, 10, |n| {
        let scale = BigRational::new(1.into(), combinatorics::factorial(n as u64));
        match n {
            0 => Coefficient::zero(&params),
            _ if n % 2 == 0 => y.scale(&scale),
            _ => x.scale(&scale),
        }
    });
    assert_eq!(tx, expected_x);
    assert_eq!(ty, expected_y);
}

#[test]
fn exchange_solutions_match_the_two_mode_operator_action() {
    let series_params = Parameters::new(["x", "y"]).unwrap();
    let (tx, ty) = exchange_solutions(&series_params, 10);
    let x = Coefficient::parameter(&series_params, "x").unwrap();
    let y = Coefficient::parameter(&series_params, "y").unwrap();
    let shifted_x = tx.add(&TruncatedSeries::constant(x, 10));
    let shifted_y = ty.add(&TruncatedSeries::constant(y, 10));

    // The exchange operator X_0 D_1 + X_1 D_0 acting on monomials, with the
    // model variables of the two modes playing the roles of x and y.
    let op_params = Parameters::empty();
    let mut op = OperatorPolynomial::zero(&op_params, 2);
    op.add_word(Word::normal_multi_mode(&[1, 0], &[0, 1]), Coefficient::one(&op_params))
        .unwrap();
    op.add_word(Word::normal_multi_mode(&[0, 1], &[1, 0]), Coefficient::one(&op_params))
        .unwrap();

    for i in 0..=3u32 {
        for j in 0..=(3 - i) {
            let series_side = shifted_x.pow(i).mul(&shifted_y.pow(j));
            let mut model =
                ModelPolynomial::monomial(&op_params, 2, &[i, j], Coefficient::one(&op_params));
            for n in 0..=10usize {
                let mut expected = Coefficient::zero(&series_params);
                for (exps, coeff) in model.terms() {
                    expected += &Coefficient::monomial(
                        &series_params,
                        exps,
                        coeff.as_rational().expect("undeformed action stays rational"),
                    );
                }
                assert_eq!(
                    egf_value(&series_side, n),
                    expected,
                    "mismatch at order {n} for monomial ({i}, {j})"
                );
                model = op.apply(&model).unwrap();
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Eulerian family against direct enumeration.
// ---------------------------------------------------------------------------

fn for_each_permutation(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        visit(items);
        return;
    }
    for i in 0..k {
        items.swap(i, k - 1);
        for_each_permutation(items, k - 1, visit);
        items.swap(i, k - 1);
    }
}

#[test]
fn eulerian_family_counts_permutations_by_descents() {
    let params = Parameters::new(["u"]).unwrap();
    let u = Coefficient::parameter(&params, "u").unwrap();
    let series = GfFamily::Eulerian { u: u.clone() }.expand(6).unwrap();
    assert!(egf_value(&series, 0).is_one());
    for n in 1..=6usize {
        let mut expected = Coefficient::zero(&params);
        let mut items: Vec<usize> = (0..n).collect();
        for_each_permutation(&mut items, n, &mut |perm| {
            let descents = perm.windows(2).filter(|w| w[0] > w[1]).count() as u32;
            expected += &u.pow(descents + 1);
        });
        assert_eq!(egf_value(&series, n), expected, "mismatch at length {n}");
    }
}

// ---------------------------------------------------------------------------
// Truncated Dobinski sums bracket the Bell numbers.
// ---------------------------------------------------------------------------

#[test]
fn truncated_dobinski_sums_bracket_the_bell_numbers() {
    let tolerance_scale = BigRational::from_integer(1_000_000.into());
    for n in 0..=10u32 {
        let cutoff = 3 * n + 20;
        let mut numerator = BigRational::zero();
        let mut weight = BigRational::zero();
        for k in 0..=cutoff {
            let inverse_factorial =
                BigRational::new(1.into(), combinatorics::factorial(k.into()));
            numerator += BigRational::from_integer(BigInt::from(k).pow(n)) * &inverse_factorial;
            weight += inverse_factorial;
        }
        let approximation = numerator / weight;
        let target = BigRational::from_integer(bell(n));
        let error = (approximation - &target).abs();
        assert!(
            error * &tolerance_scale <= target,
            "partial sums miss the target at n = {n}"
        );
    }
}
