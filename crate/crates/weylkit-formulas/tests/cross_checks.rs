//! Cross-checks of every closed form against an independent oracle: the
//! operator rewriting engine, brute-force enumeration, or an exact Markov
//! chain computation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use weylkit_core::{
    Coefficient, NormalForm, NormalMonomial, OperatorPolynomial, Parameters, Word,
};
use weylkit_formulas::{
    bell, coupon_collector, coupon_expected, duchon, ehrenfest_prob, gen_stirling_balanced,
    gen_stirling_rs, involution_coeff, lah_gamma, matching_crossing_polynomial, q_factorial,
    q_integer, scherk_c, stirling1, stirling2, touchard_riordan, CouponGroup,
};

fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

/// `0` when the index pair leaves the triangle, the Stirling set number
/// otherwise.
fn s2_or_zero(n: u32, k: u32) -> BigInt {
    if k <= n {
        stirling2(n, k).unwrap()
    } else {
        BigInt::zero()
    }
}

/// Normal ordering of `(X^raises D^lowers)^n` in the undeformed algebra.
fn gate_power(params: &Parameters, raises: u32, lowers: u32, n: u32) -> NormalForm {
    OperatorPolynomial::from_word(params, 1, Word::normal_single_mode(raises, lowers))
        .unwrap()
        .normal_order()
        .power(n)
        .unwrap()
}

fn integer_coeff(nf: &NormalForm, raises: u32, lowers: u32) -> BigInt {
    let value = nf
        .coefficient(&NormalMonomial::single_mode(raises, lowers))
        .as_rational()
        .expect("undeformed coefficients are constants");
    assert!(value.is_integer());
    value.to_integer()
}

#[test]
fn stirling_triangles_invert_each_other() {
    // With signs (-1)^{n-k}, the cycle and set triangles are inverse
    // matrices.
    let size = 12u32;
    for n in 0..=size {
        for m in 0..=size {
            let mut forward = BigInt::zero();
            let mut backward = BigInt::zero();
            for k in 0..=size {
                if k <= n && m <= k {
                    let signed = if (n - k) % 2 == 0 { 1 } else { -1 };
                    forward += big(signed) * stirling1(n, k).unwrap() * s2_or_zero(k, m);
                    let signed = if (k - m) % 2 == 0 { 1 } else { -1 };
                    backward += big(signed) * s2_or_zero(n, k) * stirling1(k, m).unwrap();
                }
            }
            let expected = if n == m { big(1) } else { BigInt::zero() };
            assert_eq!(forward, expected, "cycle x set at ({n}, {m})");
            assert_eq!(backward, expected, "set x cycle at ({n}, {m})");
        }
    }
}

#[test]
fn cycle_numbers_expand_rising_factorials() {
    // x (x+1) ... (x+n-1) = sum_k [n, k] x^k.
    for n in 0..=10usize {
        let mut poly = vec![BigInt::one()];
        for i in 0..n {
            let mut next = vec![BigInt::zero(); poly.len() + 1];
            for (d, c) in poly.iter().enumerate() {
                next[d + 1] += c;
                next[d] += big(i as i64) * c;
            }
            poly = next;
        }
        for (k, c) in poly.iter().enumerate() {
            assert_eq!(*c, stirling1(n as u32, k as u32).unwrap());
        }
    }
}

#[test]
fn two_two_numbers_expand_in_plain_stirling_numbers() {
    for n in 1..=7u32 {
        for k in 2..=2 * n {
            let mut alternating = BigInt::zero();
            for r in 0..=n {
                let term = weylkit_core::combinatorics::binomial(n.into(), r.into())
                    * s2_or_zero(n + r, k);
                if (n - r) % 2 == 0 {
                    alternating += term;
                } else {
                    alternating -= term;
                }
            }
            assert_eq!(
                gen_stirling_rs(n, k, 2, 2).unwrap(),
                alternating,
                "({n}, {k})"
            );
        }
    }
}

#[test]
fn crossing_polynomial_matches_brute_force_and_rewriting() {
    let params = Parameters::new(["q"]).unwrap();
    let q = Coefficient::parameter(&params, "q").unwrap();

    // Brute-force chord enumeration up to 10 points.
    for chords in 0..=5u32 {
        assert_eq!(
            touchard_riordan(chords, &q).unwrap(),
            matching_crossing_polynomial(chords, &q),
            "{chords} chords"
        );
    }

    // Constant terms of deformed powers of (raise + lower): even powers
    // give the crossing polynomial, odd powers vanish.
    let mut sum = OperatorPolynomial::zero_deformed(&params, 1, q.clone()).unwrap();
    sum.add_word(Word::normal_single_mode(1, 0), Coefficient::one(&params))
        .unwrap();
    sum.add_word(Word::normal_single_mode(0, 1), Coefficient::one(&params))
        .unwrap();
    for chords in 0..=4u32 {
        let even = sum.pow(2 * chords).normal_order();
        assert_eq!(
            even.constant_term(),
            touchard_riordan(chords, &q).unwrap(),
            "constant term at 2x{chords} letters"
        );
        let odd = sum.pow(2 * chords + 1).normal_order();
        assert!(odd.constant_term().is_zero());
    }
}

#[test]
fn contiguity_free_partitions_shift_the_bell_sequence() {
    // Set partitions of {1..n} with no block containing two consecutive
    // integers, enumerated through restricted growth strings.
    fn count(n: usize) -> BigInt {
        if n == 0 {
            return big(1);
        }
        let mut total = BigInt::zero();
        let mut rgs = vec![0usize; n];
        loop {
            let contiguous = rgs.windows(2).any(|w| w[0] == w[1]);
            if !contiguous {
                total += 1;
            }
            // Advance to the next restricted growth string.
            let mut i = n;
            loop {
                if i == 1 {
                    return total;
                }
                i -= 1;
                let cap = 1 + rgs[..i].iter().copied().max().unwrap_or(0);
                if rgs[i] < cap {
                    rgs[i] += 1;
                    for entry in rgs[i + 1..].iter_mut() {
                        *entry = 0;
                    }
                    break;
                }
            }
        }
    }

    for n in 1..=9u32 {
        assert_eq!(count(n as usize), bell(n - 1), "n = {n}");
    }
}

#[test]
fn deformed_integer_laws() {
    let params = Parameters::new(["q"]).unwrap();
    let q = Coefficient::parameter(&params, "q").unwrap();

    // [n m] = [n] * ([m] evaluated at q^n).
    for n in 1..=5u32 {
        for m in 1..=5u32 {
            let outer = q_integer(&q, m).substitute("q", &q.pow(n)).unwrap();
            assert_eq!(q_integer(&q, n * m), q_integer(&q, n) * outer);
        }
    }

    // [n]! equals the full contraction of n deformed lowering steps
    // applied to x^n.
    for n in 0..=7u32 {
        let mut lowering = OperatorPolynomial::zero_deformed(&params, 1, q.clone()).unwrap();
        lowering
            .add_word(Word::normal_single_mode(0, n), Coefficient::one(&params))
            .unwrap();
        let xn = weylkit_core::ModelPolynomial::single_variable_power(&params, n);
        let image = lowering.apply(&xn).unwrap();
        let expected = weylkit_core::ModelPolynomial::monomial(
            &params,
            1,
            &[0],
            q_factorial(&q, n),
        );
        assert_eq!(image, expected, "n = {n}");
    }
}

#[test]
fn set_numbers_match_number_operator_powers() {
    let params = Parameters::empty();
    for n in 0..=8u32 {
        let power = gate_power(&params, 1, 1, n);
        for k in 0..=n {
            assert_eq!(integer_coeff(&power, k, k), s2_or_zero(n, k), "({n}, {k})");
        }
    }
}

#[test]
fn generalized_set_numbers_match_gate_powers() {
    let params = Parameters::empty();
    for (r, s) in [(1u32, 1u32), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3)] {
        for n in 1..=4u32 {
            let power = gate_power(&params, r, s, n);
            for k in s..=s * n {
                assert_eq!(
                    integer_coeff(&power, n * (r - s) + k, k),
                    gen_stirling_rs(n, k, r, s).unwrap(),
                    "(n={n}, k={k}) for gate ({r}, {s})"
                );
            }
        }
    }
    // Lowering-heavy gates land on the transposed monomials.
    for n in 1..=3u32 {
        let power = gate_power(&params, 2, 3, n);
        for k in 2..=2 * n {
            assert_eq!(
                integer_coeff(&power, k, n + k),
                gen_stirling_rs(n, k, 2, 3).unwrap(),
                "(n={n}, k={k}) for gate (2, 3)"
            );
        }
    }
}

#[test]
fn balanced_weights_match_mixed_gate_powers() {
    let params = Parameters::empty();
    let one = Coefficient::one(&params);
    let zero = Coefficient::zero(&params);
    // The gate XD + X^2 D^2, with weights eta_1 = eta_2 = 1.
    let eta = [zero, one.clone(), one.clone()];
    let mut gate = OperatorPolynomial::zero(&params, 1);
    gate.add_word(Word::normal_single_mode(1, 1), one.clone()).unwrap();
    gate.add_word(Word::normal_single_mode(2, 2), one).unwrap();
    let ordered = gate.normal_order();
    for n in 1..=3u32 {
        let power = ordered.power(n).unwrap();
        for k in 0..=2 * n {
            assert_eq!(
                power.coefficient(&NormalMonomial::single_mode(k, k)),
                gen_stirling_balanced(&params, n, k, &eta).unwrap(),
                "(n={n}, k={k})"
            );
        }
    }
}

#[test]
fn involution_coefficients_match_symbolic_powers() {
    let params = Parameters::new(["a", "b"]).unwrap();
    let a = Coefficient::parameter(&params, "a").unwrap();
    let b = Coefficient::parameter(&params, "b").unwrap();

    let mut sum = OperatorPolynomial::zero(&params, 1);
    sum.add_word(Word::normal_single_mode(1, 0), a.clone()).unwrap();
    sum.add_word(Word::normal_single_mode(0, 1), b.clone()).unwrap();

    for n in 0..=6u32 {
        let power = sum.pow(n).normal_order();
        for raises in 0..=n {
            for lowers in 0..=n {
                assert_eq!(
                    power.coefficient(&NormalMonomial::single_mode(raises, lowers)),
                    involution_coeff(n, raises, lowers, &a, &b),
                    "(n={n}, raises={raises}, lowers={lowers})"
                );
            }
        }
    }
}

#[test]
fn lah_closed_forms_match_rewriting() {
    // Verification status per (n, k, r): every triple must be confirmed by
    // the rewrite engine; any unverified triple fails the test by name.
    let params = Parameters::empty();
    let mut unverified: Vec<String> = Vec::new();
    for r in 2..=4u32 {
        for n in 1..=5u32 {
            let power = gate_power(&params, r, 1, n);
            for k in 1..=n {
                let oracle = integer_coeff(&power, k + (r - 1) * n, k);
                let closed = lah_gamma(n, k, r).unwrap();
                if closed != oracle {
                    unverified.push(format!("(n={n}, k={k}, r={r})"));
                }
            }
        }
    }
    assert!(
        unverified.is_empty(),
        "closed form disagrees with the rewrite engine at {unverified:?}"
    );
}

#[test]
fn ordered_product_sums_match_rewriting() {
    let params = Parameters::empty();
    let power = gate_power(&params, 2, 1, 3);
    for k in 1..=3u32 {
        assert_eq!(
            integer_coeff(&power, k + 3, k),
            scherk_c(3, k, 2).unwrap(),
            "k = {k}"
        );
    }
}

#[test]
fn urn_exchange_matches_direct_chain() {
    // One-ball moves between two urns: exact n-step distribution by
    // dynamic programming.
    for m in 1..=4u32 {
        for a0 in 0..=m {
            let mut dist = vec![BigRational::zero(); m as usize + 1];
            dist[a0 as usize] = BigRational::one();
            for n in 0..=6u32 {
                for a in 0..=m {
                    assert_eq!(
                        ehrenfest_prob(m, n, a0, a).unwrap(),
                        dist[a as usize],
                        "m={m}, n={n}, a0={a0}, a={a}"
                    );
                }
                let mut next = vec![BigRational::zero(); m as usize + 1];
                for a in 0..=m as usize {
                    if dist[a].is_zero() {
                        continue;
                    }
                    if a > 0 {
                        next[a - 1] +=
                            &dist[a] * BigRational::new(big(a as i64), big(m as i64));
                    }
                    if a < m as usize {
                        next[a + 1] += &dist[a]
                            * BigRational::new(big(m as i64 - a as i64), big(m as i64));
                    }
                }
                dist = next;
            }
        }
    }
}

/// Expected draws to finish collecting, by backward substitution over the
/// number of distinct coupons already held.
fn markov_expected(m: u32, group: CouponGroup) -> BigRational {
    let m = m as i64;
    let mut expected = vec![BigRational::zero(); m as usize + 2];
    for c in (0..m).rev() {
        let (stay, one_new, two_new) = match group {
            CouponGroup::Single => (
                BigRational::new(big(c), big(m)),
                BigRational::new(big(m - c), big(m)),
                BigRational::zero(),
            ),
            CouponGroup::Pair => {
                let total = big(m) * big(m - 1);
                (
                    BigRational::new(big(c) * big(c - 1).max(big(0)), total.clone()),
                    BigRational::new(big(2) * big(c) * big(m - c), total.clone()),
                    BigRational::new(big(m - c) * big(m - c - 1).max(big(0)), total),
                )
            }
        };
        let value = (BigRational::one()
            + &one_new * &expected[c as usize + 1]
            + &two_new * &expected[c as usize + 2])
            / (BigRational::one() - stay);
        expected[c as usize] = value;
    }
    expected[0].clone()
}

#[test]
fn coupon_laws_match_markov_chains() {
    for m in 1..=6u32 {
        assert_eq!(
            coupon_expected(m, CouponGroup::Single).unwrap(),
            markov_expected(m, CouponGroup::Single),
            "single, m = {m}"
        );
    }
    for m in 2..=6u32 {
        assert_eq!(
            coupon_expected(m, CouponGroup::Pair).unwrap(),
            markov_expected(m, CouponGroup::Pair),
            "pair, m = {m}"
        );
    }

    // Arrival probabilities against a forward distribution DP.
    for m in 3..=4u32 {
        let states = m as usize + 1;
        let mut dist = vec![BigRational::zero(); states];
        dist[0] = BigRational::one();
        let total = big(i64::from(m)) * big(i64::from(m) - 1);
        for n in 0..=8u32 {
            assert_eq!(
                coupon_collector(m, n, CouponGroup::Pair).unwrap(),
                dist[m as usize],
                "m={m}, n={n}"
            );
            // One more ordered-pair draw. The complete state is absorbing:
            // its stay probability is m(m-1)/total = 1.
            let mut next = vec![BigRational::zero(); states];
            for c in 0..states {
                if dist[c].is_zero() {
                    continue;
                }
                let c_i = c as i64;
                let m_i = i64::from(m);
                let stay = BigRational::new(big(c_i) * big((c_i - 1).max(0)), total.clone());
                let one_new =
                    BigRational::new(big(2) * big(c_i) * big(m_i - c_i), total.clone());
                let two_new = BigRational::new(
                    big(m_i - c_i) * big((m_i - c_i - 1).max(0)),
                    total.clone(),
                );
                next[c] += &dist[c] * stay;
                if c + 1 < states {
                    next[c + 1] += &dist[c] * one_new;
                }
                if c + 2 < states {
                    next[c + 2] += &dist[c] * two_new;
                }
            }
            dist = next;
        }
    }
}

#[test]
fn path_counts_match_a_direct_lattice_walk() {
    // Unweighted DP over nonnegative altitudes with steps +2 / -3.
    fn walk_count(n: u32) -> BigInt {
        let length = (5 * n) as usize;
        let ceiling = 2 * length + 1;
        let mut counts = vec![BigInt::zero(); ceiling];
        counts[0] = BigInt::one();
        for _ in 0..length {
            let mut next = vec![BigInt::zero(); ceiling];
            for (altitude, ways) in counts.iter().enumerate() {
                if ways.is_zero() {
                    continue;
                }
                if altitude + 2 < ceiling {
                    next[altitude + 2] += ways;
                }
                if altitude >= 3 {
                    next[altitude - 3] += ways;
                }
            }
            counts = next;
        }
        counts[0].clone()
    }

    for n in 0..=4u32 {
        assert_eq!(duchon(n), walk_count(n), "n = {n}");
    }
}
