//! Property tests for the rewriting engine: order independence, agreement
//! with the differential-operator model, pairing equivalence, duality,
//! shift composition, and parameter specialization.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use weylkit_core::combinatorics::binomial;
use weylkit_core::{
    normal_order_by_pairings, Coefficient, Letter, ModelPolynomial, NormalForm,
    OperatorPolynomial, Parameters, RewriteStrategy, Word,
};

fn word_from_bools(raises: &[bool]) -> Word {
    Word::new(
        raises
            .iter()
            .map(|&r| if r { Letter::raise(0) } else { Letter::lower(0) })
            .collect(),
    )
}

fn symbolic_q() -> (Parameters, Coefficient) {
    let params = Parameters::new(["q"]).unwrap();
    let q = Coefficient::parameter(&params, "q").unwrap();
    (params, q)
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A random operator polynomial: up to three words of length at most six,
/// with small integer coefficients.
fn small_operator() -> impl Strategy<Value = Vec<(Vec<bool>, i64)>> {
    prop::collection::vec(
        (prop::collection::vec(any::<bool>(), 0..=6), -4i64..=4),
        1..=3,
    )
}

fn build_operator(
    params: &Parameters,
    deformation: Coefficient,
    words: &[(Vec<bool>, i64)],
) -> OperatorPolynomial {
    let mut op = OperatorPolynomial::zero_deformed(params, 1, deformation).unwrap();
    for (raises, c) in words {
        op.add_word(word_from_bools(raises), Coefficient::from_integer(params, *c))
            .unwrap();
    }
    op
}

proptest! {
    /// Rewriting in leftmost and rightmost order gives the same normal form,
    /// with and without a symbolic deformation.
    #[test]
    fn rewrite_order_does_not_matter(raises in prop::collection::vec(any::<bool>(), 0..=10)) {
        let word = word_from_bools(&raises);

        let params = Parameters::empty();
        let op = OperatorPolynomial::from_word(&params, 1, word.clone()).unwrap();
        prop_assert_eq!(
            op.normal_order_with_strategy(RewriteStrategy::Leftmost),
            op.normal_order_with_strategy(RewriteStrategy::Rightmost)
        );

        let (q_params, q) = symbolic_q();
        let mut op = OperatorPolynomial::zero_deformed(&q_params, 1, q).unwrap();
        op.add_word(word, Coefficient::one(&q_params)).unwrap();
        prop_assert_eq!(
            op.normal_order_with_strategy(RewriteStrategy::Leftmost),
            op.normal_order_with_strategy(RewriteStrategy::Rightmost)
        );
    }

    /// Normal ordering does not change how an operator acts on polynomials.
    #[test]
    fn normal_order_preserves_action(words in small_operator(), m in 0u32..=6) {
        let params = Parameters::empty();
        let op = build_operator(&params, Coefficient::one(&params), &words);
        let xm = ModelPolynomial::single_variable_power(&params, m);
        let direct = op.apply(&xm).unwrap();
        let ordered = op.normal_order().apply(&xm).unwrap();
        prop_assert_eq!(direct, ordered);
    }

    /// The same, with a symbolic deformation parameter.
    #[test]
    fn deformed_normal_order_preserves_action(words in small_operator(), m in 0u32..=6) {
        let (params, q) = symbolic_q();
        let op = build_operator(&params, q, &words);
        let xm = ModelPolynomial::single_variable_power(&params, m);
        let direct = op.apply(&xm).unwrap();
        let ordered = op.normal_order().apply(&xm).unwrap();
        prop_assert_eq!(direct, ordered);
    }

    /// Summing over pairings agrees with rewriting on undeformed words.
    #[test]
    fn pairings_agree_with_rewriting(raises in prop::collection::vec(any::<bool>(), 0..=10)) {
        let params = Parameters::empty();
        let word = word_from_bools(&raises);
        let by_pairings = normal_order_by_pairings(&params, &word, 10).unwrap();
        let by_rewriting = OperatorPolynomial::from_word(&params, 1, word)
            .unwrap()
            .normal_order();
        prop_assert_eq!(by_pairings, by_rewriting);
    }

    /// Substituting 1 for the deformation parameter after symbolic normal
    /// ordering matches normal ordering with deformation 1.
    #[test]
    fn symbolic_deformation_degenerates_at_one(raises in prop::collection::vec(any::<bool>(), 0..=8)) {
        let (params, q) = symbolic_q();
        let word = word_from_bools(&raises);

        let mut deformed = OperatorPolynomial::zero_deformed(&params, 1, q).unwrap();
        deformed.add_word(word.clone(), Coefficient::one(&params)).unwrap();
        let specialized = deformed
            .normal_order()
            .substitute_parameter("q", &Coefficient::one(&params))
            .unwrap();

        let mut plain = OperatorPolynomial::zero(&params, 1);
        plain.add_word(word, Coefficient::one(&params)).unwrap();
        prop_assert_eq!(specialized, plain.normal_order());
    }

    /// Symbolic normal ordering then substituting a rational value agrees
    /// with normal ordering at that fixed deformation.
    #[test]
    fn symbolic_deformation_specializes(
        raises in prop::collection::vec(any::<bool>(), 0..=8),
        num in -3i64..=3,
        den in 1i64..=3,
    ) {
        let (params, q) = symbolic_q();
        let word = word_from_bools(&raises);
        let value = Coefficient::from_rational(&params, rational(num, den));

        let mut symbolic = OperatorPolynomial::zero_deformed(&params, 1, q).unwrap();
        symbolic.add_word(word.clone(), Coefficient::one(&params)).unwrap();
        let specialized = symbolic
            .normal_order()
            .substitute_parameter("q", &value)
            .unwrap();

        let mut fixed = OperatorPolynomial::zero_deformed(&params, 1, value).unwrap();
        fixed.add_word(word, Coefficient::one(&params)).unwrap();
        prop_assert_eq!(specialized, fixed.normal_order());
    }

    /// Truncated exponential of lowering shifts the argument: applying
    /// `sum_k y^k/k! D^k` to a polynomial of degree at most 8 replaces
    /// `x` by `x + y`.
    #[test]
    fn lowering_exponential_shifts_the_variable(coeffs in prop::collection::vec(-5i64..=5, 1..=9)) {
        let params = Parameters::new(["y"]).unwrap();
        let y = Coefficient::parameter(&params, "y").unwrap();
        let degree = coeffs.len() as u32 - 1;

        // f(x) with the given integer coefficients.
        let mut f = ModelPolynomial::zero(&params, 1);
        for (m, &c) in coeffs.iter().enumerate() {
            f = f
                .add(&ModelPolynomial::monomial(
                    &params,
                    1,
                    &[m as u32],
                    Coefficient::from_integer(&params, c),
                ))
                .unwrap();
        }

        // sum_{k <= deg f} y^k / k! D^k, applied to f.
        let mut shift_op = OperatorPolynomial::zero(&params, 1);
        let mut k_factorial = BigRational::from_integer(BigInt::from(1));
        for k in 0..=degree {
            if k > 0 {
                k_factorial *= BigRational::from_integer(BigInt::from(k));
            }
            let weight = y.pow(k).scale(&k_factorial.recip());
            shift_op
                .add_word(
                    Word::new(vec![Letter::lower(0); k as usize]),
                    weight,
                )
                .unwrap();
        }
        let shifted = shift_op.apply(&f).unwrap();

        // f(x + y), expanded binomially.
        let mut expected = ModelPolynomial::zero(&params, 1);
        for (m, &c) in coeffs.iter().enumerate() {
            for k in 0..=m {
                let coeff = Coefficient::from_integer(&params, c)
                    .scale(&BigRational::from_integer(binomial(m as u64, k as u64)))
                    * y.pow((m - k) as u32);
                expected = expected
                    .add(&ModelPolynomial::monomial(&params, 1, &[k as u32], coeff))
                    .unwrap();
            }
        }

        prop_assert_eq!(shifted, expected);
    }
}

/// Transposition duality: coefficients of the n-th power of an operator and
/// of its dual are mirror images, for every n up to 5.
#[test]
fn duality_transposes_power_expansions() {
    let params = Parameters::empty();
    let one = Coefficient::one(&params);
    let mut candidates: Vec<OperatorPolynomial> = Vec::new();

    let mut x_plus_d = OperatorPolynomial::zero(&params, 1);
    x_plus_d.add_word(Word::parse_single_mode("X").unwrap(), one.clone()).unwrap();
    x_plus_d.add_word(Word::parse_single_mode("D").unwrap(), one.clone()).unwrap();
    candidates.push(x_plus_d);

    let mut x2_plus_d2 = OperatorPolynomial::zero(&params, 1);
    x2_plus_d2.add_word(Word::parse_single_mode("XX").unwrap(), one.clone()).unwrap();
    x2_plus_d2.add_word(Word::parse_single_mode("DD").unwrap(), one.clone()).unwrap();
    candidates.push(x2_plus_d2);

    for text in ["XXD", "XDD"] {
        candidates.push(
            OperatorPolynomial::from_word(&params, 1, Word::parse_single_mode(text).unwrap())
                .unwrap(),
        );
    }

    for h in &candidates {
        let dual = h.dual().unwrap();
        for n in 0..=5u32 {
            let direct: NormalForm = h.pow(n).normal_order();
            let transposed = dual.pow(n).normal_order();
            prop_assert_eq_plain(&direct, &transposed);
        }
    }
}

fn prop_assert_eq_plain(direct: &NormalForm, transposed: &NormalForm) {
    assert_eq!(direct.term_count(), transposed.term_count());
    for (monomial, coeff) in direct.terms() {
        assert_eq!(
            transposed.coefficient(&monomial.transposed()),
            coeff.clone(),
            "transposed coefficient mismatch at {monomial}"
        );
    }
}
