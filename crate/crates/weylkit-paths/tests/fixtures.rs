//! Pinned values for path counting and continued-fraction expansion.

use num_bigint::BigInt;
use num_rational::BigRational;
use weylkit_core::{Coefficient, Parameters, Word};
use weylkit_paths::{
    jfraction_expand, lattice_count, weyl_path_ct, JFractionSpec, PathsError, Step, StepSet,
    WeightRule,
};

fn int(params: &Parameters, value: i64) -> Coefficient {
    Coefficient::from_integer(params, value)
}

#[test]
fn walk_extracts_constant_terms_of_small_words() {
    let cases = [("DDXX", 2), ("XXDD", 0), ("DXDDXDXX", 4), ("", 1)];
    for (text, expected) in cases {
        let word = Word::parse_single_mode(text).unwrap();
        assert_eq!(weyl_path_ct(&word), BigInt::from(expected), "word {text:?}");
    }
}

#[test]
fn ascending_three_descending_two_paths() {
    let params = Parameters::empty();
    let steps = StepSet::new(
        &params,
        vec![
            Step::new(3, WeightRule::one(&params)),
            Step::new(-2, WeightRule::falling_factorial(&params, 2)),
        ],
    );
    let expected = [0, 0, 0, 0, 864];
    for (length, &value) in expected.iter().enumerate() {
        assert_eq!(lattice_count(&steps, length + 1), int(&params, value));
    }
}

#[test]
fn ascending_four_descending_two_paths() {
    let params = Parameters::empty();
    let steps = StepSet::new(
        &params,
        vec![
            Step::new(4, WeightRule::one(&params)),
            Step::new(-2, WeightRule::falling_factorial(&params, 2)),
        ],
    );
    let expected = [0, 0, 24];
    for (length, &value) in expected.iter().enumerate() {
        assert_eq!(lattice_count(&steps, length + 1), int(&params, value));
    }
}

#[test]
fn unweighted_knight_paths_match_the_known_counts() {
    let params = Parameters::empty();
    let steps = StepSet::new(
        &params,
        vec![
            Step::new(2, WeightRule::one(&params)),
            Step::new(-3, WeightRule::one(&params)),
        ],
    );
    // Nonnegative bridges with steps +2/-3 exist only at lengths divisible
    // by 5; the nonzero counts are 1, 2, 23, 377, ...
    let expected = [1, 2, 23, 377];
    for (block, &value) in expected.iter().enumerate() {
        assert_eq!(lattice_count(&steps, 5 * block), int(&params, value));
    }
    for length in [1usize, 2, 3, 4, 6, 7, 8, 9] {
        assert!(lattice_count(&steps, length).is_zero());
    }
}

#[test]
fn matchings_fraction_expands_to_double_factorials() {
    let params = Parameters::empty();
    let spec = JFractionSpec::matchings(&params, 6).unwrap();
    let series = jfraction_expand(&spec, 10).unwrap();
    let expected = [1, 1, 3, 15, 105, 945];
    for (n, &value) in expected.iter().enumerate() {
        assert_eq!(*series.coefficient(2 * n), int(&params, value));
        if n > 0 {
            assert!(series.coefficient(2 * n - 1).is_zero());
        }
    }
}

#[test]
fn squared_sum_fraction_expands_and_rescales() {
    let params = Parameters::empty();
    let spec = JFractionSpec::sum_powers(&params, 2, 5).unwrap();
    let series = jfraction_expand(&spec, 8).unwrap();
    let raw = [1, 2, 28, 1112, 87568];
    for (n, &value) in raw.iter().enumerate() {
        assert_eq!(*series.coefficient(2 * n), int(&params, value));
    }
    // Shrinking the variable by a factor sqrt(2) divides the coefficient of
    // z^n by 2^(n/2). Odd coefficients vanish, so the rescaled sequence
    // stays integral: at z^(2n) the divisor is 2^n.
    let rescaled = [1, 1, 7, 139, 5473];
    for (n, &value) in rescaled.iter().enumerate() {
        let divisor = BigRational::from_integer(BigInt::from(1) << n);
        assert_eq!(
            series.coefficient(2 * n).scale(&divisor.recip()),
            int(&params, value)
        );
    }
}

#[test]
fn cubed_sum_fraction_expands() {
    let params = Parameters::empty();
    let spec = JFractionSpec::sum_powers(&params, 3, 5).unwrap();
    let series = jfraction_expand(&spec, 6).unwrap();
    let expected = [1, 6, 756, 458136];
    for (n, &value) in expected.iter().enumerate() {
        assert_eq!(*series.coefficient(2 * n), int(&params, value));
        if n > 0 {
            assert!(series.coefficient(2 * n - 1).is_zero());
        }
    }
}

#[test]
fn q_weighted_fraction_counts_crossings() {
    let params = Parameters::new(["q"]).unwrap();
    let q = Coefficient::parameter(&params, "q").unwrap();
    let spec = JFractionSpec::q_inversion(&q, 4).unwrap();
    let series = jfraction_expand(&spec, 6).unwrap();
    assert!(series.coefficient(0).is_one());
    // Two chords either avoid each other (two ways) or cross (one way).
    let two_plus_q = &int(&params, 2) + &q;
    assert_eq!(*series.coefficient(4), two_plus_q);
}

#[test]
fn paired_q_fraction_specializes_to_the_squared_sum() {
    let params = Parameters::empty();
    let q_one = Coefficient::one(&params);
    let spec = JFractionSpec::q_inversion_paired(&q_one, 4).unwrap();
    let series = jfraction_expand(&spec, 6).unwrap();
    assert_eq!(*series.coefficient(4), int(&params, 28));
    let squared = JFractionSpec::sum_powers(&params, 2, 4).unwrap();
    assert_eq!(series, jfraction_expand(&squared, 6).unwrap());
}

#[test]
fn expansion_depth_requirements_are_enforced() {
    let params = Parameters::empty();
    let spec = JFractionSpec::matchings(&params, 4).unwrap();
    assert!(jfraction_expand(&spec, 7).is_ok());
    match jfraction_expand(&spec, 10) {
        Err(PathsError::InsufficientDepth { order: 10, required: 6, found: 4 }) => {}
        other => panic!("expected an insufficient-depth error, got {other:?}"),
    }
}
