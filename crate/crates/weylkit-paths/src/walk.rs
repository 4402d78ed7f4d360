//! Constant-term extraction by a single weighted walk over a word.

use num_bigint::BigInt;
use weylkit_core::{LetterKind, Word};

/// Constant term of the normally ordered form of a single-mode word,
/// computed directly as one weighted lattice walk — no rewriting involved.
///
/// Reading the word right to left (the order in which the letters act),
/// every raising letter climbs one altitude and weighs 1, and every lowering
/// letter at altitude `k` weighs `k` and then descends. A lowering letter at
/// altitude 0 kills the walk, and a walk that does not return to altitude 0
/// contributes nothing, so both cases return 0.
///
/// # Panics
///
/// Panics if the word uses a mode other than 0; the walk encoding only makes
/// sense for one mode.
pub fn weyl_path_ct(word: &Word) -> BigInt {
    assert!(
        word.max_mode().map_or(true, |mode| mode == 0),
        "the walk encoding of the constant term needs a single-mode word"
    );
    let mut altitude = 0u64;
    let mut product = BigInt::from(1);
    for letter in word.letters().iter().rev() {
        match letter.kind {
            LetterKind::Raise => altitude += 1,
            LetterKind::Lower => {
                if altitude == 0 {
                    return BigInt::from(0);
                }
                product *= BigInt::from(altitude);
                altitude -= 1;
            }
        }
    }
    if altitude == 0 {
        product
    } else {
        BigInt::from(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_word_has_constant_term_one() {
        assert_eq!(weyl_path_ct(&Word::empty()), BigInt::from(1));
    }

    #[test]
    #[should_panic(expected = "single-mode")]
    fn multi_mode_words_are_rejected() {
        let word = Word::normal_multi_mode(&[1, 0], &[0, 1]);
        weyl_path_ct(&word);
    }
}
