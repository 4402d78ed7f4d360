//! Normal ordering by summing over contraction pairings (Wick's theorem).
//!
//! Every single-mode word equals the sum, over all sets of disjoint pairs
//! `(lower at i, raise at j)` with `i < j`, of the normally ordered monomial
//! formed by the letters left unpaired. This is an independent route to the
//! normal form, used to validate the rewrite engine; it is restricted to the
//! undeformed algebra and refuses long words because the number of pairings
//! grows faster than exponentially.

use num_rational::BigRational;

use crate::coeff::Coefficient;
use crate::error::CoreError;
use crate::op::{NormalForm, NormalMonomial};
use crate::params::Parameters;
use crate::word::{LetterKind, Word};

/// Default refusal threshold for [`normal_order_by_pairings`]. A word of 14
/// letters already has tens of thousands of pairings; beyond that the sum is
/// better served by the rewrite engine.
pub const DEFAULT_PAIRING_BOUND: usize = 14;

/// Computes the normal form of a single-mode, undeformed word by summing
/// over all contraction pairings.
///
/// # Errors
///
/// - [`CoreError::PairingRequiresSingleMode`] if any letter acts on a mode
///   other than 0.
/// - [`CoreError::PairingBoundExceeded`] if the word has more than
///   `max_letters` letters.
///
/// # Examples
///
/// ```
/// use weylkit_core::{normal_order_by_pairings, Parameters, Word, DEFAULT_PAIRING_BOUND};
///
/// let params = Parameters::empty();
/// let word = Word::parse_single_mode("DX").unwrap();
/// let nf = normal_order_by_pairings(&params, &word, DEFAULT_PAIRING_BOUND).unwrap();
/// assert_eq!(nf.to_string(), "X D + 1");
/// ```
pub fn normal_order_by_pairings(
    params: &Parameters,
    word: &Word,
    max_letters: usize,
) -> Result<NormalForm, CoreError> {
    if word.letters().iter().any(|l| l.mode != 0) {
        return Err(CoreError::PairingRequiresSingleMode);
    }
    if word.len() > max_letters {
        return Err(CoreError::PairingBoundExceeded { len: word.len(), bound: max_letters });
    }

    let kinds: Vec<LetterKind> = word.letters().iter().map(|l| l.kind).collect();
    let lowers: Vec<usize> = (0..kinds.len())
        .filter(|&i| kinds[i] == LetterKind::Lower)
        .collect();
    let raises: Vec<usize> = (0..kinds.len())
        .filter(|&i| kinds[i] == LetterKind::Raise)
        .collect();

    let mut nf = NormalForm::zero(params, 1);
    let mut counts: Vec<(NormalMonomial, u64)> = Vec::new();
    let mut used_raises = vec![false; raises.len()];
    enumerate_pairings(&lowers, &raises, 0, 0, &mut used_raises, &mut counts);

    // Merge the per-pairing contributions (each contributes exactly 1).
    let mut merged = std::collections::BTreeMap::<NormalMonomial, u64>::new();
    for (monomial, count) in counts {
        *merged.entry(monomial).or_insert(0) += count;
    }
    for (monomial, count) in merged {
        nf.add_term(
            monomial,
            Coefficient::from_rational(params, BigRational::from_integer(count.into())),
        )?;
    }
    Ok(nf)
}

/// Walks every set of disjoint pairs. `li` indexes the lowering letters in
/// position order; `paired` counts pairs already formed; `used_raises` marks
/// raising letters already consumed.
fn enumerate_pairings(
    lowers: &[usize],
    raises: &[usize],
    li: usize,
    paired: u32,
    used_raises: &mut Vec<bool>,
    out: &mut Vec<(NormalMonomial, u64)>,
) {
    if li == lowers.len() {
        let a = raises.len() as u32 - paired;
        let b = lowers.len() as u32 - paired;
        out.push((NormalMonomial::single_mode(a, b), 1));
        return;
    }
    let lower_pos = lowers[li];
    // Option 1: leave this lowering letter unpaired.
    enumerate_pairings(lowers, raises, li + 1, paired, used_raises, out);
    // Option 2: pair it with any raising letter to its right.
    for (ri, &raise_pos) in raises.iter().enumerate() {
        if raise_pos > lower_pos && !used_raises[ri] {
            used_raises[ri] = true;
            enumerate_pairings(lowers, raises, li + 1, paired + 1, used_raises, out);
            used_raises[ri] = false;
        }
    }
}
