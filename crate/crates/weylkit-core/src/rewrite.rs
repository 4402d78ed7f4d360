//! The single-mode rewrite engine behind normal ordering.
//!
//! A word over one mode is reduced by the rule `D X -> 1 + c X D`, where `c`
//! is the deformation (1 in the undeformed algebra). Redexes — a lowering
//! letter immediately followed by a raising letter — never overlap on a
//! shared letter in conflicting ways, so every choice of redex order yields
//! the same normal form; the engine still exposes the choice so that tests
//! can confirm this confluence directly.
//!
//! Termination: both branches of a rewrite strictly decrease the number of
//! (lower, raise) pairs in which the lower stands left of the raise, so the
//! recursion is well founded.

use std::collections::{BTreeMap, HashMap};

use crate::coeff::Coefficient;
use crate::word::LetterKind;

/// Which redex is rewritten first. The result is the same for both; the
/// default everywhere is [`RewriteStrategy::Leftmost`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum RewriteStrategy {
    /// Rewrite the leftmost redex first.
    #[default]
    Leftmost,
    /// Rewrite the rightmost redex first.
    Rightmost,
}

/// Normal forms of single-mode words, memoized across one computation.
///
/// Keys of the result map are `(raises, lowers)` exponent pairs; values are
/// polynomials in the deformation.
pub(crate) struct ModeReducer {
    deformation: Coefficient,
    strategy: RewriteStrategy,
    memo: HashMap<Vec<LetterKind>, BTreeMap<(u32, u32), Coefficient>>,
}

impl ModeReducer {
    pub(crate) fn new(deformation: Coefficient, strategy: RewriteStrategy) -> Self {
        Self { deformation, strategy, memo: HashMap::new() }
    }

    /// Reduces `word` to its normal form as a map `(a, b) -> coefficient`,
    /// meaning the sum of `coefficient * X^a D^b`.
    pub(crate) fn reduce(&mut self, word: &[LetterKind]) -> BTreeMap<(u32, u32), Coefficient> {
        if let Some(found) = self.memo.get(word) {
            return found.clone();
        }
        let redex = match self.strategy {
            RewriteStrategy::Leftmost => find_redex_leftmost(word),
            RewriteStrategy::Rightmost => find_redex_rightmost(word),
        };
        let result = match redex {
            None => {
                // Irreducible single-mode words are exactly X^a D^b.
                let a = word.iter().filter(|k| **k == LetterKind::Raise).count() as u32;
                let b = word.len() as u32 - a;
                let params = self.deformation.parameters().clone();
                BTreeMap::from([((a, b), Coefficient::one(&params))])
            }
            Some(i) => {
                let mut contracted = Vec::with_capacity(word.len() - 2);
                contracted.extend_from_slice(&word[..i]);
                contracted.extend_from_slice(&word[i + 2..]);
                let mut swapped = word.to_vec();
                swapped.swap(i, i + 1);

                let mut total = self.reduce(&contracted);
                let swapped_nf = self.reduce(&swapped);
                for (key, coeff) in swapped_nf {
                    let scaled = &coeff * &self.deformation;
                    if scaled.is_zero() {
                        continue;
                    }
                    match total.entry(key) {
                        std::collections::btree_map::Entry::Vacant(slot) => {
                            slot.insert(scaled);
                        }
                        std::collections::btree_map::Entry::Occupied(mut slot) => {
                            *slot.get_mut() += &scaled;
                            if slot.get().is_zero() {
                                slot.remove();
                            }
                        }
                    }
                }
                total
            }
        };
        self.memo.insert(word.to_vec(), result.clone());
        result
    }
}

fn find_redex_leftmost(word: &[LetterKind]) -> Option<usize> {
    word.windows(2)
        .position(|w| w[0] == LetterKind::Lower && w[1] == LetterKind::Raise)
}

fn find_redex_rightmost(word: &[LetterKind]) -> Option<usize> {
    word.windows(2)
        .rposition(|w| w[0] == LetterKind::Lower && w[1] == LetterKind::Raise)
}
