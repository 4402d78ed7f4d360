//! Letters and words of the operator alphabet.
//!
//! A letter either raises (multiplication by the underlying variable) or
//! lowers (a derivative-like action) one of finitely many modes. A word is a
//! finite product of letters, written left to right in operator order: the
//! rightmost letter acts first.

use std::fmt;

use crate::error::CoreError;

/// The two letter kinds.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LetterKind {
    /// Multiplication by the mode's variable (written `X`).
    Raise,
    /// The derivative-like action on the mode's variable (written `D`).
    Lower,
}

impl LetterKind {
    /// The opposite kind.
    pub fn flipped(self) -> Self {
        match self {
            LetterKind::Raise => LetterKind::Lower,
            LetterKind::Lower => LetterKind::Raise,
        }
    }
}

/// One letter: a kind acting on a specific mode.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    /// Raise or lower.
    pub kind: LetterKind,
    /// Index of the mode acted on (0-based).
    pub mode: usize,
}

impl Letter {
    /// The raising letter on `mode`.
    pub fn raise(mode: usize) -> Self {
        Self { kind: LetterKind::Raise, mode }
    }

    /// The lowering letter on `mode`.
    pub fn lower(mode: usize) -> Self {
        Self { kind: LetterKind::Lower, mode }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let symbol = match self.kind {
            LetterKind::Raise => 'X',
            LetterKind::Lower => 'D',
        };
        if self.mode == 0 {
            write!(f, "{symbol}")
        } else {
            write!(f, "{symbol}{}", self.mode)
        }
    }
}

/// A product of letters. The empty word is the identity operator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    /// The empty (identity) word.
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// A word from explicit letters in operator order.
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    /// The word `X^a D^b` on a single mode (raises first in operator order,
    /// so lowers act first on the right).
    pub fn normal_single_mode(a: u32, b: u32) -> Self {
        Self::normal_multi_mode(&[a], &[b])
    }

    /// The word `X_0^{a_0} ... X_{m-1}^{a_{m-1}} D_0^{b_0} ... D_{m-1}^{b_{m-1}}`.
    pub fn normal_multi_mode(raises: &[u32], lowers: &[u32]) -> Self {
        assert_eq!(raises.len(), lowers.len(), "per-mode exponent lists differ in length");
        let mut letters = Vec::new();
        for (mode, &a) in raises.iter().enumerate() {
            letters.extend(std::iter::repeat(Letter::raise(mode)).take(a as usize));
        }
        for (mode, &b) in lowers.iter().enumerate() {
            letters.extend(std::iter::repeat(Letter::lower(mode)).take(b as usize));
        }
        Self(letters)
    }

    /// Parses a single-mode word from `X`/`D` characters, e.g. `"DXXD"`.
    /// `A` and `B` are accepted as aliases for `D` (lower) and `X` (raise).
    ///
    /// # Errors
    ///
    /// [`CoreError::InvalidParameterName`] is never returned here; an
    /// unrecognized character reports [`CoreError::UnknownParameter`] with
    /// the offending character as the name.
    pub fn parse_single_mode(text: &str) -> Result<Self, CoreError> {
        let mut letters = Vec::with_capacity(text.len());
        for c in text.chars() {
            let letter = match c {
                'X' | 'x' | 'B' | 'b' => Letter::raise(0),
                'D' | 'd' | 'A' | 'a' => Letter::lower(0),
                other => {
                    return Err(CoreError::UnknownParameter {
                        name: other.to_string(),
                        declared: "X, D (aliases B, A)".to_owned(),
                    })
                }
            };
            letters.push(letter);
        }
        Ok(Self(letters))
    }

    /// Letters in operator order (leftmost acts last).
    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether this is the identity word.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `self · other` (self acts after other).
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Largest mode index occurring, or `None` for the empty word.
    pub fn max_mode(&self) -> Option<usize> {
        self.0.iter().map(|l| l.mode).max()
    }

    /// The reversed word with every letter flipped; composing words this way
    /// is an involution that exchanges raising and lowering.
    pub fn dual(&self) -> Word {
        Word(
            self.0
                .iter()
                .rev()
                .map(|l| Letter { kind: l.kind.flipped(), mode: l.mode })
                .collect(),
        )
    }

    /// Splits into per-mode letter-kind sequences, preserving the relative
    /// order within each mode. Letters of distinct modes commute freely, so
    /// this loses no information relevant to normal ordering.
    pub(crate) fn split_by_mode(&self, modes: usize) -> Vec<Vec<LetterKind>> {
        let mut split = vec![Vec::new(); modes];
        for letter in &self.0 {
            split[letter.mode].push(letter.kind);
        }
        split
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for letter in &self.0 {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for Word {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_single_mode(s)
    }
}
