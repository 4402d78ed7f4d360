//! Operator polynomials and their normal forms.
//!
//! An [`OperatorPolynomial`] is a finite sum of words with [`Coefficient`]
//! weights, together with a mode count and a deformation. Normal ordering
//! rewrites every word into the basis `X^a D^b` (per mode, raises before
//! lowers); the result is a [`NormalForm`], a sum of [`NormalMonomial`]s
//! with coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::arith;
use crate::coeff::Coefficient;
use crate::error::CoreError;
use crate::params::Parameters;
use crate::rewrite::{ModeReducer, RewriteStrategy};
use crate::word::{Letter, Word};

/// A normally ordered monomial: per-mode raise and lower exponents.
///
/// Ordered graded-lexicographically: total degree first, then the
/// concatenated `(raises, lowers)` exponent vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NormalMonomial {
    raises: Box<[u32]>,
    lowers: Box<[u32]>,
}

impl NormalMonomial {
    /// A monomial from per-mode exponents; the two slices must have one
    /// entry per mode.
    pub fn new(raises: &[u32], lowers: &[u32]) -> Self {
        assert_eq!(raises.len(), lowers.len(), "per-mode exponent lists differ in length");
        Self { raises: raises.into(), lowers: lowers.into() }
    }

    /// The identity monomial on `modes` modes.
    pub fn identity(modes: usize) -> Self {
        Self { raises: vec![0; modes].into(), lowers: vec![0; modes].into() }
    }

    /// Single-mode convenience: `X^a D^b`.
    pub fn single_mode(a: u32, b: u32) -> Self {
        Self::new(&[a], &[b])
    }

    /// Per-mode raise exponents.
    pub fn raises(&self) -> &[u32] {
        &self.raises
    }

    /// Per-mode lower exponents.
    pub fn lowers(&self) -> &[u32] {
        &self.lowers
    }

    /// Number of modes.
    pub fn modes(&self) -> usize {
        self.raises.len()
    }

    /// Sum of all exponents.
    pub fn degree(&self) -> u64 {
        self.raises.iter().chain(self.lowers.iter()).map(|&e| u64::from(e)).sum()
    }

    /// Whether all exponents vanish.
    pub fn is_identity(&self) -> bool {
        self.raises.iter().chain(self.lowers.iter()).all(|&e| e == 0)
    }

    /// The word `X^a D^b` (per mode) realizing this monomial.
    pub fn word(&self) -> Word {
        Word::normal_multi_mode(&self.raises, &self.lowers)
    }

    /// Exchanges raise and lower exponents (per mode).
    pub fn transposed(&self) -> Self {
        Self { raises: self.lowers.clone(), lowers: self.raises.clone() }
    }
}

impl Ord for NormalMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.raises.cmp(&other.raises))
            .then_with(|| self.lowers.cmp(&other.lowers))
    }
}

impl PartialOrd for NormalMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let single = self.modes() == 1;
        let mut first = true;
        let mut put = |f: &mut fmt::Formatter<'_>, symbol: char, mode: usize, e: u32| {
            if e == 0 {
                return Ok(());
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if single {
                write!(f, "{symbol}")?;
            } else {
                write!(f, "{symbol}{mode}")?;
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
            Ok(())
        };
        for (mode, &e) in self.raises.iter().enumerate() {
            put(f, 'X', mode, e)?;
        }
        for (mode, &e) in self.lowers.iter().enumerate() {
            put(f, 'D', mode, e)?;
        }
        Ok(())
    }
}

/// A sum of normally ordered monomials with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NormalForm {
    params: Parameters,
    modes: usize,
    deformation: Coefficient,
    terms: BTreeMap<NormalMonomial, Coefficient>,
}

impl NormalForm {
    /// The zero normal form in the undeformed algebra.
    pub fn zero(params: &Parameters, modes: usize) -> Self {
        Self {
            params: params.clone(),
            modes,
            deformation: Coefficient::one(params),
            terms: BTreeMap::new(),
        }
    }

    /// The zero normal form with an explicit deformation.
    pub fn zero_deformed(
        params: &Parameters,
        modes: usize,
        deformation: Coefficient,
    ) -> Result<Self, CoreError> {
        check_deformation(params, &deformation)?;
        Ok(Self { params: params.clone(), modes, deformation, terms: BTreeMap::new() })
    }

    /// The identity operator (coefficient 1 on the identity monomial).
    pub fn identity(params: &Parameters, modes: usize) -> Self {
        let mut nf = Self::zero(params, modes);
        nf.accumulate(NormalMonomial::identity(modes), Coefficient::one(params));
        nf
    }

    /// The identity operator with an explicit deformation.
    pub fn identity_deformed(
        params: &Parameters,
        modes: usize,
        deformation: Coefficient,
    ) -> Result<Self, CoreError> {
        let mut nf = Self::zero_deformed(params, modes, deformation)?;
        nf.accumulate(NormalMonomial::identity(modes), Coefficient::one(params));
        Ok(nf)
    }

    /// Builds a normal form from explicit `(monomial, coefficient)` terms in
    /// the undeformed algebra.
    pub fn from_terms<I>(params: &Parameters, modes: usize, terms: I) -> Result<Self, CoreError>
    where
        I: IntoIterator<Item = (NormalMonomial, Coefficient)>,
    {
        let mut nf = Self::zero(params, modes);
        for (monomial, coeff) in terms {
            nf.add_term(monomial, coeff)?;
        }
        Ok(nf)
    }

    /// Adds `coeff * monomial`, validating mode count and coefficient
    /// declaration.
    pub fn add_term(
        &mut self,
        monomial: NormalMonomial,
        coeff: Coefficient,
    ) -> Result<(), CoreError> {
        if monomial.modes() != self.modes {
            return Err(CoreError::ModeCountMismatch {
                left: monomial.modes(),
                right: self.modes,
            });
        }
        if coeff.parameters() != &self.params {
            return Err(CoreError::ContextMismatch {
                left: coeff.parameters().describe(),
                right: self.params.describe(),
            });
        }
        self.accumulate(monomial, coeff);
        Ok(())
    }

    fn accumulate(&mut self, monomial: NormalMonomial, coeff: Coefficient) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += &coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// The parameter declaration.
    pub fn parameters(&self) -> &Parameters {
        &self.params
    }

    /// Number of modes.
    pub fn modes(&self) -> usize {
        self.modes
    }

    /// The deformation (constant 1 means undeformed).
    pub fn deformation(&self) -> &Coefficient {
        &self.deformation
    }

    /// Whether the deformation is the constant 1.
    pub fn is_undeformed(&self) -> bool {
        self.deformation.is_one()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&NormalMonomial, &Coefficient)> {
        self.terms.iter()
    }

    /// Number of stored terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `monomial` (zero if absent).
    pub fn coefficient(&self, monomial: &NormalMonomial) -> Coefficient {
        self.terms
            .get(monomial)
            .cloned()
            .unwrap_or_else(|| Coefficient::zero(&self.params))
    }

    /// The coefficient of the identity monomial.
    pub fn constant_term(&self) -> Coefficient {
        self.coefficient(&NormalMonomial::identity(self.modes))
    }

    /// Reinterprets the normal form as an operator polynomial (each monomial
    /// becomes its defining word).
    pub fn to_operator(&self) -> OperatorPolynomial {
        let mut op = OperatorPolynomial {
            params: self.params.clone(),
            modes: self.modes,
            deformation: self.deformation.clone(),
            terms: BTreeMap::new(),
        };
        for (monomial, coeff) in &self.terms {
            op.accumulate(monomial.word(), coeff.clone());
        }
        op
    }

    /// The normal form of the dual operator, which exchanges raising and
    /// lowering: each `X^a D^b` becomes `X^b D^a` with the same coefficient.
    ///
    /// # Errors
    ///
    /// [`CoreError::DualOfDeformed`] unless the deformation is 1.
    pub fn dual(&self) -> Result<Self, CoreError> {
        if !self.is_undeformed() {
            return Err(CoreError::DualOfDeformed(self.deformation.to_string()));
        }
        let mut out = Self::zero(&self.params, self.modes);
        for (monomial, coeff) in &self.terms {
            out.accumulate(monomial.transposed(), coeff.clone());
        }
        Ok(out)
    }

    /// Substitutes a declared parameter in every coefficient and in the
    /// deformation.
    pub fn substitute_parameter(
        &self,
        name: &str,
        value: &Coefficient,
    ) -> Result<Self, CoreError> {
        let mut out = Self {
            params: self.params.clone(),
            modes: self.modes,
            deformation: self.deformation.substitute(name, value)?,
            terms: BTreeMap::new(),
        };
        for (monomial, coeff) in &self.terms {
            out.accumulate(monomial.clone(), coeff.substitute(name, value)?);
        }
        Ok(out)
    }

    /// The normal form of `self * rhs` (`rhs` acts first).
    ///
    /// Uses the closed per-mode composition rule in the undeformed algebra
    /// and falls back to rewriting the product words otherwise.
    pub fn multiply(&self, rhs: &NormalForm) -> Result<Self, CoreError> {
        self.check_compatible(rhs)?;
        if self.is_undeformed() {
            let mut out = Self::zero(&self.params, self.modes);
            for (lm, lc) in &self.terms {
                for (rm, rc) in &rhs.terms {
                    let weight = lc * rc;
                    for (monomial, mult) in compose_undeformed(lm, rm) {
                        let coeff = weight.scale(&BigRational::from_integer(mult));
                        out.accumulate(monomial, coeff);
                    }
                }
            }
            Ok(out)
        } else {
            let mut product = OperatorPolynomial {
                params: self.params.clone(),
                modes: self.modes,
                deformation: self.deformation.clone(),
                terms: BTreeMap::new(),
            };
            for (lm, lc) in &self.terms {
                let left_word = lm.word();
                for (rm, rc) in &rhs.terms {
                    product.accumulate(left_word.concat(&rm.word()), lc * rc);
                }
            }
            Ok(product.normal_order())
        }
    }

    /// The normal form of the `n`-th power (`n = 0` gives the identity).
    pub fn power(&self, n: u32) -> Result<Self, CoreError> {
        let mut acc = Self::identity_deformed(&self.params, self.modes, self.deformation.clone())?;
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// Normal forms of all powers `0..=order`, sharing work between
    /// consecutive powers. Entry `n` is the normal form of the `n`-th power.
    pub fn powers(&self, order: u32) -> Result<Vec<Self>, CoreError> {
        let mut out = Vec::with_capacity(order as usize + 1);
        out.push(Self::identity_deformed(&self.params, self.modes, self.deformation.clone())?);
        for _ in 0..order {
            let next = out.last().unwrap().multiply(self)?;
            out.push(next);
        }
        Ok(out)
    }

    fn check_compatible(&self, rhs: &NormalForm) -> Result<(), CoreError> {
        if self.params != rhs.params {
            return Err(CoreError::ContextMismatch {
                left: self.params.describe(),
                right: rhs.params.describe(),
            });
        }
        if self.modes != rhs.modes {
            return Err(CoreError::ModeCountMismatch { left: self.modes, right: rhs.modes });
        }
        if self.deformation != rhs.deformation {
            return Err(CoreError::DeformationMismatch {
                left: self.deformation.to_string(),
                right: rhs.deformation.to_string(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (monomial, coeff)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let needs_parens = coeff.term_count() > 1;
            if monomial.is_identity() {
                write!(f, "{coeff}")?;
            } else if coeff.is_one() {
                write!(f, "{monomial}")?;
            } else if needs_parens {
                write!(f, "({coeff})*{monomial}")?;
            } else {
                write!(f, "{coeff}*{monomial}")?;
            }
        }
        Ok(())
    }
}

/// Per-mode closed composition `(X^r D^s)(X^a D^b)` in the undeformed
/// algebra: moving `s` lowers across `a` raises contracts `t` of them in
/// `C(s,t) C(a,t) t!` ways, yielding `X^{r+a-t} D^{s+b-t}`.
fn compose_undeformed(
    left: &NormalMonomial,
    right: &NormalMonomial,
) -> Vec<(NormalMonomial, BigInt)> {
    let modes = left.modes();
    // Cross product over modes of the per-mode contraction sums.
    let mut acc: Vec<(Vec<u32>, Vec<u32>, BigInt)> =
        vec![(Vec::with_capacity(modes), Vec::with_capacity(modes), BigInt::one())];
    for mode in 0..modes {
        let r = left.raises()[mode];
        let s = left.lowers()[mode];
        let a = right.raises()[mode];
        let b = right.lowers()[mode];
        let t_max = s.min(a);
        let mut options = Vec::with_capacity(t_max as usize + 1);
        for t in 0..=t_max {
            let ways = arith::binomial(u64::from(s), u64::from(t))
                * arith::binomial(u64::from(a), u64::from(t))
                * arith::factorial(u64::from(t));
            options.push((r + a - t, s + b - t, ways));
        }
        let mut next = Vec::with_capacity(acc.len() * options.len());
        for (raises, lowers, mult) in &acc {
            for (na, nb, ways) in &options {
                let mut raises = raises.clone();
                let mut lowers = lowers.clone();
                raises.push(*na);
                lowers.push(*nb);
                next.push((raises, lowers, mult * ways));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(raises, lowers, mult)| (NormalMonomial::new(&raises, &lowers), mult))
        .collect()
}

/// A finite sum of words with polynomial coefficients, over a declared
/// parameter set, mode count, and deformation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OperatorPolynomial {
    params: Parameters,
    modes: usize,
    deformation: Coefficient,
    terms: BTreeMap<Word, Coefficient>,
}

fn check_deformation(params: &Parameters, deformation: &Coefficient) -> Result<(), CoreError> {
    if deformation.parameters() != params {
        return Err(CoreError::ContextMismatch {
            left: deformation.parameters().describe(),
            right: params.describe(),
        });
    }
    Ok(())
}

impl OperatorPolynomial {
    /// The zero operator in the undeformed algebra.
    pub fn zero(params: &Parameters, modes: usize) -> Self {
        Self {
            params: params.clone(),
            modes,
            deformation: Coefficient::one(params),
            terms: BTreeMap::new(),
        }
    }

    /// The zero operator with an explicit deformation (the rewrite rule
    /// becomes `D X -> 1 + deformation * X D`).
    pub fn zero_deformed(
        params: &Parameters,
        modes: usize,
        deformation: Coefficient,
    ) -> Result<Self, CoreError> {
        check_deformation(params, &deformation)?;
        Ok(Self { params: params.clone(), modes, deformation, terms: BTreeMap::new() })
    }

    /// The identity operator (the empty word with coefficient 1).
    pub fn identity(params: &Parameters, modes: usize) -> Self {
        let mut op = Self::zero(params, modes);
        op.accumulate(Word::empty(), Coefficient::one(params));
        op
    }

    /// A single word with coefficient 1 in the undeformed algebra.
    pub fn from_word(params: &Parameters, modes: usize, word: Word) -> Result<Self, CoreError> {
        let mut op = Self::zero(params, modes);
        op.add_word(word, Coefficient::one(params))?;
        Ok(op)
    }

    /// Adds `coeff * word`, validating modes and coefficient declaration.
    pub fn add_word(&mut self, word: Word, coeff: Coefficient) -> Result<(), CoreError> {
        if let Some(mode) = word.max_mode() {
            if mode >= self.modes {
                return Err(CoreError::ModeOutOfRange { mode, modes: self.modes });
            }
        }
        if coeff.parameters() != &self.params {
            return Err(CoreError::ContextMismatch {
                left: coeff.parameters().describe(),
                right: self.params.describe(),
            });
        }
        self.accumulate(word, coeff);
        Ok(())
    }

    fn accumulate(&mut self, word: Word, coeff: Coefficient) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += &coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// The parameter declaration.
    pub fn parameters(&self) -> &Parameters {
        &self.params
    }

    /// Number of modes.
    pub fn modes(&self) -> usize {
        self.modes
    }

    /// The deformation (constant 1 means undeformed).
    pub fn deformation(&self) -> &Coefficient {
        &self.deformation
    }

    /// Whether the deformation is the constant 1.
    pub fn is_undeformed(&self) -> bool {
        self.deformation.is_one()
    }

    /// Terms as `(word, coefficient)` pairs in the word order.
    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coefficient)> {
        self.terms.iter()
    }

    /// Number of stored terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Length of the longest word.
    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    fn check_compatible(&self, rhs: &Self) -> Result<(), CoreError> {
        if self.params != rhs.params {
            return Err(CoreError::ContextMismatch {
                left: self.params.describe(),
                right: rhs.params.describe(),
            });
        }
        if self.modes != rhs.modes {
            return Err(CoreError::ModeCountMismatch { left: self.modes, right: rhs.modes });
        }
        if self.deformation != rhs.deformation {
            return Err(CoreError::DeformationMismatch {
                left: self.deformation.to_string(),
                right: rhs.deformation.to_string(),
            });
        }
        Ok(())
    }

    /// Sum of two operators over the same declaration.
    pub fn add(&self, rhs: &Self) -> Result<Self, CoreError> {
        self.check_compatible(rhs)?;
        let mut out = self.clone();
        for (word, coeff) in &rhs.terms {
            out.accumulate(word.clone(), coeff.clone());
        }
        Ok(out)
    }

    /// Difference of two operators over the same declaration.
    pub fn sub(&self, rhs: &Self) -> Result<Self, CoreError> {
        self.check_compatible(rhs)?;
        let mut out = self.clone();
        for (word, coeff) in &rhs.terms {
            out.accumulate(word.clone(), -coeff.clone());
        }
        Ok(out)
    }

    /// Noncommutative product (`rhs` acts first): words concatenate.
    pub fn multiply(&self, rhs: &Self) -> Result<Self, CoreError> {
        self.check_compatible(rhs)?;
        let mut out = Self {
            params: self.params.clone(),
            modes: self.modes,
            deformation: self.deformation.clone(),
            terms: BTreeMap::new(),
        };
        for (lw, lc) in &self.terms {
            for (rw, rc) in &rhs.terms {
                out.accumulate(lw.concat(rw), lc * rc);
            }
        }
        Ok(out)
    }

    /// Rescales every coefficient.
    pub fn scale(&self, factor: &Coefficient) -> Self {
        let mut out = Self {
            params: self.params.clone(),
            modes: self.modes,
            deformation: self.deformation.clone(),
            terms: BTreeMap::new(),
        };
        for (word, coeff) in &self.terms {
            out.accumulate(word.clone(), coeff * factor);
        }
        out
    }

    /// The `n`-th power (`n = 0` gives the identity).
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self {
            params: self.params.clone(),
            modes: self.modes,
            deformation: self.deformation.clone(),
            terms: BTreeMap::from([(Word::empty(), Coefficient::one(&self.params))]),
        };
        for _ in 0..n {
            acc = acc.multiply(self).expect("power of an operator is always compatible");
        }
        acc
    }

    /// Normal orders the operator with the default (leftmost) strategy.
    pub fn normal_order(&self) -> NormalForm {
        self.normal_order_with_strategy(RewriteStrategy::Leftmost)
    }

    /// Normal orders the operator, choosing which redex each rewrite step
    /// takes first. All strategies yield the same normal form; exposing the
    /// choice lets tests check that confluence directly.
    pub fn normal_order_with_strategy(&self, strategy: RewriteStrategy) -> NormalForm {
        let mut reducer = ModeReducer::new(self.deformation.clone(), strategy);
        let mut nf = NormalForm {
            params: self.params.clone(),
            modes: self.modes,
            deformation: self.deformation.clone(),
            terms: BTreeMap::new(),
        };
        for (word, coeff) in &self.terms {
            // Letters of distinct modes commute freely: reduce each mode's
            // subsequence independently and take the tensor product.
            let split = word.split_by_mode(self.modes.max(1));
            let mut partial: Vec<(Vec<u32>, Vec<u32>, Coefficient)> =
                vec![(Vec::new(), Vec::new(), coeff.clone())];
            for mode_word in &split {
                let reduced = reducer.reduce(mode_word);
                let mut next = Vec::with_capacity(partial.len() * reduced.len());
                for (raises, lowers, weight) in &partial {
                    for (&(a, b), mode_coeff) in &reduced {
                        let mut raises = raises.clone();
                        let mut lowers = lowers.clone();
                        raises.push(a);
                        lowers.push(b);
                        next.push((raises, lowers, weight * mode_coeff));
                    }
                }
                partial = next;
            }
            if self.modes == 0 {
                nf.accumulate(NormalMonomial::identity(0), coeff.clone());
                continue;
            }
            for (raises, lowers, weight) in partial {
                nf.accumulate(NormalMonomial::new(&raises, &lowers), weight);
            }
        }
        nf
    }

    /// The coefficient of the identity monomial in the normal form.
    pub fn constant_term(&self) -> Coefficient {
        self.normal_order().constant_term()
    }

    /// The dual operator: every word is reversed with raising and lowering
    /// exchanged. Dualizing is an involution and an antiautomorphism of the
    /// undeformed algebra.
    ///
    /// # Errors
    ///
    /// [`CoreError::DualOfDeformed`] unless the deformation is 1.
    pub fn dual(&self) -> Result<Self, CoreError> {
        if !self.is_undeformed() {
            return Err(CoreError::DualOfDeformed(self.deformation.to_string()));
        }
        let mut out = Self::zero(&self.params, self.modes);
        for (word, coeff) in &self.terms {
            out.accumulate(word.dual(), coeff.clone());
        }
        Ok(out)
    }

    /// Substitutes a declared parameter in every coefficient and in the
    /// deformation.
    pub fn substitute_parameter(
        &self,
        name: &str,
        value: &Coefficient,
    ) -> Result<Self, CoreError> {
        let mut out = Self {
            params: self.params.clone(),
            modes: self.modes,
            deformation: self.deformation.substitute(name, value)?,
            terms: BTreeMap::new(),
        };
        for (word, coeff) in &self.terms {
            out.accumulate(word.clone(), coeff.substitute(name, value)?);
        }
        Ok(out)
    }
}

impl fmt::Display for OperatorPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (word, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if word.is_empty() {
                write!(f, "{coeff}")?;
            } else if coeff.is_one() {
                write!(f, "{word}")?;
            } else if coeff.term_count() > 1 {
                write!(f, "({coeff})*{word}")?;
            } else {
                write!(f, "{coeff}*{word}")?;
            }
        }
        Ok(())
    }
}

/// Convenience constructors for common single-mode operators.
impl OperatorPolynomial {
    /// The raising letter `X` on mode 0 of a single-mode algebra.
    pub fn raise(params: &Parameters) -> Self {
        Self::from_word(params, 1, Word::new(vec![Letter::raise(0)]))
            .expect("single letter on one mode is always valid")
    }

    /// The lowering letter `D` on mode 0 of a single-mode algebra.
    pub fn lower(params: &Parameters) -> Self {
        Self::from_word(params, 1, Word::new(vec![Letter::lower(0)]))
            .expect("single letter on one mode is always valid")
    }
}

/// The `[n]` bracket of the deformation: `1 + c + c^2 + ... + c^(n-1)`,
/// which is `n` itself when `c = 1`.
pub fn deformation_integer(deformation: &Coefficient, n: u32) -> Coefficient {
    let params = deformation.parameters().clone();
    let one = Coefficient::one(&params);
    let mut acc = Coefficient::zero(&params);
    for _ in 0..n {
        acc = &(&acc * deformation) + &one;
    }
    acc
}
