//! The polynomial model on which operators act.
//!
//! Raising on mode `j` multiplies by the mode's variable `x_j`; lowering
//! sends `x_j^n` to `[n] x_j^{n-1}`, where `[n]` is the bracket of the
//! operator's deformation (`n` itself when the deformation is 1, the
//! `q`-integer for deformation `q`). Applying an operator to a model
//! polynomial and normal ordering commute; tests rely on that to validate
//! the rewrite engine against an independent semantics.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeff::Coefficient;
use crate::error::CoreError;
use crate::op::{deformation_integer, NormalForm, OperatorPolynomial};
use crate::params::Parameters;
use crate::word::LetterKind;

/// Exponents of one model monomial, per mode. Ordered graded-lex.
#[derive(Clone, PartialEq, Eq, Debug)]
struct VarExponents(Box<[u32]>);

impl VarExponents {
    fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }
}

impl Ord for VarExponents {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for VarExponents {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in the model variables `x_0, ..., x_{m-1}` with
/// [`Coefficient`] coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModelPolynomial {
    params: Parameters,
    modes: usize,
    terms: BTreeMap<VarExponents, Coefficient>,
}

impl ModelPolynomial {
    /// The zero polynomial.
    pub fn zero(params: &Parameters, modes: usize) -> Self {
        Self { params: params.clone(), modes, terms: BTreeMap::new() }
    }

    /// The constant polynomial 1.
    pub fn one(params: &Parameters, modes: usize) -> Self {
        Self::monomial(params, modes, &vec![0; modes], Coefficient::one(params))
    }

    /// The single monomial `coeff * prod(x_j ^ exps_j)`.
    pub fn monomial(
        params: &Parameters,
        modes: usize,
        exps: &[u32],
        coeff: Coefficient,
    ) -> Self {
        assert_eq!(exps.len(), modes, "exponent list does not match the mode count");
        assert!(
            coeff.parameters() == params,
            "coefficient declared over [{}] used in a model over [{}]",
            coeff.parameters().describe(),
            params.describe()
        );
        let mut poly = Self::zero(params, modes);
        poly.accumulate(VarExponents(exps.to_vec().into()), coeff);
        poly
    }

    /// Single-variable convenience: `x^n` on a one-mode model.
    pub fn single_variable_power(params: &Parameters, n: u32) -> Self {
        Self::monomial(params, 1, &[n], Coefficient::one(params))
    }

    fn accumulate(&mut self, exps: VarExponents, coeff: Coefficient) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
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

    /// Adds `coeff * prod(x_j ^ exps_j)` in place.
    pub fn add_term(&mut self, exps: &[u32], coeff: Coefficient) -> Result<(), CoreError> {
        if exps.len() != self.modes {
            return Err(CoreError::ModeCountMismatch { left: exps.len(), right: self.modes });
        }
        if coeff.parameters() != &self.params {
            return Err(CoreError::ContextMismatch {
                left: coeff.parameters().describe(),
                right: self.params.describe(),
            });
        }
        self.accumulate(VarExponents(exps.to_vec().into()), coeff);
        Ok(())
    }

    /// The parameter declaration.
    pub fn parameters(&self) -> &Parameters {
        &self.params
    }

    /// Number of model variables.
    pub fn modes(&self) -> usize {
        self.modes
    }

    /// Whether no terms are stored.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Coefficient)> {
        self.terms.iter().map(|(e, c)| (&*e.0, c))
    }

    /// The coefficient of the monomial with exponents `exps` (zero if absent).
    pub fn coefficient(&self, exps: &[u32]) -> Coefficient {
        self.terms
            .get(&VarExponents(exps.to_vec().into()))
            .cloned()
            .unwrap_or_else(|| Coefficient::zero(&self.params))
    }

    /// Sum of two model polynomials over the same declaration.
    pub fn add(&self, rhs: &Self) -> Result<Self, CoreError> {
        self.check_compatible(rhs)?;
        let mut out = self.clone();
        for (exps, coeff) in &rhs.terms {
            out.accumulate(exps.clone(), coeff.clone());
        }
        Ok(out)
    }

    /// Product of two model polynomials over the same declaration.
    pub fn multiply(&self, rhs: &Self) -> Result<Self, CoreError> {
        self.check_compatible(rhs)?;
        let mut out = Self::zero(&self.params, self.modes);
        for (le, lc) in &self.terms {
            for (re, rc) in &rhs.terms {
                let exps: Vec<u32> = le
                    .0
                    .iter()
                    .zip(re.0.iter())
                    .map(|(&a, &b)| a.checked_add(b).expect("model exponent overflow"))
                    .collect();
                out.accumulate(VarExponents(exps.into()), lc * rc);
            }
        }
        Ok(out)
    }

    /// Rescales every coefficient.
    pub fn scale(&self, factor: &Coefficient) -> Self {
        let mut out = Self::zero(&self.params, self.modes);
        for (exps, coeff) in &self.terms {
            out.accumulate(exps.clone(), coeff * factor);
        }
        out
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
        Ok(())
    }
}

impl fmt::Display for ModelPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, coeff)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mut monomial = String::new();
            for (mode, &e) in exps.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !monomial.is_empty() {
                    monomial.push(' ');
                }
                if self.modes == 1 {
                    monomial.push('x');
                } else {
                    monomial.push_str(&format!("x{mode}"));
                }
                if e > 1 {
                    monomial.push_str(&format!("^{e}"));
                }
            }
            if monomial.is_empty() {
                write!(f, "{coeff}")?;
            } else if coeff.is_one() {
                write!(f, "{monomial}")?;
            } else if coeff.term_count() > 1 {
                write!(f, "({coeff})*{monomial}")?;
            } else {
                write!(f, "{coeff}*{monomial}")?;
            }
        }
        Ok(())
    }
}

impl OperatorPolynomial {
    /// Applies the operator to a model polynomial: raising on mode `j`
    /// multiplies by `x_j`, lowering sends `x_j^n` to `[n] x_j^{n-1}` with
    /// `[n]` the bracket of the deformation.
    ///
    /// # Errors
    ///
    /// [`CoreError::ContextMismatch`] or [`CoreError::ModeCountMismatch`]
    /// when the operator and the polynomial disagree on declarations.
    pub fn apply(&self, input: &ModelPolynomial) -> Result<ModelPolynomial, CoreError> {
        if self.parameters() != input.parameters() {
            return Err(CoreError::ContextMismatch {
                left: self.parameters().describe(),
                right: input.parameters().describe(),
            });
        }
        if self.modes() != input.modes() {
            return Err(CoreError::ModeCountMismatch {
                left: self.modes(),
                right: input.modes(),
            });
        }
        let mut total = ModelPolynomial::zero(input.parameters(), input.modes());
        for (word, coeff) in self.terms() {
            let mut current = input.scale(coeff);
            // The rightmost letter acts first.
            for letter in word.letters().iter().rev() {
                let mut next = ModelPolynomial::zero(input.parameters(), input.modes());
                for (exps, c) in current.terms() {
                    match letter.kind {
                        LetterKind::Raise => {
                            let mut exps = exps.to_vec();
                            exps[letter.mode] += 1;
                            next.accumulate(VarExponents(exps.into()), c.clone());
                        }
                        LetterKind::Lower => {
                            let e = exps[letter.mode];
                            if e == 0 {
                                continue;
                            }
                            let bracket = deformation_integer(self.deformation(), e);
                            let mut exps = exps.to_vec();
                            exps[letter.mode] -= 1;
                            next.accumulate(VarExponents(exps.into()), c * &bracket);
                        }
                    }
                }
                current = next;
            }
            total = total.add(&current)?;
        }
        Ok(total)
    }
}

impl NormalForm {
    /// Applies the normal form to a model polynomial; see
    /// [`OperatorPolynomial::apply`].
    pub fn apply(&self, input: &ModelPolynomial) -> Result<ModelPolynomial, CoreError> {
        self.to_operator().apply(input)
    }
}
