//! Turning a parsed expression into an operator polynomial.

use num_rational::BigRational;
use weylkit_core::{Coefficient, Letter, LetterKind, OperatorPolynomial, Parameters, Word};

use crate::ast::Expression;
use crate::error::CliError;

/// How the commutation deformation is chosen for a run.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Deformation {
    /// The undeformed algebra: lowering past raising yields exactly 1.
    Off,
    /// Keep the deformation symbolic, as the parameter `q`.
    Symbolic,
    /// A fixed rational deformation value.
    Numeric(BigRational),
}

impl Deformation {
    /// The value written into the `q` field of machine-readable output.
    pub fn label(&self) -> String {
        match self {
            Deformation::Off => "1".to_owned(),
            Deformation::Symbolic => "q".to_owned(),
            Deformation::Numeric(value) => value.to_string(),
        }
    }
}

/// Builds the operator polynomial an expression denotes.
///
/// The parameter context is the expression's symbols in alphabetical order
/// (plus `q` for a symbolic deformation); the mode count is one more than
/// the largest letter index, or 1 for a letter-free expression. Every
/// intermediate product is checked against `word_budget`, the longest
/// word the caller is willing to normal-order later.
///
/// # Errors
///
/// [`CliError::Usage`] for an invalid deformation, and
/// [`CliError::Refused`] when a product would exceed the word budget.
pub fn build_operator(
    expression: &Expression,
    deformation: &Deformation,
    word_budget: usize,
) -> Result<OperatorPolynomial, CliError> {
    let mut names = expression.symbols();
    if matches!(deformation, Deformation::Symbolic) {
        names.insert("q".to_owned());
    }
    let params = Parameters::new(names)
        .map_err(|e| CliError::Usage(format!("invalid parameter context: {e}")))?;
    let modes = expression.max_mode().map_or(1, |mode| mode as usize + 1);

    let zero = match deformation {
        Deformation::Off => OperatorPolynomial::zero(&params, modes),
        Deformation::Symbolic => {
            let q = Coefficient::parameter(&params, "q")
                .expect("q was inserted into the context above");
            OperatorPolynomial::zero_deformed(&params, modes, q)
                .map_err(|e| CliError::Usage(format!("invalid deformation: {e}")))?
        }
        Deformation::Numeric(value) => {
            let q = Coefficient::from_rational(&params, value.clone());
            OperatorPolynomial::zero_deformed(&params, modes, q)
                .map_err(|e| CliError::Usage(format!("invalid deformation: {e}")))?
        }
    };
    evaluate(expression, &zero, word_budget)
}

fn scalar(zero: &OperatorPolynomial, value: Coefficient) -> OperatorPolynomial {
    let mut op = zero.clone();
    op.add_word(Word::empty(), value).expect("the empty word fits every context");
    op
}

fn check_budget(op: &OperatorPolynomial, word_budget: usize) -> Result<(), CliError> {
    if op.max_word_len() > word_budget {
        return Err(CliError::Refused(format!(
            "a product word of length {} exceeds the word-length bound {word_budget}; \
             raise --max-word-len to allow it",
            op.max_word_len(),
        )));
    }
    Ok(())
}

fn evaluate(
    expression: &Expression,
    zero: &OperatorPolynomial,
    word_budget: usize,
) -> Result<OperatorPolynomial, CliError> {
    let params = zero.parameters().clone();
    match expression {
        Expression::Rational(value) => {
            Ok(scalar(zero, Coefficient::from_rational(&params, value.clone())))
        }
        Expression::Symbol(name) => Ok(scalar(
            zero,
            Coefficient::parameter(&params, name)
                .expect("every expression symbol is in the context"),
        )),
        Expression::Letter { kind, mode } => {
            let letter = match kind {
                LetterKind::Raise => Letter::raise(*mode as usize),
                LetterKind::Lower => Letter::lower(*mode as usize),
            };
            let mut op = zero.clone();
            op.add_word(Word::new(vec![letter]), Coefficient::one(&params))
                .expect("letter modes were sized into the context");
            Ok(op)
        }
        Expression::Sum(children) => {
            let mut total = zero.clone();
            for child in children {
                let value = evaluate(child, zero, word_budget)?;
                total = total.add(&value).expect("all summands share one context");
            }
            Ok(total)
        }
        Expression::Product(children) => {
            let mut product = scalar(zero, Coefficient::one(&params));
            for child in children {
                let value = evaluate(child, zero, word_budget)?;
                product = product.multiply(&value).expect("all factors share one context");
                check_budget(&product, word_budget)?;
            }
            Ok(product)
        }
        Expression::Power(child, exponent) => {
            let base = evaluate(child, zero, word_budget)?;
            let mut power = scalar(zero, Coefficient::one(&params));
            for _ in 0..*exponent {
                power = power.multiply(&base).expect("the base shares the context");
                check_budget(&power, word_budget)?;
            }
            Ok(power)
        }
    }
}
