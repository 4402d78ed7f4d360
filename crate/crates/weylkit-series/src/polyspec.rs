//! Explicit coefficient lists for one-variable polynomials.

use std::fmt;

use weylkit_core::{Coefficient, Parameters};

use crate::series::TruncatedSeries;

/// A one-variable polynomial given by its coefficient list, lowest degree
/// first, with trailing zeros trimmed.
///
/// This is the data format in which polynomial right-hand sides are handed to
/// the tree and equation solvers: plain data, no variable name attached. The
/// zero polynomial stores no coefficients at all.
///
/// # Examples
///
/// ```
/// use weylkit_core::Parameters;
/// use weylkit_series::PolynomialSpec;
///
/// let params = Parameters::empty();
/// let square = PolynomialSpec::from_integers(&params, &[0, 0, 1]);
/// assert_eq!(square.degree(), Some(2));
/// ```
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolynomialSpec {
    params: Parameters,
    coeffs: Vec<Coefficient>,
}

impl PolynomialSpec {
    /// Builds a polynomial from its coefficient list, lowest degree first.
    /// Trailing zero coefficients are trimmed.
    ///
    /// # Panics
    ///
    /// Panics if any coefficient lives over a parameter context other than
    /// `params`.
    pub fn new(params: &Parameters, mut coeffs: Vec<Coefficient>) -> Self {
        for c in &coeffs {
            assert_eq!(
                c.parameters(),
                params,
                "polynomial coefficients must share one parameter context"
            );
        }
        while coeffs.last().is_some_and(Coefficient::is_zero) {
            coeffs.pop();
        }
        Self { params: params.clone(), coeffs }
    }

    /// The zero polynomial.
    pub fn zero(params: &Parameters) -> Self {
        Self { params: params.clone(), coeffs: Vec::new() }
    }

    /// Convenience constructor from integer coefficients, lowest degree first.
    pub fn from_integers(params: &Parameters, coeffs: &[i64]) -> Self {
        Self::new(
            params,
            coeffs.iter().map(|&c| Coefficient::from_integer(params, c)).collect(),
        )
    }

    /// The parameter context of the coefficients.
    pub fn parameters(&self) -> &Parameters {
        &self.params
    }

    /// Trimmed coefficient list, lowest degree first.
    pub fn coefficients(&self) -> &[Coefficient] {
        &self.coeffs
    }

    /// Degree of the polynomial, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Evaluates the polynomial at a coefficient value by Horner's rule.
    ///
    /// # Panics
    ///
    /// Panics if `value` lives over a different parameter context.
    pub fn evaluate_coefficient(&self, value: &Coefficient) -> Coefficient {
        let mut acc = Coefficient::zero(&self.params);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Evaluates the polynomial at a series argument by Horner's rule.
    ///
    /// The result has the argument's truncation order. Unlike composition of
    /// series, the argument may have any constant term: a polynomial has only
    /// finitely many terms, so no precondition is needed.
    ///
    /// # Panics
    ///
    /// Panics if `value` lives over a different parameter context.
    pub fn evaluate_series(&self, value: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(
            &self.params,
            value.parameters(),
            "polynomial evaluation mixes parameter contexts"
        );
        let mut acc = TruncatedSeries::zero(&self.params, value.order());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(value);
            acc = acc.add(&TruncatedSeries::constant(c.clone(), value.order()));
        }
        acc
    }
}

impl fmt::Display for PolynomialSpec {
    /// Renders the polynomial in the formal variable `y`, lowest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            let rendered = c.to_string();
            let needs_parens = rendered.contains(' ') || rendered.starts_with('-');
            if k == 0 {
                if needs_parens {
                    write!(f, "({rendered})")?;
                } else {
                    write!(f, "{rendered}")?;
                }
            } else {
                if c.is_one() {
                    write!(f, "y")?;
                } else if needs_parens {
                    write!(f, "({rendered})*y")?;
                } else {
                    write!(f, "{rendered}*y")?;
                }
                if k > 1 {
                    write!(f, "^{k}")?;
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trailing_zeros_are_trimmed() {
        let params = Parameters::empty();
        let poly = PolynomialSpec::from_integers(&params, &[1, 2, 0, 0]);
        assert_eq!(poly.degree(), Some(1));
        assert_eq!(poly.coefficients().len(), 2);
        assert!(PolynomialSpec::from_integers(&params, &[0, 0]).is_zero());
    }

    #[test]
    fn horner_evaluation_matches_direct_expansion() {
        let params = Parameters::empty();
        // 1 + 3 y^2 at y = 2 is 13.
        let poly = PolynomialSpec::from_integers(&params, &[1, 0, 3]);
        let value = Coefficient::from_integer(&params, 2);
        assert_eq!(poly.evaluate_coefficient(&value), Coefficient::from_integer(&params, 13));
    }

    #[test]
    fn series_evaluation_squares_a_shifted_argument() {
        let params = Parameters::empty();
        // y^2 at y = 1 + z gives 1 + 2z + z^2.
        let poly = PolynomialSpec::from_integers(&params, &[0, 0, 1]);
        let arg = TruncatedSeries::variable(&params, 3)
            .add(&TruncatedSeries::constant(Coefficient::one(&params), 3));
        let value = poly.evaluate_series(&arg);
        assert_eq!(value.coefficient(0), &Coefficient::one(&params));
        assert_eq!(value.coefficient(1), &Coefficient::from_integer(&params, 2));
        assert_eq!(value.coefficient(2), &Coefficient::one(&params));
        assert!(value.coefficient(3).is_zero());
    }
}
