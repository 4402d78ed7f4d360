//! Power series truncated at a fixed order, with exact symbolic coefficients.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use weylkit_core::{combinatorics, Coefficient, Parameters};

use crate::error::SeriesError;

/// A power series in one variable `z`, truncated at a fixed order.
///
/// A series of order `N` stores exactly the `N + 1` coefficients of
/// `z^0 .. z^N`; everything beyond `z^N` is unknown, not zero. Binary
/// operations therefore truncate to the smaller of the two orders — precision
/// is never extended silently. The one deliberate exception is
/// [`integrate`](Self::integrate), which raises the order by one because the
/// integral of a series known through `z^N` is determined through `z^{N+1}`.
///
/// Coefficients are exact [`Coefficient`] values: rationals, or polynomials
/// in declared formal parameters. All coefficients of one series live over
/// the same [`Parameters`] context, and binary operations panic when handed
/// series from different contexts, mirroring coefficient arithmetic.
///
/// # Examples
///
/// ```
/// use weylkit_core::Parameters;
/// use weylkit_series::TruncatedSeries;
///
/// let params = Parameters::empty();
/// let z = TruncatedSeries::variable(&params, 4);
/// let expz = z.exp().unwrap();
/// assert_eq!(expz.coefficient(3).to_string(), "1/6");
/// ```
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    params: Parameters,
    coeffs: Vec<Coefficient>,
}

impl TruncatedSeries {
    /// The zero series of the given order.
    pub fn zero(params: &Parameters, order: usize) -> Self {
        Self {
            params: params.clone(),
            coeffs: vec![Coefficient::zero(params); order + 1],
        }
    }

    /// The constant series with the given constant term.
    pub fn constant(value: Coefficient, order: usize) -> Self {
        let params = value.parameters().clone();
        let mut series = Self::zero(&params, order);
        series.coeffs[0] = value;
        series
    }

    /// The series `z`, truncated at `order`.
    ///
    /// For `order == 0` this is the zero series: the linear term does not fit.
    pub fn variable(params: &Parameters, order: usize) -> Self {
        let mut series = Self::zero(params, order);
        if order >= 1 {
            series.coeffs[1] = Coefficient::one(params);
        }
        series
    }

    /// Builds a series from an explicit coefficient list, lowest power first.
    ///
    /// The order of the result is `coeffs.len() - 1`.
    ///
    /// # Panics
    ///
    /// Panics if `coeffs` is empty or if any coefficient lives over a
    /// parameter context other than `params`.
    pub fn from_coefficients(params: &Parameters, coeffs: Vec<Coefficient>) -> Self {
        assert!(!coeffs.is_empty(), "a series stores at least its constant term");
        for c in &coeffs {
            assert_eq!(
                c.parameters(),
                params,
                "series coefficients must share one parameter context"
            );
        }
        Self { params: params.clone(), coeffs }
    }

    /// Builds a series of the given order with `f(n)` as the `z^n` coefficient.
    ///
    /// # Panics
    ///
    /// Panics if `f` produces a coefficient over a different parameter context.
    pub fn from_fn(
        params: &Parameters,
        order: usize,
        f: impl FnMut(usize) -> Coefficient,
    ) -> Self {
        Self::from_coefficients(params, (0..=order).map(f).collect())
    }

    /// The parameter context shared by every coefficient.
    pub fn parameters(&self) -> &Parameters {
        &self.params
    }

    /// Truncation order `N`: coefficients of `z^0 .. z^N` are stored.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// The coefficient of `z^n`.
    ///
    /// # Panics
    ///
    /// Panics if `n` exceeds the truncation order.
    pub fn coefficient(&self, n: usize) -> &Coefficient {
        assert!(
            n <= self.order(),
            "coefficient index {n} exceeds truncation order {}",
            self.order()
        );
        &self.coeffs[n]
    }

    /// All stored coefficients, lowest power first.
    pub fn coefficients(&self) -> &[Coefficient] {
        &self.coeffs
    }

    /// The constant term.
    pub fn constant_term(&self) -> &Coefficient {
        &self.coeffs[0]
    }

    /// Whether every stored coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coefficient::is_zero)
    }

    /// A copy truncated to `min(order, self.order())`.
    pub fn truncate(&self, order: usize) -> Self {
        let keep = order.min(self.order());
        Self {
            params: self.params.clone(),
            coeffs: self.coeffs[..=keep].to_vec(),
        }
    }

    fn common_order(&self, other: &Self, op: &str) -> usize {
        assert_eq!(
            self.params, other.params,
            "{op} mixes series from different parameter contexts"
        );
        self.order().min(other.order())
    }

    /// Sum, truncated to the smaller order.
    ///
    /// # Panics
    ///
    /// Panics if the operands live over different parameter contexts.
    pub fn add(&self, other: &Self) -> Self {
        let order = self.common_order(other, "addition");
        Self::from_fn(&self.params, order, |n| &self.coeffs[n] + &other.coeffs[n])
    }

    /// Difference, truncated to the smaller order.
    ///
    /// # Panics
    ///
    /// Panics if the operands live over different parameter contexts.
    pub fn sub(&self, other: &Self) -> Self {
        let order = self.common_order(other, "subtraction");
        Self::from_fn(&self.params, order, |n| &self.coeffs[n] - &other.coeffs[n])
    }

    /// Product (Cauchy convolution), truncated to the smaller order.
    ///
    /// # Panics
    ///
    /// Panics if the operands live over different parameter contexts.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.common_order(other, "multiplication");
        let mut coeffs = vec![Coefficient::zero(&self.params); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Self { params: self.params.clone(), coeffs }
    }

    /// Multiplies every coefficient by a fixed factor.
    ///
    /// # Panics
    ///
    /// Panics if `factor` lives over a different parameter context.
    pub fn scale(&self, factor: &Coefficient) -> Self {
        Self::from_fn(&self.params, self.order(), |n| &self.coeffs[n] * factor)
    }

    /// `exp`-th power by repeated multiplication; the order is preserved.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::constant(Coefficient::one(&self.params), self.order());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// Derivative `d/dz`; the order drops by one.
    ///
    /// Differentiating an order-0 series yields the zero series of order 0.
    pub fn differentiate(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(&self.params, 0);
        }
        Self::from_fn(&self.params, self.order() - 1, |n| {
            self.coeffs[n + 1].scale(&BigRational::from_integer((n as u64 + 1).into()))
        })
    }

    /// Antiderivative with constant term 0; the order rises by one.
    ///
    /// This is the one operation that extends precision: knowing the
    /// integrand through `z^N` determines the integral through `z^{N+1}`.
    pub fn integrate(&self) -> Self {
        Self::from_fn(&self.params, self.order() + 1, |n| {
            if n == 0 {
                Coefficient::zero(&self.params)
            } else {
                self.coeffs[n - 1].scale(&BigRational::new(1.into(), (n as u64).into()))
            }
        })
    }

    /// Exponential of a series with constant term 0.
    ///
    /// # Errors
    ///
    /// Returns [`SeriesError::ConstantTermNotZero`] reporting the offending
    /// constant term when it is nonzero.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTermNotZero {
                operation: "exp",
                found: self.coeffs[0].to_string(),
            });
        }
        let order = self.order();
        let mut out = vec![Coefficient::zero(&self.params); order + 1];
        out[0] = Coefficient::one(&self.params);
        for n in 1..=order {
            let mut sum = Coefficient::zero(&self.params);
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    let weighted = self.coeffs[k].scale(&BigRational::from_integer((k as u64).into()));
                    sum += &(&weighted * &out[n - k]);
                }
            }
            out[n] = sum.scale(&BigRational::new(1.into(), (n as u64).into()));
        }
        Ok(Self { params: self.params.clone(), coeffs: out })
    }

    /// Logarithm of a series with constant term 1.
    ///
    /// # Errors
    ///
    /// Returns [`SeriesError::ConstantTermNotOne`] reporting the offending
    /// constant term when it differs from 1.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_one() {
            return Err(SeriesError::ConstantTermNotOne {
                operation: "log",
                found: self.coeffs[0].to_string(),
            });
        }
        let order = self.order();
        let mut out = vec![Coefficient::zero(&self.params); order + 1];
        for n in 1..=order {
            let mut sum = Coefficient::zero(&self.params);
            for k in 1..n {
                if !out[k].is_zero() && !self.coeffs[n - k].is_zero() {
                    let weighted = out[k].scale(&BigRational::from_integer((k as u64).into()));
                    sum += &(&weighted * &self.coeffs[n - k]);
                }
            }
            out[n] = &self.coeffs[n] - &sum.scale(&BigRational::new(1.into(), (n as u64).into()));
        }
        Ok(Self { params: self.params.clone(), coeffs: out })
    }

    /// Substitutes `inner` for the variable of `self`.
    ///
    /// The inner series must have constant term 0 (otherwise every
    /// coefficient of the result would depend on infinitely many terms). The
    /// result is truncated to the smaller of the two orders and evaluated by
    /// Horner's rule, one series multiplication per outer coefficient.
    ///
    /// # Errors
    ///
    /// Returns [`SeriesError::ConstantTermNotZero`] reporting the inner
    /// series' constant term when it is nonzero.
    ///
    /// # Panics
    ///
    /// Panics if the operands live over different parameter contexts.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTermNotZero {
                operation: "compose",
                found: inner.coeffs[0].to_string(),
            });
        }
        let order = self.common_order(inner, "composition");
        let inner = inner.truncate(order);
        let mut acc = Self::constant(self.coeffs[self.order()].clone(), order);
        for k in (0..self.order()).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] += &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Quotient `self / divisor`, truncated to the smaller order.
    ///
    /// The divisor's constant term must be an invertible rational constant;
    /// the quotient is then computed by the standard forward recurrence.
    ///
    /// # Errors
    ///
    /// Returns [`SeriesError::NonInvertibleConstantTerm`] when the divisor's
    /// constant term is zero or involves parameters.
    ///
    /// # Panics
    ///
    /// Panics if the operands live over different parameter contexts.
    pub fn div(&self, divisor: &Self) -> Result<Self, SeriesError> {
        let lead = divisor.coeffs[0]
            .as_rational()
            .filter(|r| !r.is_zero())
            .ok_or_else(|| SeriesError::NonInvertibleConstantTerm {
                found: divisor.coeffs[0].to_string(),
            })?;
        let order = self.common_order(divisor, "division");
        let inv = lead.recip();
        let mut out = vec![Coefficient::zero(&self.params); order + 1];
        for n in 0..=order {
            let mut value = self.coeffs[n].clone();
            for k in 0..n {
                if !out[k].is_zero() && !divisor.coeffs[n - k].is_zero() {
                    value -= &(&out[k] * &divisor.coeffs[n - k]);
                }
            }
            out[n] = value.scale(&inv);
        }
        Ok(Self { params: self.params.clone(), coeffs: out })
    }

    /// The Laplace–Borel rescaling `c_n ↦ n! · c_n`.
    ///
    /// Term by term this sends `z^n ↦ n! z^n`, turning an exponential
    /// generating function into the ordinary generating function of the same
    /// sequence.
    pub fn laplace(&self) -> Self {
        Self::from_fn(&self.params, self.order(), |n| {
            self.coeffs[n].scale(&BigRational::from_integer(combinatorics::factorial(n as u64)))
        })
    }

    /// `(1 + self)^exponent` for a rational exponent; requires constant term 0.
    ///
    /// The result is generated by the first-order equation
    /// `(1 + v) y' = e v' y` satisfied by `y = (1 + v)^e`, so fractional
    /// exponents stay exact: no floating-point powering is involved.
    ///
    /// # Errors
    ///
    /// Returns [`SeriesError::ConstantTermNotZero`] reporting the offending
    /// constant term when it is nonzero.
    pub fn binomial_pow(&self, exponent: &BigRational) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTermNotZero {
                operation: "binomial power",
                found: self.coeffs[0].to_string(),
            });
        }
        let order = self.order();
        let mut out = vec![Coefficient::zero(&self.params); order + 1];
        out[0] = Coefficient::one(&self.params);
        for n in 1..=order {
            let mut sum = Coefficient::zero(&self.params);
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    let weight = exponent * BigRational::from_integer((k as u64).into())
                        - BigRational::from_integer(((n - k) as u64).into());
                    sum += &(&self.coeffs[k] * &out[n - k]).scale(&weight);
                }
            }
            out[n] = sum.scale(&BigRational::new(1.into(), (n as u64).into()));
        }
        Ok(Self { params: self.params.clone(), coeffs: out })
    }

    /// Replaces a declared parameter by a fixed value in every coefficient.
    ///
    /// # Errors
    ///
    /// Returns an error if the parameter is not declared or the value lives
    /// over a different parameter context.
    pub fn substitute_parameter(
        &self,
        name: &str,
        value: &Coefficient,
    ) -> Result<Self, SeriesError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.substitute(name, value))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { params: self.params.clone(), coeffs })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            let rendered = c.to_string();
            let needs_parens = rendered.contains(' ') || rendered.starts_with('-');
            if n == 0 {
                if needs_parens {
                    write!(f, "({rendered})")?;
                } else {
                    write!(f, "{rendered}")?;
                }
            } else {
                if c.is_one() {
                    write!(f, "z")?;
                } else if needs_parens {
                    write!(f, "({rendered})*z")?;
                } else {
                    write!(f, "{rendered}*z")?;
                }
                if n > 1 {
                    write!(f, "^{n}")?;
                }
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}
