//! Exact multivariate polynomial coefficients over the rationals.
//!
//! A [`Coefficient`] is a canonical sparse polynomial: zero terms are never
//! stored, terms are kept in graded-lexicographic order of their exponent
//! vectors, and the variable order is the alphabetical order of the declared
//! [`Parameters`]. Arithmetic between coefficients from different parameter
//! declarations panics — the two values belong to different computations and
//! combining them would silently conflate like-named symbols.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::CoreError;
use crate::params::Parameters;

/// Exponent vector of one monomial, ordered graded-lexicographically:
/// lower total degree first, ties broken by the leftmost differing exponent
/// (smaller exponent first).
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct Exponents(Box<[u32]>);

impl Exponents {
    fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A canonical sparse multivariate polynomial with rational coefficients.
///
/// # Examples
///
/// ```
/// use weylkit_core::{Coefficient, Parameters};
///
/// let params = Parameters::new(["q"]).unwrap();
/// let q = Coefficient::parameter(&params, "q").unwrap();
/// let one = Coefficient::one(&params);
/// let sum = &q * &q + &q + &one; // 1 + q + q^2
/// assert_eq!(sum.to_string(), "q^2 + q + 1");
/// ```
#[derive(Clone, PartialEq, Eq)]
pub struct Coefficient {
    params: Parameters,
    terms: BTreeMap<Exponents, BigRational>,
}

impl Coefficient {
    /// The zero polynomial (no stored terms).
    pub fn zero(params: &Parameters) -> Self {
        Self { params: params.clone(), terms: BTreeMap::new() }
    }

    /// The constant polynomial 1.
    pub fn one(params: &Parameters) -> Self {
        Self::from_rational(params, BigRational::one())
    }

    /// A constant polynomial from an integer.
    pub fn from_integer(params: &Parameters, value: i64) -> Self {
        Self::from_rational(params, BigRational::from_integer(BigInt::from(value)))
    }

    /// A constant polynomial from a rational.
    pub fn from_rational(params: &Parameters, value: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Exponents(vec![0; params.len()].into()), value);
        }
        Self { params: params.clone(), terms }
    }

    /// The polynomial consisting of the single declared parameter `name`.
    ///
    /// # Errors
    ///
    /// [`CoreError::UnknownParameter`] if `name` was not declared.
    pub fn parameter(params: &Parameters, name: &str) -> Result<Self, CoreError> {
        let idx = params.index_of(name).ok_or_else(|| CoreError::UnknownParameter {
            name: name.to_owned(),
            declared: params.describe(),
        })?;
        let mut exps = vec![0u32; params.len()];
        exps[idx] = 1;
        Ok(Self::monomial(params, &exps, BigRational::one()))
    }

    /// A single-term polynomial `coeff * prod(param_i ^ exps_i)`.
    ///
    /// `exps` must have one entry per declared parameter, in the declared
    /// (alphabetical) order.
    pub fn monomial(params: &Parameters, exps: &[u32], coeff: BigRational) -> Self {
        assert_eq!(
            exps.len(),
            params.len(),
            "exponent vector length {} does not match parameter count {}",
            exps.len(),
            params.len()
        );
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(Exponents(exps.to_vec().into()), coeff);
        }
        Self { params: params.clone(), terms }
    }

    /// The parameter declaration this coefficient was built over.
    pub fn parameters(&self) -> &Parameters {
        &self.params
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether this is the constant polynomial 1.
    pub fn is_one(&self) -> bool {
        self.as_rational().map(|r| r.is_one()).unwrap_or(false)
    }

    /// Whether no parameter occurs (including the zero polynomial).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Exponents::is_constant)
    }

    /// The value of a constant polynomial, or `None` if a parameter occurs.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.terms.len() == 1 {
            let (exps, value) = self.terms.iter().next().unwrap();
            if exps.is_constant() {
                return Some(value.clone());
            }
        }
        None
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().map(Exponents::degree)
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Iterates terms in ascending graded-lexicographic order as
    /// `(exponents, value)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigRational)> {
        self.terms.iter().map(|(e, v)| (&*e.0, v))
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, factor: &BigRational) -> Self {
        if factor.is_zero() {
            return Self::zero(&self.params);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| (e.clone(), v * factor))
            .collect();
        Self { params: self.params.clone(), terms }
    }

    /// Raises to a nonnegative integer power by repeated squaring.
    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.params);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces the declared parameter `name` by `value` (a coefficient over
    /// the same declaration). The result stays in the same declaration; the
    /// substituted parameter simply no longer occurs.
    ///
    /// # Errors
    ///
    /// [`CoreError::UnknownParameter`] if `name` was not declared, and
    /// [`CoreError::ContextMismatch`] if `value` belongs to a different
    /// declaration.
    pub fn substitute(&self, name: &str, value: &Coefficient) -> Result<Self, CoreError> {
        let idx = self.params.index_of(name).ok_or_else(|| CoreError::UnknownParameter {
            name: name.to_owned(),
            declared: self.params.describe(),
        })?;
        if value.params != self.params {
            return Err(CoreError::ContextMismatch {
                left: self.params.describe(),
                right: value.params.describe(),
            });
        }
        let mut result = Self::zero(&self.params);
        for (exps, coeff) in &self.terms {
            let mut reduced = exps.0.to_vec();
            let power = reduced[idx];
            reduced[idx] = 0;
            let base = Self::monomial(&self.params, &reduced, coeff.clone());
            result += &(&base * &value.pow(power));
        }
        Ok(result)
    }

    /// Re-expresses this coefficient over a superset declaration `target`.
    ///
    /// # Errors
    ///
    /// [`CoreError::UnknownParameter`] if some occurring parameter of `self`
    /// is absent from `target`.
    pub fn embed(&self, target: &Parameters) -> Result<Self, CoreError> {
        if self.params == *target {
            return Ok(self.clone());
        }
        let mut index_map = Vec::with_capacity(self.params.len());
        for name in self.params.names() {
            match target.index_of(name) {
                Some(i) => index_map.push(Some(i)),
                None => index_map.push(None),
            }
        }
        let mut terms = BTreeMap::new();
        for (exps, value) in &self.terms {
            let mut new_exps = vec![0u32; target.len()];
            for (src, &e) in exps.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match index_map[src] {
                    Some(dst) => new_exps[dst] = e,
                    None => {
                        return Err(CoreError::UnknownParameter {
                            name: self.params.names()[src].clone(),
                            declared: target.describe(),
                        })
                    }
                }
            }
            terms.insert(Exponents(new_exps.into()), value.clone());
        }
        Ok(Self { params: target.clone(), terms })
    }

    /// Exact division: returns `self / divisor` when the remainder of
    /// polynomial long division is zero.
    ///
    /// # Errors
    ///
    /// [`CoreError::InexactDivision`] when the division does not come out
    /// exactly, and [`CoreError::ContextMismatch`] on mixed declarations.
    /// Dividing by zero is reported as inexact.
    pub fn exact_div(&self, divisor: &Coefficient) -> Result<Self, CoreError> {
        if self.params != divisor.params {
            return Err(CoreError::ContextMismatch {
                left: self.params.describe(),
                right: divisor.params.describe(),
            });
        }
        let Some((lead_exps, lead_coeff)) = divisor.terms.iter().next_back() else {
            return Err(CoreError::InexactDivision);
        };
        let mut remainder = self.clone();
        let mut quotient = Self::zero(&self.params);
        while let Some((r_exps, r_coeff)) = remainder.terms.iter().next_back() {
            let mut q_exps = Vec::with_capacity(r_exps.0.len());
            for (&re, &de) in r_exps.0.iter().zip(lead_exps.0.iter()) {
                if re < de {
                    return Err(CoreError::InexactDivision);
                }
                q_exps.push(re - de);
            }
            let q_term =
                Self::monomial(&self.params, &q_exps, r_coeff / lead_coeff);
            remainder -= &(&q_term * divisor);
            quotient += &q_term;
        }
        Ok(quotient)
    }

    /// Evaluates at rational values for every declared parameter, given in
    /// declared (alphabetical) order.
    pub fn evaluate(&self, values: &[BigRational]) -> BigRational {
        assert_eq!(
            values.len(),
            self.params.len(),
            "value count {} does not match parameter count {}",
            values.len(),
            self.params.len()
        );
        let mut total = BigRational::zero();
        for (exps, coeff) in &self.terms {
            let mut term = coeff.clone();
            for (value, &e) in values.iter().zip(exps.0.iter()) {
                for _ in 0..e {
                    term *= value;
                }
            }
            total += term;
        }
        total
    }

    fn assert_same_context(&self, other: &Self) {
        assert!(
            self.params == other.params,
            "coefficient arithmetic across different parameter declarations: [{}] vs [{}]",
            self.params.describe(),
            other.params.describe()
        );
    }

    fn add_term(&mut self, exps: Exponents, value: BigRational) {
        if value.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += value;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    fn format_term(
        f: &mut fmt::Formatter<'_>,
        params: &Parameters,
        exps: &Exponents,
        value: &BigRational,
        first: bool,
    ) -> fmt::Result {
        let magnitude = value.abs();
        if first {
            if value.is_negative() {
                write!(f, "-")?;
            }
        } else if value.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        let mut monomial = String::new();
        for (name, &e) in params.names().iter().zip(exps.0.iter()) {
            if e == 0 {
                continue;
            }
            if !monomial.is_empty() {
                monomial.push('*');
            }
            monomial.push_str(name);
            if e > 1 {
                monomial.push('^');
                monomial.push_str(&e.to_string());
            }
        }
        if monomial.is_empty() {
            write!(f, "{magnitude}")
        } else if magnitude.is_one() {
            write!(f, "{monomial}")
        } else {
            write!(f, "{magnitude}*{monomial}")
        }
    }
}

/// Canonical textual form: terms in descending graded-lexicographic order,
/// `^` for powers, `*` between a rational and a monomial and between
/// parameters, e.g. `3/2*q^2 - 1`. The zero polynomial prints as `0`.
impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (exps, value)) in self.terms.iter().rev().enumerate() {
            Self::format_term(f, &self.params, exps, value, i == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coefficient({self})")
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        self.assert_same_context(rhs);
        for (exps, value) in &rhs.terms {
            self.add_term(exps.clone(), value.clone());
        }
    }
}

impl SubAssign<&Coefficient> for Coefficient {
    fn sub_assign(&mut self, rhs: &Coefficient) {
        self.assert_same_context(rhs);
        for (exps, value) in &rhs.terms {
            self.add_term(exps.clone(), -value.clone());
        }
    }
}

impl MulAssign<&Coefficient> for Coefficient {
    fn mul_assign(&mut self, rhs: &Coefficient) {
        let product = &*self * rhs;
        *self = product;
    }
}

impl Add<&Coefficient> for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&Coefficient> for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&Coefficient> for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        self.assert_same_context(rhs);
        let mut out = Coefficient::zero(&self.params);
        for (le, lv) in &self.terms {
            for (re, rv) in &rhs.terms {
                let exps: Vec<u32> = le
                    .0
                    .iter()
                    .zip(re.0.iter())
                    .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
                    .collect();
                out.add_term(Exponents(exps.into()), lv * rv);
            }
        }
        out
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        let terms = self
            .terms
            .iter()
            .map(|(e, v)| (e.clone(), -v.clone()))
            .collect();
        Coefficient { params: self.params.clone(), terms }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Coefficient> for Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: Coefficient) -> Coefficient {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Coefficient> for Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: &Coefficient) -> Coefficient {
                (&self).$method(rhs)
            }
        }
        impl $trait<Coefficient> for &Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: Coefficient) -> Coefficient {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}
