//! Order-by-order solving of polynomial first-order systems.
//!
//! The systems handled here have the shape
//!
//! ```text
//! T_j'(z) = P_j(s_1 + T_1, ..., s_m + T_m),    T_j(0) = 0,
//! ```
//!
//! where each right-hand side `P_j` is a multivariate polynomial and each
//! `s_j` is a fixed coefficient shift (zero for an autonomous system, or a
//! formal parameter when the solution is wanted symbolically in its starting
//! point). Because every right-hand side is polynomial and every initial
//! value is zero, the coefficients of the solutions are determined one order
//! at a time by integration, with no division beyond the integers `1..=N` —
//! the solutions stay exact over any coefficient context.

use std::collections::BTreeMap;

use weylkit_core::{Coefficient, Parameters};

use crate::error::SeriesError;
use crate::polyspec::PolynomialSpec;
use crate::series::TruncatedSeries;

/// A multivariate polynomial in the `m` unknowns of a system, used as one
/// right-hand side.
///
/// Terms map an exponent vector (one entry per unknown) to a coefficient.
/// Zero coefficients are dropped on insertion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SystemPolynomial {
    params: Parameters,
    arity: usize,
    terms: BTreeMap<Vec<u32>, Coefficient>,
}

impl SystemPolynomial {
    /// The zero polynomial in `arity` unknowns.
    pub fn zero(params: &Parameters, arity: usize) -> Self {
        Self { params: params.clone(), arity, terms: BTreeMap::new() }
    }

    /// Adds `coeff` times the monomial with the given exponent vector.
    ///
    /// # Panics
    ///
    /// Panics if the exponent vector's length differs from the declared arity
    /// or if `coeff` lives over a different parameter context.
    pub fn add_term(&mut self, exponents: &[u32], coeff: Coefficient) {
        assert_eq!(
            exponents.len(),
            self.arity,
            "exponent vector length must equal the number of unknowns"
        );
        assert_eq!(
            coeff.parameters(),
            &self.params,
            "system polynomial coefficients must share one parameter context"
        );
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry(exponents.to_vec())
            .or_insert_with(|| Coefficient::zero(&self.params));
        *entry += &coeff;
        if entry.is_zero() {
            self.terms.remove(exponents);
        }
    }

    /// Builder-style [`add_term`](Self::add_term).
    pub fn with_term(mut self, exponents: &[u32], coeff: Coefficient) -> Self {
        self.add_term(exponents, coeff);
        self
    }

    /// Lifts a one-variable polynomial to a system polynomial in the single
    /// unknown `index` of an `arity`-unknown system.
    ///
    /// # Panics
    ///
    /// Panics if `index >= arity`.
    pub fn from_univariate(poly: &PolynomialSpec, index: usize, arity: usize) -> Self {
        assert!(index < arity, "unknown index {index} out of range for arity {arity}");
        let mut out = Self::zero(poly.parameters(), arity);
        for (k, c) in poly.coefficients().iter().enumerate() {
            let mut exps = vec![0; arity];
            exps[index] = k as u32;
            out.add_term(&exps, c.clone());
        }
        out
    }

    /// Number of unknowns this polynomial refers to.
    pub fn arity(&self) -> usize {
        self.arity
    }

    /// The parameter context of the coefficients.
    pub fn parameters(&self) -> &Parameters {
        &self.params
    }

    /// Evaluates the polynomial at a tuple of series values.
    ///
    /// All values must share one truncation order; the result has that order.
    ///
    /// # Panics
    ///
    /// Panics if the tuple length differs from the arity, the orders differ,
    /// or a value lives over a different parameter context.
    pub fn evaluate(&self, values: &[TruncatedSeries]) -> TruncatedSeries {
        assert_eq!(values.len(), self.arity, "value tuple length must equal the arity");
        let order = values.first().map_or(0, TruncatedSeries::order);
        for v in values {
            assert_eq!(v.order(), order, "value tuple must share one truncation order");
        }
        let mut acc = TruncatedSeries::zero(&self.params, order);
        for (exps, coeff) in &self.terms {
            let mut term = TruncatedSeries::constant(coeff.clone(), order);
            for (value, &e) in values.iter().zip(exps) {
                if e > 0 {
                    term = term.mul(&value.pow(e));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}

/// A first-order system `T_j' = P_j(s_1 + T_1, ..., s_m + T_m)` with all
/// initial values zero.
///
/// `shifts` holds the `s_j` and `rhs` the `P_j`; their common length is the
/// number of unknowns `m >= 1`.
///
/// # Examples
///
/// A single autonomous equation `T' = 1 + T^2` (so `T = tan z`):
///
/// ```
/// use weylkit_core::{Coefficient, Parameters};
/// use weylkit_series::{OdeSystem, SystemPolynomial};
///
/// let params = Parameters::empty();
/// let rhs = SystemPolynomial::zero(&params, 1)
///     .with_term(&[0], Coefficient::one(&params))
///     .with_term(&[2], Coefficient::one(&params));
/// let system = OdeSystem::new(vec![Coefficient::zero(&params)], vec![rhs]).unwrap();
/// let tan = system.solve(5).pop().unwrap();
/// assert_eq!(tan.coefficient(3).to_string(), "1/3");
/// ```
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OdeSystem {
    params: Parameters,
    shifts: Vec<Coefficient>,
    rhs: Vec<SystemPolynomial>,
}

impl OdeSystem {
    /// Assembles a system from per-unknown shifts and right-hand sides.
    ///
    /// # Errors
    ///
    /// Returns [`SeriesError::ArityMismatch`] if the two lists have different
    /// lengths, are empty, or a right-hand side declares a different number
    /// of unknowns.
    ///
    /// # Panics
    ///
    /// Panics if the parts live over different parameter contexts.
    pub fn new(
        shifts: Vec<Coefficient>,
        rhs: Vec<SystemPolynomial>,
    ) -> Result<Self, SeriesError> {
        let m = shifts.len();
        if m == 0 || rhs.len() != m {
            return Err(SeriesError::ArityMismatch { expected: m.max(1), found: rhs.len() });
        }
        for p in &rhs {
            if p.arity() != m {
                return Err(SeriesError::ArityMismatch { expected: m, found: p.arity() });
            }
        }
        let params = shifts[0].parameters().clone();
        for s in &shifts {
            assert_eq!(s.parameters(), &params, "shifts must share one parameter context");
        }
        for p in &rhs {
            assert_eq!(
                p.parameters(),
                &params,
                "right-hand sides must share the shifts' parameter context"
            );
        }
        Ok(Self { params, shifts, rhs })
    }

    /// Number of unknowns.
    pub fn unknowns(&self) -> usize {
        self.shifts.len()
    }

    /// Solves the system through the requested truncation order.
    ///
    /// Each pass evaluates every right-hand side at the shifted partial
    /// solutions and integrates, which extends every solution by exactly one
    /// correct order; `order` passes produce the solutions through `z^order`.
    pub fn solve(&self, order: usize) -> Vec<TruncatedSeries> {
        let m = self.unknowns();
        let mut solution: Vec<TruncatedSeries> =
            (0..m).map(|_| TruncatedSeries::zero(&self.params, 0)).collect();
        for _ in 0..order {
            let current = solution[0].order();
            let shifted: Vec<TruncatedSeries> = solution
                .iter()
                .zip(&self.shifts)
                .map(|(t, s)| t.add(&TruncatedSeries::constant(s.clone(), current)))
                .collect();
            solution = self.rhs.iter().map(|p| p.evaluate(&shifted).integrate()).collect();
        }
        solution
    }
}

/// Solves `T'(z) = phi(shift + T)`, `T(0) = 0`, through the given order.
///
/// This is the generating-function equation of increasing trees whose node
/// expansion rule is `phi`: with a formal parameter as the shift the solution
/// keeps track of the starting value symbolically, and with shift 1 it
/// specializes to the plain counting series.
///
/// # Examples
///
/// ```
/// use weylkit_core::{Coefficient, Parameters};
/// use weylkit_series::{solve_increasing_tree, PolynomialSpec};
///
/// let params = Parameters::empty();
/// // T' = (1 + T)^2 with T(0) = 0 is T = z / (1 - z).
/// let phi = PolynomialSpec::from_integers(&params, &[0, 0, 1]);
/// let t = solve_increasing_tree(&phi, &Coefficient::one(&params), 5);
/// assert!(t.coefficient(4).is_one());
/// ```
///
/// # Panics
///
/// Panics if `phi` and `shift` live over different parameter contexts.
pub fn solve_increasing_tree(
    phi: &PolynomialSpec,
    shift: &Coefficient,
    order: usize,
) -> TruncatedSeries {
    let params = phi.parameters();
    assert_eq!(
        shift.parameters(),
        params,
        "the shift must share the polynomial's parameter context"
    );
    let mut t = TruncatedSeries::zero(params, 0);
    for _ in 0..order {
        let shifted = t.add(&TruncatedSeries::constant(shift.clone(), t.order()));
        t = phi.evaluate_series(&shifted).integrate();
    }
    t
}
