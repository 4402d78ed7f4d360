//! Weighted step sets and nonnegative lattice-path counting.

use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use weylkit_core::{combinatorics, Coefficient, Parameters};

/// The weight a step earns, as a function of the altitude it starts from.
///
/// Weight rules are total on every altitude `k >= 0`. A rule that returns
/// zero simply kills the paths taking that step, which is how descent rules
/// like the falling factorial reject steps that would dip below the floor.
///
/// Cloning shares the underlying rule.
#[derive(Clone)]
pub struct WeightRule(Arc<dyn Fn(u32) -> Coefficient + Send + Sync>);

impl WeightRule {
    /// A rule computed by an arbitrary function of the starting altitude.
    ///
    /// The function must return coefficients over one fixed parameter
    /// context — the context of the step set it is used in.
    pub fn from_fn(rule: impl Fn(u32) -> Coefficient + Send + Sync + 'static) -> Self {
        Self(Arc::new(rule))
    }

    /// The constant rule: every step weighs 1.
    pub fn one(params: &Parameters) -> Self {
        let params = params.clone();
        Self::from_fn(move |_| Coefficient::one(&params))
    }

    /// The falling-factorial rule with the given number of factors:
    /// altitude `k` weighs `k (k-1) ... (k - factors + 1)`, which vanishes
    /// whenever `k < factors`.
    ///
    /// This is the weight a `factors`-fold lowering earns when it acts on the
    /// `k`-th power of the underlying variable.
    pub fn falling_factorial(params: &Parameters, factors: u32) -> Self {
        let params = params.clone();
        Self::from_fn(move |k| {
            Coefficient::from_rational(
                &params,
                BigRational::from_integer(combinatorics::falling_factorial(
                    u64::from(k),
                    u64::from(factors),
                )),
            )
        })
    }

    /// The weight of a step starting at `altitude`.
    pub fn evaluate(&self, altitude: u32) -> Coefficient {
        (self.0)(altitude)
    }
}

impl fmt::Debug for WeightRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("WeightRule(..)")
    }
}

/// One admissible step: a vertical amplitude (positive for ascents, negative
/// for descents, zero for level steps) and the weight rule it earns.
#[derive(Clone, Debug)]
pub struct Step {
    amplitude: i64,
    weight: WeightRule,
}

impl Step {
    /// A step of the given amplitude and weight rule.
    pub fn new(amplitude: i64, weight: WeightRule) -> Self {
        Self { amplitude, weight }
    }

    /// Vertical amplitude.
    pub fn amplitude(&self) -> i64 {
        self.amplitude
    }

    /// Weight rule.
    pub fn weight(&self) -> &WeightRule {
        &self.weight
    }
}

/// A finite set of weighted steps over one parameter context.
#[derive(Clone, Debug)]
pub struct StepSet {
    params: Parameters,
    steps: Vec<Step>,
}

impl StepSet {
    /// Builds a step set whose weight rules return coefficients over
    /// `params`.
    pub fn new(params: &Parameters, steps: Vec<Step>) -> Self {
        Self { params: params.clone(), steps }
    }

    /// The parameter context of the step weights.
    pub fn parameters(&self) -> &Parameters {
        &self.params
    }

    /// The admissible steps.
    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Largest ascent amplitude, or 0 if no step ascends.
    pub fn max_ascent(&self) -> u64 {
        self.steps.iter().map(|s| s.amplitude.max(0) as u64).max().unwrap_or(0)
    }
}

/// Total weight of the nonnegative lattice paths of `length` steps from
/// altitude 0 back to altitude 0.
///
/// Each path is a sequence of steps from the set; its weight is the product
/// of the step weights, each evaluated at the step's starting altitude. Steps
/// that would dip below altitude 0 are rejected. The count is computed by
/// dynamic programming over altitudes up to `length * max_ascent`, which no
/// path of that length can exceed; the table is local to the call.
pub fn lattice_count(steps: &StepSet, length: usize) -> Coefficient {
    let params = steps.parameters();
    let cap = (length as u64) * steps.max_ascent();
    let cap = usize::try_from(cap).expect("altitude cap fits in memory");
    let mut table = vec![Coefficient::zero(params); cap + 1];
    table[0] = Coefficient::one(params);
    for _ in 0..length {
        let mut next = vec![Coefficient::zero(params); cap + 1];
        for (altitude, weight) in table.iter().enumerate() {
            if weight.is_zero() {
                continue;
            }
            for step in steps.steps() {
                let target = altitude as i64 + step.amplitude();
                if target < 0 || target > cap as i64 {
                    continue;
                }
                let step_weight = step.weight().evaluate(altitude as u32);
                if step_weight.is_zero() {
                    continue;
                }
                next[target as usize] += &(weight * &step_weight);
            }
        }
        table = next;
    }
    table.swap_remove(0)
}
