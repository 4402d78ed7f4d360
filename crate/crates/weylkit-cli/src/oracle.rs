//! Independent recomputations of normally ordered coefficient tables.
//!
//! Each oracle reaches the coefficients of `expr^power` by a different route:
//! the rewrite engine, the transfer recurrence on gate states, brute-force
//! diagram enumeration, rook placements on staircase boards, and weighted
//! lattice paths.  Agreement across routes is strong evidence that each one
//! is implemented correctly; the comparison reports the first coefficient,
//! in graded lexicographic order, where any two routes differ.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

use weylkit_core::combinatorics::falling_factorial;
use weylkit_core::{Coefficient, NormalMonomial, OperatorPolynomial, Parameters};
use weylkit_diagrams::{
    enumerate_diagrams, rook_count, transfer_coefficients, EnumerationLimits, GateBasis,
};
use weylkit_paths::{lattice_count, Step, StepSet, WeightRule};

use crate::error::CliError;
use crate::render::{monomial_text, sort_monomials};

/// Cap on the number of gate sequences the rook oracle will scan.
const ROOK_SEQUENCE_CAP: u64 = 1_000_000;

/// The available computation routes.
#[derive(Clone, Copy, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum OracleKind {
    /// Normally order with the rewrite engine and raise to the power.
    Rewrite,
    /// Run the state-to-state transfer recurrence over gate histories.
    Transfer,
    /// Enumerate every labelled diagram and sum the gate weights.
    Enumerate,
    /// Sum rook placements on the staircase board of every gate sequence.
    Rook,
    /// Weigh nonnegative lattice paths; determines the constant term only.
    Paths,
}

impl OracleKind {
    /// The flag spelling of this oracle.
    pub fn name(self) -> &'static str {
        match self {
            OracleKind::Rewrite => "rewrite",
            OracleKind::Transfer => "transfer",
            OracleKind::Enumerate => "enumerate",
            OracleKind::Rook => "rook",
            OracleKind::Paths => "paths",
        }
    }
}

/// The coefficient table one oracle produced.
#[derive(Clone, Debug)]
pub struct OracleReport {
    /// Which route produced the table.
    pub kind: OracleKind,
    /// True when the route only determines the identity coefficient.
    pub constant_only: bool,
    /// Nonzero coefficients keyed by normally ordered monomial.
    pub table: BTreeMap<NormalMonomial, Coefficient>,
}

/// The first coefficient, in graded lexicographic order, where two oracles
/// disagree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Disagreement {
    /// Rendered monomial at which the values differ.
    pub monomial: String,
    /// First oracle of the differing pair.
    pub first: OracleKind,
    /// Value the first oracle produced.
    pub first_value: String,
    /// Second oracle of the differing pair.
    pub second: OracleKind,
    /// Value the second oracle produced.
    pub second_value: String,
}

impl std::fmt::Display for Disagreement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "first difference at {}: {} gives {}, {} gives {}",
            self.monomial,
            self.first.name(),
            self.first_value,
            self.second.name(),
            self.second_value
        )
    }
}

/// Interpret the normal form of `op` as a single-mode gate basis.
///
/// # Errors
///
/// [`CliError::Refused`] when the expression uses several modes, when its
/// normal form has a constant term (no gate consumes and produces nothing),
/// or when two terms share a shape.
pub(crate) fn single_mode_gates(op: &OperatorPolynomial) -> Result<GateBasis, CliError> {
    let form = op.normal_order();
    if form.modes() != 1 {
        return Err(CliError::Refused(
            "diagram and path oracles handle a single mode; only the rewrite oracle accepts \
             indexed letters"
                .into(),
        ));
    }
    let mut gates = Vec::new();
    for (monomial, coeff) in form.terms() {
        let outputs = monomial.raises()[0];
        let inputs = monomial.lowers()[0];
        if outputs == 0 && inputs == 0 {
            return Err(CliError::Refused(
                "the expression normalises with a constant term, which no gate can represent; \
                 remove the scalar part before comparing diagram oracles"
                    .into(),
            ));
        }
        gates.push((outputs, inputs, coeff.clone()));
    }
    GateBasis::new(op.parameters(), gates).map_err(|error| CliError::Refused(error.to_string()))
}

/// Run one oracle on `op^power` under the given enumeration bounds.
///
/// # Errors
///
/// [`CliError::Refused`] when the route cannot represent the expression or
/// the requested size exceeds the configured bounds.
pub fn run_oracle(
    kind: OracleKind,
    op: &OperatorPolynomial,
    power: u32,
    limits: &EnumerationLimits,
) -> Result<OracleReport, CliError> {
    let table = match kind {
        OracleKind::Rewrite => rewrite_table(op, power)?,
        OracleKind::Transfer => transfer_table(op, power)?,
        OracleKind::Enumerate => enumerate_table(op, power, limits)?,
        OracleKind::Rook => rook_table(op, power, limits)?,
        OracleKind::Paths => paths_table(op, power)?,
    };
    Ok(OracleReport {
        kind,
        constant_only: kind == OracleKind::Paths,
        table,
    })
}

fn rewrite_table(
    op: &OperatorPolynomial,
    power: u32,
) -> Result<BTreeMap<NormalMonomial, Coefficient>, CliError> {
    let form = op
        .normal_order()
        .power(power)
        .map_err(|error| CliError::Refused(error.to_string()))?;
    Ok(form
        .terms()
        .map(|(monomial, coeff)| (monomial.clone(), coeff.clone()))
        .collect())
}

fn transfer_table(
    op: &OperatorPolynomial,
    power: u32,
) -> Result<BTreeMap<NormalMonomial, Coefficient>, CliError> {
    let basis = single_mode_gates(op)?;
    Ok(transfer_coefficients(&basis, power as usize)
        .into_iter()
        .filter(|(_, coeff)| !coeff.is_zero())
        .map(|((a, b), coeff)| (NormalMonomial::single_mode(a, b), coeff))
        .collect())
}

fn enumerate_table(
    op: &OperatorPolynomial,
    power: u32,
    limits: &EnumerationLimits,
) -> Result<BTreeMap<NormalMonomial, Coefficient>, CliError> {
    let basis = single_mode_gates(op)?;
    let enumeration = enumerate_diagrams(&basis, power as usize, None, limits)
        .map_err(|error| CliError::Refused(error.to_string()))?;
    let weights: BTreeMap<(u32, u32), Coefficient> = basis
        .gates()
        .iter()
        .map(|gate| (gate.shape(), gate.weight().clone()))
        .collect();
    let params = op.parameters();
    let mut table: BTreeMap<NormalMonomial, Coefficient> = BTreeMap::new();
    for diagram in &enumeration.diagrams {
        let mut weight = Coefficient::one(params);
        for shape in diagram.shape_sequence() {
            weight = &weight * &weights[&shape];
        }
        let (outputs, inputs) = diagram.state();
        let key = NormalMonomial::single_mode(outputs, inputs);
        let slot = table.entry(key).or_insert_with(|| Coefficient::zero(params));
        *slot += &weight;
    }
    table.retain(|_, coeff| !coeff.is_zero());
    Ok(table)
}

fn rook_table(
    op: &OperatorPolynomial,
    power: u32,
    limits: &EnumerationLimits,
) -> Result<BTreeMap<NormalMonomial, Coefficient>, CliError> {
    let basis = single_mode_gates(op)?;
    let gates = basis.gates();
    if gates.len() > limits.max_basis {
        return Err(CliError::Refused(format!(
            "the expression normalises to {} gate shapes, above the bound {}; raise --max-size \
             to allow it",
            gates.len(),
            limits.max_basis
        )));
    }
    if power as usize > limits.max_gates {
        return Err(CliError::Refused(format!(
            "power {power} exceeds the gate bound {}; raise --max-size to allow it",
            limits.max_gates
        )));
    }
    let sequences = (gates.len() as u64)
        .checked_pow(power)
        .filter(|&count| count <= ROOK_SEQUENCE_CAP)
        .ok_or_else(|| {
            CliError::Refused(format!(
                "the rook oracle would scan more than {ROOK_SEQUENCE_CAP} gate sequences; \
                 lower the power or the basis size"
            ))
        })?;
    let params = op.parameters();
    let mut table: BTreeMap<NormalMonomial, Coefficient> = BTreeMap::new();
    for index in 0..sequences {
        let mut rest = index;
        let mut shapes = Vec::with_capacity(power as usize);
        let mut weight = Coefficient::one(params);
        for _ in 0..power {
            let gate = &gates[(rest % gates.len() as u64) as usize];
            rest /= gates.len() as u64;
            shapes.push(gate.shape());
            weight = &weight * gate.weight();
        }
        let outputs: u32 = shapes.iter().map(|&(a, _)| a).sum();
        let inputs: u32 = shapes.iter().map(|&(_, b)| b).sum();
        for bound in 0..=outputs.min(inputs) {
            let placements = rook_count(&shapes, outputs - bound, inputs - bound, limits)
                .map_err(|error| CliError::Refused(error.to_string()))?;
            if placements.is_zero() {
                continue;
            }
            let key = NormalMonomial::single_mode(outputs - bound, inputs - bound);
            let contribution = weight.scale(&BigRational::from_integer(placements));
            let slot = table.entry(key).or_insert_with(|| Coefficient::zero(params));
            *slot += &contribution;
        }
    }
    table.retain(|_, coeff| !coeff.is_zero());
    Ok(table)
}

fn paths_table(
    op: &OperatorPolynomial,
    power: u32,
) -> Result<BTreeMap<NormalMonomial, Coefficient>, CliError> {
    let basis = single_mode_gates(op)?;
    let steps = basis
        .gates()
        .iter()
        .map(|gate| {
            let weight = gate.weight().clone();
            let inputs = gate.inputs();
            Step::new(
                i64::from(gate.outputs()) - i64::from(inputs),
                WeightRule::from_fn(move |altitude| {
                    let factors = falling_factorial(u64::from(altitude), u64::from(inputs));
                    weight.scale(&BigRational::from_integer(factors))
                }),
            )
        })
        .collect();
    let set = StepSet::new(op.parameters(), steps);
    let value = lattice_count(&set, power as usize);
    let mut table = BTreeMap::new();
    if !value.is_zero() {
        table.insert(NormalMonomial::identity(1), value);
    }
    Ok(table)
}

/// Find the first coefficient, in graded lexicographic order, where any two
/// of the reports disagree.  Pairs are examined in the order the reports
/// were listed; a constant-only report is compared at the identity monomial
/// only.
pub fn first_disagreement(reports: &[OracleReport], params: &Parameters) -> Option<Disagreement> {
    let zero = Coefficient::zero(params);
    for (index, left) in reports.iter().enumerate() {
        for right in &reports[index + 1..] {
            let keys = if left.constant_only || right.constant_only {
                vec![NormalMonomial::identity(1)]
            } else {
                let mut keys: Vec<NormalMonomial> = left
                    .table
                    .keys()
                    .chain(right.table.keys())
                    .cloned()
                    .collect();
                sort_monomials(&mut keys);
                keys.dedup();
                keys
            };
            for key in keys {
                let first_value = left.table.get(&key).unwrap_or(&zero);
                let second_value = right.table.get(&key).unwrap_or(&zero);
                if first_value != second_value {
                    return Some(Disagreement {
                        monomial: monomial_text(key.raises(), key.lowers()),
                        first: left.kind,
                        first_value: first_value.to_string(),
                        second: right.kind,
                        second_value: second_value.to_string(),
                    });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eval::{build_operator, Deformation};
    use crate::parse::parse_expression;

    const ORACLES: [OracleKind; 5] = [
        OracleKind::Rewrite,
        OracleKind::Transfer,
        OracleKind::Enumerate,
        OracleKind::Rook,
        OracleKind::Paths,
    ];

    fn operator(text: &str) -> OperatorPolynomial {
        let expression = parse_expression(text).expect("parseable");
        build_operator(&expression, &Deformation::Off, 64).expect("buildable")
    }

    #[test]
    fn all_routes_agree_on_the_squared_sum() {
        let op = operator("X + D");
        let limits = EnumerationLimits::default();
        let reports: Vec<OracleReport> = ORACLES
            .iter()
            .map(|&kind| run_oracle(kind, &op, 2, &limits).expect("within bounds"))
            .collect();
        assert!(first_disagreement(&reports, op.parameters()).is_none());
        let identity = NormalMonomial::identity(1);
        assert!(reports[0].table[&identity].is_one());
        assert!(reports[4].table[&identity].is_one());
    }

    #[test]
    fn the_report_names_the_smallest_differing_monomial() {
        let op = operator("X + D");
        let limits = EnumerationLimits::default();
        let mut reports = vec![
            run_oracle(OracleKind::Rewrite, &op, 2, &limits).expect("within bounds"),
            run_oracle(OracleKind::Transfer, &op, 2, &limits).expect("within bounds"),
        ];
        // Corrupt two entries; the graded-lex smaller one must be reported.
        let params = op.parameters().clone();
        let double = Coefficient::from_integer(&params, 2);
        reports[1].table.insert(NormalMonomial::single_mode(0, 2), double.clone());
        reports[1].table.insert(NormalMonomial::single_mode(1, 1), double);
        let difference = first_disagreement(&reports, &params).expect("tables differ");
        assert_eq!(difference.monomial, "D^2");
        assert_eq!(difference.first_value, "1");
        assert_eq!(difference.second_value, "2");
    }

    #[test]
    fn gate_routes_refuse_constant_terms_and_extra_modes() {
        let constant = operator("D*X");
        let limits = EnumerationLimits::default();
        let error = run_oracle(OracleKind::Transfer, &constant, 2, &limits).unwrap_err();
        assert!(matches!(error, CliError::Refused(_)));

        let indexed = operator("X0*X1");
        let error = run_oracle(OracleKind::Enumerate, &indexed, 2, &limits).unwrap_err();
        assert!(matches!(error, CliError::Refused(_)));
    }

    #[test]
    fn oversized_requests_are_refused_not_attempted() {
        let op = operator("X*D");
        let limits = EnumerationLimits { max_gates: 3, max_basis: 4 };
        let error = run_oracle(OracleKind::Enumerate, &op, 4, &limits).unwrap_err();
        assert!(matches!(error, CliError::Refused(_)));
        let error = run_oracle(OracleKind::Rook, &op, 4, &limits).unwrap_err();
        assert!(matches!(error, CliError::Refused(_)));
    }
}
