//! Gate types and weighted gate bases.

use weylkit_core::{Coefficient, CoreError, OperatorPolynomial, Parameters, Word};

use crate::error::DiagramsError;

/// A gate type: a vertex shape with `outputs` outgoing and `inputs` incoming
/// edges, carrying a weight.
#[derive(Clone, Debug)]
pub struct Gate {
    outputs: u32,
    inputs: u32,
    weight: Coefficient,
}

impl Gate {
    /// Number of outgoing edges.
    pub fn outputs(&self) -> u32 {
        self.outputs
    }

    /// Number of incoming edges.
    pub fn inputs(&self) -> u32 {
        self.inputs
    }

    /// Multiplicative weight carried by every instance of this gate.
    pub fn weight(&self) -> &Coefficient {
        &self.weight
    }

    /// The `(outputs, inputs)` type pair.
    pub fn shape(&self) -> (u32, u32) {
        (self.outputs, self.inputs)
    }
}

/// A finite set of distinct weighted gate types over one parameter context.
///
/// A basis is the diagram-side picture of an operator in normal form: the
/// gate with `r` outputs and `s` inputs stands for the summand `w X^r D^s`,
/// outputs for raising letters and inputs for lowering letters.
#[derive(Clone, Debug)]
pub struct GateBasis {
    params: Parameters,
    gates: Vec<Gate>,
}

impl GateBasis {
    /// Builds a basis from `(outputs, inputs, weight)` triples.
    ///
    /// # Errors
    ///
    /// [`DiagramsError::IdentityGate`] if some type is `(0, 0)`, and
    /// [`DiagramsError::DuplicateGate`] if a type pair repeats. A weight
    /// from a different parameter context is a [`CoreError::ContextMismatch`].
    pub fn new(
        params: &Parameters,
        gates: Vec<(u32, u32, Coefficient)>,
    ) -> Result<Self, DiagramsError> {
        let mut seen = Vec::new();
        let mut out = Vec::with_capacity(gates.len());
        for (outputs, inputs, weight) in gates {
            if outputs == 0 && inputs == 0 {
                return Err(DiagramsError::IdentityGate);
            }
            if seen.contains(&(outputs, inputs)) {
                return Err(DiagramsError::DuplicateGate { outputs, inputs });
            }
            if weight.parameters() != params {
                return Err(DiagramsError::Core(CoreError::ContextMismatch {
                    left: weight.parameters().describe(),
                    right: params.describe(),
                }));
            }
            seen.push((outputs, inputs));
            out.push(Gate { outputs, inputs, weight });
        }
        Ok(Self { params: params.clone(), gates: out })
    }

    /// Builds a basis in which every gate has weight 1.
    ///
    /// # Errors
    ///
    /// As for [`GateBasis::new`].
    pub fn unweighted(params: &Parameters, shapes: &[(u32, u32)]) -> Result<Self, DiagramsError> {
        Self::new(
            params,
            shapes.iter().map(|&(r, s)| (r, s, Coefficient::one(params))).collect(),
        )
    }

    /// The parameter context of the gate weights.
    pub fn parameters(&self) -> &Parameters {
        &self.params
    }

    /// The gate types, in the order they were supplied.
    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    /// The operator this basis depicts: the sum of `w X^r D^s` over all
    /// gates, in the undeformed algebra.
    ///
    /// # Errors
    ///
    /// Never fails in practice; the signature carries the word-insertion
    /// error through.
    pub fn operator(&self) -> Result<OperatorPolynomial, CoreError> {
        self.operator_deformed(Coefficient::one(&self.params))
    }

    /// The same operator over the deformed algebra with commutation factor
    /// `deformation`.
    ///
    /// # Errors
    ///
    /// [`CoreError`] if the deformation is invalid for this context.
    pub fn operator_deformed(
        &self,
        deformation: Coefficient,
    ) -> Result<OperatorPolynomial, CoreError> {
        let mut op = OperatorPolynomial::zero_deformed(&self.params, 1, deformation)?;
        for gate in &self.gates {
            op.add_word(
                Word::normal_single_mode(gate.outputs, gate.inputs),
                gate.weight.clone(),
            )?;
        }
        Ok(op)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_gates_are_rejected() {
        let params = Parameters::empty();
        assert!(matches!(
            GateBasis::unweighted(&params, &[(1, 1), (0, 0)]),
            Err(DiagramsError::IdentityGate)
        ));
    }

    #[test]
    fn duplicate_types_are_rejected() {
        let params = Parameters::empty();
        assert!(matches!(
            GateBasis::unweighted(&params, &[(2, 1), (2, 1)]),
            Err(DiagramsError::DuplicateGate { outputs: 2, inputs: 1 })
        ));
    }
}
