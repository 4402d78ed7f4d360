//! Exhaustive generation of labelled diagrams by recursive grafting.

use std::collections::{BTreeMap, BTreeSet};

use weylkit_core::{Coefficient, CoreError};

use crate::basis::GateBasis;
use crate::crossings::crossing_number;
use crate::diagram::{LabelledDiagram, OutputRef, PlacedGate};
use crate::error::DiagramsError;

/// Bounds on exhaustive enumeration. Diagram counts grow super-exponentially
/// with size, so runs past these limits are refused outright instead of
/// being truncated.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationLimits {
    /// Largest diagram size (number of gates) enumeration accepts.
    pub max_gates: usize,
    /// Largest number of gate types a basis may have.
    pub max_basis: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        Self { max_gates: 6, max_basis: 4 }
    }
}

/// The result of an exhaustive enumeration: every diagram generated, plus
/// the sum of their weights (each diagram weighs the product of its gate
/// weights).
#[derive(Clone, Debug)]
pub struct Enumeration {
    /// The diagrams, in the deterministic generation order: gate types in
    /// basis order, binding choices in output creation order.
    pub diagrams: Vec<LabelledDiagram>,
    /// Total weight of the listed diagrams.
    pub total_weight: Coefficient,
}

/// What gate shapes may be placed at each construction step.
enum StepShapes<'a> {
    /// Any shape from the basis, at every step.
    Basis(&'a GateBasis),
    /// A fixed shape per step.
    Sequence(&'a [(u32, u32)]),
}

impl StepShapes<'_> {
    fn at(&self, step: usize) -> Vec<(u32, u32)> {
        match self {
            StepShapes::Basis(basis) => basis.gates().iter().map(|g| g.shape()).collect(),
            StepShapes::Sequence(shapes) => vec![shapes[step]],
        }
    }
}

/// Depth-first generation of every diagram of the requested size. The
/// recursion places one gate per level: it picks a shape, then for each
/// input slot in order either leaves it free or binds it to one of the
/// currently dangling outputs (in creation order), so the visit order is
/// deterministic and independent of any shared state.
struct Search<'a> {
    size: usize,
    shapes: StepShapes<'a>,
    sink: &'a mut dyn FnMut(&[PlacedGate]),
}

impl Search<'_> {
    fn run(&mut self) {
        self.place_next(&mut Vec::new(), &[]);
    }

    fn place_next(&mut self, gates: &mut Vec<PlacedGate>, dangling: &[OutputRef]) {
        if gates.len() == self.size {
            (self.sink)(gates);
            return;
        }
        for (outputs, inputs) in self.shapes.at(gates.len()) {
            self.fill_slots(
                gates,
                dangling,
                outputs,
                inputs,
                &mut Vec::with_capacity(inputs as usize),
                &mut BTreeSet::new(),
            );
        }
    }

    fn fill_slots(
        &mut self,
        gates: &mut Vec<PlacedGate>,
        dangling: &[OutputRef],
        outputs: u32,
        inputs: u32,
        bindings: &mut Vec<Option<OutputRef>>,
        taken: &mut BTreeSet<OutputRef>,
    ) {
        if bindings.len() == inputs as usize {
            let label = gates.len() + 1;
            let mut next_dangling: Vec<OutputRef> =
                dangling.iter().filter(|output| !taken.contains(output)).copied().collect();
            next_dangling.extend((0..outputs).map(|slot| OutputRef { gate: label, slot }));
            gates.push(PlacedGate::new(outputs, bindings.clone()));
            self.place_next(gates, &next_dangling);
            gates.pop();
            return;
        }

        bindings.push(None);
        self.fill_slots(gates, dangling, outputs, inputs, bindings, taken);
        bindings.pop();

        for output in dangling {
            if taken.contains(output) {
                continue;
            }
            bindings.push(Some(*output));
            taken.insert(*output);
            self.fill_slots(gates, dangling, outputs, inputs, bindings, taken);
            taken.remove(output);
            bindings.pop();
        }
    }
}

fn check_basis_limits(
    basis: &GateBasis,
    size: usize,
    limits: &EnumerationLimits,
) -> Result<(), DiagramsError> {
    if basis.gates().len() > limits.max_basis {
        return Err(DiagramsError::BasisTooLarge {
            size: basis.gates().len(),
            bound: limits.max_basis,
        });
    }
    check_size(size, limits)
}

fn check_size(size: usize, limits: &EnumerationLimits) -> Result<(), DiagramsError> {
    if size > limits.max_gates {
        return Err(DiagramsError::TooManyGates { requested: size, bound: limits.max_gates });
    }
    Ok(())
}

fn assemble(gates: &[PlacedGate]) -> LabelledDiagram {
    LabelledDiagram::new(gates.to_vec()).expect("the search only grafts valid bindings")
}

/// All labelled diagrams of the given size over the basis, optionally
/// restricted to those with `filter` as their `(dangling outputs, free
/// inputs)` state.
///
/// # Errors
///
/// [`DiagramsError::TooManyGates`] or [`DiagramsError::BasisTooLarge`] when
/// the request exceeds `limits`.
pub fn enumerate_diagrams(
    basis: &GateBasis,
    size: usize,
    filter: Option<(u32, u32)>,
    limits: &EnumerationLimits,
) -> Result<Enumeration, DiagramsError> {
    check_basis_limits(basis, size, limits)?;
    let weights: BTreeMap<(u32, u32), Coefficient> =
        basis.gates().iter().map(|g| (g.shape(), g.weight().clone())).collect();
    let mut diagrams = Vec::new();
    let mut total_weight = Coefficient::zero(basis.parameters());
    {
        let mut sink = |gates: &[PlacedGate]| {
            let diagram = assemble(gates);
            if filter.is_some_and(|state| state != diagram.state()) {
                return;
            }
            let mut weight = Coefficient::one(basis.parameters());
            for gate in diagram.gates() {
                weight *= &weights[&gate.shape()];
            }
            total_weight += &weight;
            diagrams.push(diagram);
        };
        Search { size, shapes: StepShapes::Basis(basis), sink: &mut sink }.run();
    }
    Ok(Enumeration { diagrams, total_weight })
}

/// All labelled diagrams whose gate shapes follow `shapes` in label order,
/// optionally restricted by final state. Useful for studying one monomial's
/// reduction rather than a full operator power.
///
/// # Errors
///
/// [`DiagramsError::TooManyGates`] when the sequence exceeds `limits`;
/// [`DiagramsError::IdentityGate`] if some shape is `(0, 0)`.
pub fn enumerate_sequence_diagrams(
    shapes: &[(u32, u32)],
    filter: Option<(u32, u32)>,
    limits: &EnumerationLimits,
) -> Result<Vec<LabelledDiagram>, DiagramsError> {
    check_size(shapes.len(), limits)?;
    if shapes.contains(&(0, 0)) {
        return Err(DiagramsError::IdentityGate);
    }
    let mut diagrams = Vec::new();
    {
        let mut sink = |gates: &[PlacedGate]| {
            let diagram = assemble(gates);
            if filter.is_some_and(|state| state != diagram.state()) {
                return;
            }
            diagrams.push(diagram);
        };
        Search { size: shapes.len(), shapes: StepShapes::Sequence(shapes), sink: &mut sink }
            .run();
    }
    Ok(diagrams)
}

/// Sum of `weight * q^crossings` over all embedded diagrams of the given
/// size and final state, where `weight` is the product of gate weights and
/// the crossing number comes from the north-west planar embedding.
///
/// # Errors
///
/// As for [`enumerate_diagrams`]; additionally a
/// [`CoreError::ContextMismatch`] if `q` lives in a different parameter
/// context than the basis.
pub fn crossing_weighted_count(
    basis: &GateBasis,
    size: usize,
    filter: (u32, u32),
    q: &Coefficient,
    limits: &EnumerationLimits,
) -> Result<Coefficient, DiagramsError> {
    check_basis_limits(basis, size, limits)?;
    if q.parameters() != basis.parameters() {
        return Err(DiagramsError::Core(CoreError::ContextMismatch {
            left: q.parameters().describe(),
            right: basis.parameters().describe(),
        }));
    }
    let weights: BTreeMap<(u32, u32), Coefficient> =
        basis.gates().iter().map(|g| (g.shape(), g.weight().clone())).collect();
    let mut total = Coefficient::zero(basis.parameters());
    {
        let mut sink = |gates: &[PlacedGate]| {
            let diagram = assemble(gates);
            if diagram.state() != filter {
                return;
            }
            let crossings = u32::try_from(crossing_number(&diagram))
                .expect("bounded diagrams have bounded crossing numbers");
            let mut weight = q.pow(crossings);
            for gate in diagram.gates() {
                weight *= &weights[&gate.shape()];
            }
            total += &weight;
        };
        Search { size, shapes: StepShapes::Basis(basis), sink: &mut sink }.run();
    }
    Ok(total)
}
