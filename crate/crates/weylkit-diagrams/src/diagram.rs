//! Labelled diagrams: gates joined by output-to-input edges.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::DiagramsError;

/// A reference to one output slot of one gate, by 1-based gate label.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct OutputRef {
    /// 1-based label of the producing gate.
    pub gate: usize,
    /// Output slot index within that gate, 0-based.
    pub slot: u32,
}

/// One gate instance inside a diagram: its output arity and, for each input
/// slot in order, either a binding to an earlier gate's output or `None` for
/// a free input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlacedGate {
    outputs: u32,
    bindings: Vec<Option<OutputRef>>,
}

impl PlacedGate {
    /// A gate with `outputs` outgoing slots and the given input bindings
    /// (one entry per input slot, in slot order).
    pub fn new(outputs: u32, bindings: Vec<Option<OutputRef>>) -> Self {
        Self { outputs, bindings }
    }

    /// Number of output slots.
    pub fn outputs(&self) -> u32 {
        self.outputs
    }

    /// Number of input slots.
    pub fn inputs(&self) -> u32 {
        self.bindings.len() as u32
    }

    /// The input bindings in slot order.
    pub fn bindings(&self) -> &[Option<OutputRef>] {
        &self.bindings
    }

    /// The `(outputs, inputs)` type pair.
    pub fn shape(&self) -> (u32, u32) {
        (self.outputs, self.inputs())
    }
}

/// One weakly connected piece of a diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Component {
    /// 1-based labels of the member gates, increasing.
    pub gates: Vec<usize>,
    /// Dangling outputs across the member gates.
    pub free_outputs: u32,
    /// Free inputs across the member gates.
    pub free_inputs: u32,
}

/// An ordered sequence of gates whose labels are their positions (1-based),
/// with every input either free or bound to an output of an earlier gate
/// and every output bound at most once.
///
/// Labels increase along any directed path by construction, which is the
/// monotone-labelling property that makes these diagrams histories of an
/// incremental grafting process.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LabelledDiagram {
    gates: Vec<PlacedGate>,
}

impl LabelledDiagram {
    /// The empty diagram.
    pub fn empty() -> Self {
        Self { gates: Vec::new() }
    }

    /// Validates and assembles a diagram from placed gates.
    ///
    /// # Errors
    ///
    /// [`DiagramsError::InvalidBinding`] when a binding points at the
    /// current or a later gate, at a slot the producer does not have, or at
    /// an output that is already bound.
    pub fn new(gates: Vec<PlacedGate>) -> Result<Self, DiagramsError> {
        let mut bound = BTreeSet::new();
        for (index, gate) in gates.iter().enumerate() {
            let label = index + 1;
            for (slot, binding) in gate.bindings.iter().enumerate() {
                let slot = slot as u32;
                let Some(output) = binding else { continue };
                if output.gate == 0 || output.gate >= label {
                    return Err(DiagramsError::InvalidBinding {
                        gate: label,
                        slot,
                        reason: format!(
                            "bound to gate {} which is not earlier in label order",
                            output.gate
                        ),
                    });
                }
                let producer = &gates[output.gate - 1];
                if output.slot >= producer.outputs {
                    return Err(DiagramsError::InvalidBinding {
                        gate: label,
                        slot,
                        reason: format!(
                            "gate {} has only {} outputs, slot {} does not exist",
                            output.gate, producer.outputs, output.slot
                        ),
                    });
                }
                if !bound.insert(*output) {
                    return Err(DiagramsError::InvalidBinding {
                        gate: label,
                        slot,
                        reason: format!(
                            "output {}.{} is already bound",
                            output.gate, output.slot
                        ),
                    });
                }
            }
        }
        Ok(Self { gates })
    }

    /// Number of gates.
    pub fn size(&self) -> usize {
        self.gates.len()
    }

    /// The gates in label order (label = index + 1).
    pub fn gates(&self) -> &[PlacedGate] {
        &self.gates
    }

    /// The `(outputs, inputs)` type pairs in label order.
    pub fn shape_sequence(&self) -> Vec<(u32, u32)> {
        self.gates.iter().map(PlacedGate::shape).collect()
    }

    /// Whether the given output slot is bound by some later gate's input.
    pub fn is_output_bound(&self, output: OutputRef) -> bool {
        self.gates
            .iter()
            .flat_map(|g| g.bindings.iter())
            .any(|binding| *binding == Some(output))
    }

    /// The `(a, b)` state of the diagram: `a` dangling outputs and `b` free
    /// inputs.
    pub fn state(&self) -> (u32, u32) {
        let mut bound_outputs = 0;
        let mut free_inputs = 0;
        for gate in &self.gates {
            for binding in &gate.bindings {
                match binding {
                    Some(_) => bound_outputs += 1,
                    None => free_inputs += 1,
                }
            }
        }
        let total_outputs: u32 = self.gates.iter().map(|g| g.outputs).sum();
        (total_outputs - bound_outputs, free_inputs)
    }

    /// The weakly connected components, each with its free-end counts,
    /// ordered by smallest member label.
    pub fn components(&self) -> Vec<Component> {
        let n = self.gates.len();
        let mut representative: Vec<usize> = (0..n).collect();
        fn find(representative: &mut Vec<usize>, mut i: usize) -> usize {
            while representative[i] != i {
                representative[i] = representative[representative[i]];
                i = representative[i];
            }
            i
        }
        for (index, gate) in self.gates.iter().enumerate() {
            for binding in gate.bindings.iter().flatten() {
                let a = find(&mut representative, index);
                let b = find(&mut representative, binding.gate - 1);
                representative[a.max(b)] = a.min(b);
            }
        }

        let mut components: Vec<Component> = Vec::new();
        let mut component_of_root: Vec<Option<usize>> = vec![None; n];
        for index in 0..n {
            let root = find(&mut representative, index);
            let slot = *component_of_root[root].get_or_insert_with(|| {
                components.push(Component { gates: Vec::new(), free_outputs: 0, free_inputs: 0 });
                components.len() - 1
            });
            let component = &mut components[slot];
            component.gates.push(index + 1);
            let gate = &self.gates[index];
            component.free_inputs +=
                gate.bindings.iter().filter(|binding| binding.is_none()).count() as u32;
            component.free_outputs += (0..gate.outputs)
                .filter(|&p| !self.is_output_bound(OutputRef { gate: index + 1, slot: p }))
                .count() as u32;
        }
        components
    }
}

/// One line per gate: label, type, and the input bindings in slot order as
/// `slot<-label.out` or `slot<-free`.
///
/// ```text
/// 1 (2,1) 0<-free
/// 2 (2,1) 0<-1.1
/// ```
impl fmt::Display for LabelledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (index, gate) in self.gates.iter().enumerate() {
            write!(f, "{} ({},{})", index + 1, gate.outputs, gate.inputs())?;
            for (slot, binding) in gate.bindings.iter().enumerate() {
                match binding {
                    Some(output) => write!(f, " {slot}<-{}.{}", output.gate, output.slot)?,
                    None => write!(f, " {slot}<-free")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain() -> LabelledDiagram {
        LabelledDiagram::new(vec![
            PlacedGate::new(2, vec![None]),
            PlacedGate::new(2, vec![Some(OutputRef { gate: 1, slot: 1 })]),
        ])
        .unwrap()
    }

    #[test]
    fn states_count_free_ends() {
        assert_eq!(chain().state(), (3, 1));
        assert_eq!(LabelledDiagram::empty().state(), (0, 0));
    }

    #[test]
    fn forward_bindings_are_rejected() {
        let result = LabelledDiagram::new(vec![
            PlacedGate::new(1, vec![Some(OutputRef { gate: 2, slot: 0 })]),
            PlacedGate::new(1, vec![None]),
        ]);
        assert!(matches!(result, Err(DiagramsError::InvalidBinding { gate: 1, slot: 0, .. })));
    }

    #[test]
    fn double_bindings_are_rejected() {
        let result = LabelledDiagram::new(vec![
            PlacedGate::new(1, vec![]),
            PlacedGate::new(0, vec![Some(OutputRef { gate: 1, slot: 0 })]),
            PlacedGate::new(0, vec![Some(OutputRef { gate: 1, slot: 0 })]),
        ]);
        assert!(matches!(result, Err(DiagramsError::InvalidBinding { gate: 3, slot: 0, .. })));
    }

    #[test]
    fn components_split_at_unconnected_gates() {
        let diagram = LabelledDiagram::new(vec![
            PlacedGate::new(2, vec![]),
            PlacedGate::new(1, vec![None]),
            PlacedGate::new(0, vec![Some(OutputRef { gate: 1, slot: 0 }), None]),
        ])
        .unwrap();
        let components = diagram.components();
        assert_eq!(components.len(), 2);
        assert_eq!(
            components[0],
            Component { gates: vec![1, 3], free_outputs: 1, free_inputs: 1 }
        );
        assert_eq!(
            components[1],
            Component { gates: vec![2], free_outputs: 1, free_inputs: 1 }
        );
    }

    #[test]
    fn display_lists_one_gate_per_line() {
        let rendered = chain().to_string();
        assert_eq!(rendered, "1 (2,1) 0<-free\n2 (2,1) 0<-1.1\n");
    }
}
