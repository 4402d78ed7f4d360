//! The crossing number of an embedded diagram.
//!
//! Gates are laid out along the north-west diagonal in label order: gate `j`
//! sits above and to the left of gate `j - 1`. Inputs leave a gate
//! horizontally to the right (lower slot indices lower), outputs leave
//! vertically upward (lower slot indices further right). A bound edge is
//! then an L: up from the producing gate, with a final horizontal run into
//! the consuming gate's input slot. Free inputs run right forever, dangling
//! outputs run up forever. The crossing number is the number of pairs of
//! edges that intersect.
//!
//! No floating geometry is involved: every x or y coordinate is a
//! `(gate, slot)` pair compared lexicographically, with an infinity for the
//! open ends of half-lines. The layout guarantees that distinct edges never
//! share a coordinate, so all intersection tests are strict.

use crate::diagram::{LabelledDiagram, OutputRef};

/// A coordinate on one axis: a lexicographic `(major, minor)` pair, or the
/// far end of a half-line.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Coord {
    Finite(i64, i64),
    Infinite,
}

/// Vertical run of an edge: a fixed x, spanning an open y-interval.
#[derive(Clone, Copy, Debug)]
struct Vertical {
    x: Coord,
    y_low: Coord,
    y_high: Coord,
}

/// Horizontal run of an edge: a fixed y, spanning an open x-interval.
#[derive(Clone, Copy, Debug)]
struct Horizontal {
    y: Coord,
    x_left: Coord,
    x_right: Coord,
}

/// One drawn edge; bound edges have both runs, half-lines have one.
#[derive(Clone, Copy, Debug)]
struct Edge {
    vertical: Option<Vertical>,
    horizontal: Option<Horizontal>,
}

/// x-coordinate of output slot `slot` of gate `label`: gates march west as
/// labels grow, and within a gate later slots sit further west.
fn output_x(label: usize, slot: u32) -> Coord {
    Coord::Finite(-(label as i64), -i64::from(slot))
}

/// x-coordinate of a gate's input attachment edge, just east of its own
/// output columns.
fn body_x(label: usize) -> Coord {
    Coord::Finite(-(label as i64), 1)
}

/// y-coordinate of input slot `slot` of gate `label`: within a gate later
/// slots sit higher.
fn input_y(label: usize, slot: u32) -> Coord {
    Coord::Finite(label as i64, i64::from(slot))
}

/// y-coordinate of the top of a gate body, above all of its input lines;
/// outputs start climbing here.
fn top_y(label: usize) -> Coord {
    Coord::Finite(label as i64, i64::MAX)
}

fn edges(diagram: &LabelledDiagram) -> Vec<Edge> {
    let mut edges = Vec::new();
    for (index, gate) in diagram.gates().iter().enumerate() {
        let label = index + 1;
        for (slot, binding) in gate.bindings().iter().enumerate() {
            let slot = slot as u32;
            match binding {
                Some(output) => edges.push(Edge {
                    vertical: Some(Vertical {
                        x: output_x(output.gate, output.slot),
                        y_low: top_y(output.gate),
                        y_high: input_y(label, slot),
                    }),
                    horizontal: Some(Horizontal {
                        y: input_y(label, slot),
                        x_left: body_x(label),
                        x_right: output_x(output.gate, output.slot),
                    }),
                }),
                None => edges.push(Edge {
                    vertical: None,
                    horizontal: Some(Horizontal {
                        y: input_y(label, slot),
                        x_left: body_x(label),
                        x_right: Coord::Infinite,
                    }),
                }),
            }
        }
        for slot in 0..gate.outputs() {
            if !diagram.is_output_bound(OutputRef { gate: label, slot }) {
                edges.push(Edge {
                    vertical: Some(Vertical {
                        x: output_x(label, slot),
                        y_low: top_y(label),
                        y_high: Coord::Infinite,
                    }),
                    horizontal: None,
                });
            }
        }
    }
    edges
}

/// Number of crossing edge pairs in the embedded drawing of `diagram`.
pub fn crossing_number(diagram: &LabelledDiagram) -> u64 {
    let edges = edges(diagram);
    let mut crossings = 0;
    for (i, e) in edges.iter().enumerate() {
        let Some(v) = e.vertical else { continue };
        for (j, f) in edges.iter().enumerate() {
            if i == j {
                continue;
            }
            let Some(h) = f.horizontal else { continue };
            if h.x_left < v.x && v.x < h.x_right && v.y_low < h.y && h.y < v.y_high {
                crossings += 1;
            }
        }
    }
    crossings
}
