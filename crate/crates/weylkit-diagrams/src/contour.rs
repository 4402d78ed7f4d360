//! Contours, Ferrers boards, and rook placements.
//!
//! A diagram's gate shapes, read in label order, draw a staircase: each
//! output is a unit step down, each input a unit step right (with a pin
//! marking every gate boundary). The cells under that staircase form a
//! Ferrers board whose rows are the outputs and whose columns are the
//! inputs, in creation order. Placing non-attacking rooks on the board is
//! exactly choosing which input binds which earlier output, so a diagram is
//! the same thing as its contour plus a rook placement.

use std::fmt;

use num_bigint::BigInt;

use crate::diagram::{LabelledDiagram, OutputRef, PlacedGate};
use crate::enumerate::EnumerationLimits;
use crate::error::DiagramsError;

/// One letter of a contour word.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ContourLetter {
    /// A unit step for one output.
    Raise,
    /// A unit step for one input.
    Lower,
    /// A gate boundary marker.
    Pin,
}

impl fmt::Display for ContourLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ContourLetter::Raise => "X",
            ContourLetter::Lower => "D",
            ContourLetter::Pin => "|",
        })
    }
}

/// The staircase board drawn by a sequence of gate shapes.
///
/// Column `c` (0-based, in the order the inputs arrive) has height equal to
/// the number of outputs that exist before that input's gate, so cell
/// `(row, c)` is on the board exactly when output `row` could legally be
/// bound by input `c`. Rows are likewise 0-based in output creation order,
/// from the bottom of the board.
///
/// Pins are always kept in the contour, even for bases where the parse
/// would be unambiguous without them, so that every board round-trips
/// through its contour word uniformly.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FerrersBoard {
    contour: Vec<ContourLetter>,
    column_heights: Vec<u32>,
    rows: u32,
}

impl FerrersBoard {
    /// The board of a gate shape sequence, given in label order.
    pub fn from_shape_sequence(shapes: &[(u32, u32)]) -> Self {
        let mut contour = Vec::new();
        for &(outputs, inputs) in shapes.iter().rev() {
            contour.push(ContourLetter::Pin);
            contour.extend(std::iter::repeat(ContourLetter::Raise).take(outputs as usize));
            contour.extend(std::iter::repeat(ContourLetter::Lower).take(inputs as usize));
        }
        let mut column_heights = Vec::new();
        let mut rows = 0;
        for &(outputs, inputs) in shapes {
            column_heights.extend(std::iter::repeat(rows).take(inputs as usize));
            rows += outputs;
        }
        Self { contour, column_heights, rows }
    }

    /// The contour word, one gate block per pin, with the highest label
    /// first (the staircase is drawn from the top left, but columns are
    /// consumed from the bottom right, where labels start).
    pub fn contour(&self) -> &[ContourLetter] {
        &self.contour
    }

    /// Column heights in input creation order; non-decreasing.
    pub fn column_heights(&self) -> &[u32] {
        &self.column_heights
    }

    /// Number of rows (total outputs).
    pub fn rows(&self) -> u32 {
        self.rows
    }

    /// All `(row, column)` cells of the board.
    pub fn cells(&self) -> Vec<(u32, u32)> {
        let mut cells = Vec::new();
        for (column, &height) in self.column_heights.iter().enumerate() {
            for row in 0..height {
                cells.push((row, column as u32));
            }
        }
        cells
    }

    /// Recovers the gate shape sequence from the contour word.
    ///
    /// # Errors
    ///
    /// [`DiagramsError::InvalidEncoding`] if the contour does not start with
    /// a pin or some block mixes steps out of output-then-input order.
    pub fn shape_sequence(&self) -> Result<Vec<(u32, u32)>, DiagramsError> {
        let mut reversed: Vec<(u32, u32)> = Vec::new();
        let mut block: Option<(u32, u32)> = None;
        for letter in &self.contour {
            match letter {
                ContourLetter::Pin => {
                    if let Some(shape) = block.take() {
                        reversed.push(shape);
                    }
                    block = Some((0, 0));
                }
                ContourLetter::Raise => {
                    let Some((outputs, inputs)) = block.as_mut() else {
                        return Err(DiagramsError::InvalidEncoding {
                            reason: "contour must start with a pin".to_owned(),
                        });
                    };
                    if *inputs > 0 {
                        return Err(DiagramsError::InvalidEncoding {
                            reason: "outputs after inputs within one gate block".to_owned(),
                        });
                    }
                    *outputs += 1;
                }
                ContourLetter::Lower => {
                    let Some((_, inputs)) = block.as_mut() else {
                        return Err(DiagramsError::InvalidEncoding {
                            reason: "contour must start with a pin".to_owned(),
                        });
                    };
                    *inputs += 1;
                }
            }
        }
        if let Some(shape) = block {
            reversed.push(shape);
        }
        reversed.reverse();
        Ok(reversed)
    }
}

impl fmt::Display for FerrersBoard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for letter in &self.contour {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// Number of non-attacking rook placements on the board of `shapes` that
/// leave exactly `free_rows` rows and `free_columns` columns empty.
///
/// Rooks are placed column by column; a column of height `h` whose earlier
/// columns already hold `used` rooks admits `h - used` placements, since
/// all earlier rooks sit in rows below `h`.
///
/// # Errors
///
/// [`DiagramsError::TooManyGates`] if the sequence is longer than the
/// configured bound.
pub fn rook_count(
    shapes: &[(u32, u32)],
    free_rows: u32,
    free_columns: u32,
    limits: &EnumerationLimits,
) -> Result<BigInt, DiagramsError> {
    if shapes.len() > limits.max_gates {
        return Err(DiagramsError::TooManyGates {
            requested: shapes.len(),
            bound: limits.max_gates,
        });
    }
    let board = FerrersBoard::from_shape_sequence(shapes);
    let rows = board.rows();
    let columns = board.column_heights().len() as u32;
    if free_rows > rows || free_columns > columns {
        return Ok(BigInt::from(0));
    }
    let rooks = rows - free_rows;
    if columns - free_columns != rooks {
        return Ok(BigInt::from(0));
    }

    // ways[k] = number of placements of k rooks among the columns seen so far
    let mut ways = vec![BigInt::from(1)];
    for &height in board.column_heights() {
        let mut next = ways.clone();
        next.push(BigInt::from(0));
        for (used, count) in ways.iter().enumerate() {
            if height > used as u32 {
                next[used + 1] += count * BigInt::from(height - used as u32);
            }
        }
        ways = next;
    }
    Ok(ways.into_iter().nth(rooks as usize).unwrap_or_else(|| BigInt::from(0)))
}

/// A diagram rewritten as its contour plus rook positions: the scanning
/// encoding. `rooks` holds `(row, column)` pairs, 0-based from the bottom
/// of the board, in column order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RookEncoding {
    /// The board drawn by the diagram's gate shapes.
    pub board: FerrersBoard,
    /// Rook positions: row `r` in column `c` binds the `r`-th output
    /// created to the input that owns column `c`.
    pub rooks: Vec<(u32, u32)>,
}

impl RookEncoding {
    /// Scans a diagram into its board-and-rooks form.
    pub fn scan(diagram: &LabelledDiagram) -> Self {
        let shapes = diagram.shape_sequence();
        let board = FerrersBoard::from_shape_sequence(&shapes);
        let row_offsets: Vec<u32> = shapes
            .iter()
            .scan(0, |acc, &(outputs, _)| {
                let start = *acc;
                *acc += outputs;
                Some(start)
            })
            .collect();
        let mut rooks = Vec::new();
        let mut column = 0;
        for gate in diagram.gates() {
            for binding in gate.bindings() {
                if let Some(output) = binding {
                    rooks.push((row_offsets[output.gate - 1] + output.slot, column));
                }
                column += 1;
            }
        }
        Self { board, rooks }
    }

    /// Rebuilds the diagram this encoding scans to.
    ///
    /// # Errors
    ///
    /// [`DiagramsError::InvalidEncoding`] if a rook lies outside the board
    /// or two rooks attack each other, and any [`DiagramsError`] the contour
    /// parse or diagram validation reports.
    pub fn rebuild(&self) -> Result<LabelledDiagram, DiagramsError> {
        let shapes = self.board.shape_sequence()?;
        let row_owner = {
            let mut owner = Vec::new();
            for (index, &(outputs, _)) in shapes.iter().enumerate() {
                for slot in 0..outputs {
                    owner.push(OutputRef { gate: index + 1, slot });
                }
            }
            owner
        };
        let heights = self.board.column_heights();
        let mut binding_of_column: Vec<Option<OutputRef>> = vec![None; heights.len()];
        for &(row, column) in &self.rooks {
            let column = column as usize;
            let in_board =
                column < heights.len() && row < heights[column];
            if !in_board {
                return Err(DiagramsError::InvalidEncoding {
                    reason: format!("rook ({row}, {column}) lies outside the board"),
                });
            }
            if binding_of_column[column].is_some() {
                return Err(DiagramsError::InvalidEncoding {
                    reason: format!("two rooks in column {column}"),
                });
            }
            binding_of_column[column] = Some(row_owner[row as usize]);
        }

        let mut gates = Vec::with_capacity(shapes.len());
        let mut column = 0;
        for &(outputs, inputs) in &shapes {
            let bindings: Vec<Option<OutputRef>> =
                binding_of_column[column..column + inputs as usize].to_vec();
            column += inputs as usize;
            gates.push(PlacedGate::new(outputs, bindings));
        }
        LabelledDiagram::new(gates)
    }
}
