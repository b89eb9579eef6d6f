//! Decorated matrices: an alternating sign matrix plus a left/right choice
//! at each -1 cell. Decorations make the matrices equinumerous with
//! tournaments (there are 2^C(n,2) of each), and the choice disambiguates
//! the two outgoing directions available at a vertical ice vertex.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::asm::Asm;
use crate::six_vertex::{SixVertexConfig, VertexKind};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Choice {
    Left,
    Right,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DecorationError {
    #[error("matrix has {expected} entries equal to -1 but {got} choices were supplied")]
    WrongChoiceCount { expected: usize, got: usize },
}

/// An alternating sign matrix with one choice per -1 entry, in row-major
/// order of those entries.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DecoratedAsm {
    asm: Asm,
    choices: Vec<Choice>,
}

impl DecoratedAsm {
    pub fn new(asm: Asm, choices: Vec<Choice>) -> Result<Self, DecorationError> {
        let expected = asm.neg_ones() as usize;
        if choices.len() != expected {
            return Err(DecorationError::WrongChoiceCount { expected, got: choices.len() });
        }
        Ok(Self { asm, choices })
    }

    pub fn asm(&self) -> &Asm {
        &self.asm
    }

    pub fn choices(&self) -> &[Choice] {
        &self.choices
    }

    /// The initiating vertices (those with an in-arrow from the north: the
    /// SW, SE, and V kinds), scanned row-major. SW exits west, SE exits
    /// east, and a V vertex exits the way its decoration says.
    pub fn initiating_vertices(&self) -> Vec<InitiatingVertex> {
        let n = self.asm.n();
        let config = SixVertexConfig::from_asm(&self.asm);
        let mut out = Vec::new();
        let mut next_choice = 0;
        for row in 0..n {
            for col in 0..n {
                let direction = match config.kind(row, col) {
                    VertexKind::SouthWest => OutDirection::West,
                    VertexKind::SouthEast => OutDirection::East,
                    VertexKind::Vertical => {
                        let c = self.choices[next_choice];
                        next_choice += 1;
                        match c {
                            Choice::Left => OutDirection::West,
                            Choice::Right => OutDirection::East,
                        }
                    }
                    _ => continue,
                };
                out.push(InitiatingVertex { row, col, direction });
            }
        }
        out
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutDirection {
    West,
    East,
}

/// A vertex with an in-arrow from the north, with 0-based grid coordinates
/// and the horizontal direction the flow leaves it.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct InitiatingVertex {
    pub row: usize,
    pub col: usize,
    pub direction: OutDirection,
}

/// All decorations of all matrices of order `n`: matrices in enumeration
/// order, and for each matrix the 2^N choice vectors in ascending binary
/// order with bit k (from the least significant) giving the k-th -1 its
/// choice, set = Left.
pub fn enumerate_decorated(n: usize) -> impl Iterator<Item = DecoratedAsm> {
    crate::asm::enumerate_asms(n).flat_map(|asm| {
        let negs = asm.neg_ones() as u32;
        (0u32..1 << negs).map(move |mask| {
            let choices = (0..negs)
                .map(|k| if mask >> k & 1 == 1 { Choice::Left } else { Choice::Right })
                .collect();
            DecoratedAsm { asm: asm.clone(), choices }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use OutDirection::{East, West};

    fn asm(rows: &[&[i8]]) -> Asm {
        Asm::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn choice_count_is_validated() {
        let a = asm(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]]);
        assert!(DecoratedAsm::new(a.clone(), vec![Choice::Left]).is_ok());
        assert_eq!(
            DecoratedAsm::new(a, vec![]),
            Err(DecorationError::WrongChoiceCount { expected: 1, got: 0 })
        );
        assert!(DecoratedAsm::new(Asm::identity(2), vec![]).is_ok());
    }

    #[test]
    fn identity_initiates_east_at_its_se_cells() {
        let d = DecoratedAsm::new(Asm::identity(3), vec![]).unwrap();
        let records = d.initiating_vertices();
        assert_eq!(
            records,
            vec![
                InitiatingVertex { row: 1, col: 0, direction: East },
                InitiatingVertex { row: 2, col: 0, direction: East },
                InitiatingVertex { row: 2, col: 1, direction: East },
            ]
        );
    }

    #[test]
    fn vertical_vertex_follows_its_decoration() {
        let a = asm(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]]);
        let right = DecoratedAsm::new(a.clone(), vec![Choice::Right]).unwrap();
        assert_eq!(
            right.initiating_vertices(),
            vec![
                InitiatingVertex { row: 1, col: 1, direction: East },
                InitiatingVertex { row: 2, col: 0, direction: East },
                InitiatingVertex { row: 2, col: 2, direction: West },
            ]
        );
        let left = DecoratedAsm::new(a, vec![Choice::Left]).unwrap();
        assert_eq!(left.initiating_vertices()[0].direction, West);
        // The same cells initiate regardless of decoration.
        let cells =
            |d: &DecoratedAsm| d.initiating_vertices().iter().map(|v| (v.row, v.col)).collect::<Vec<_>>();
        assert_eq!(cells(&right), cells(&left));
    }

    #[test]
    fn decoration_count_doubles_per_minus_one() {
        // Orders 1..4: sum over matrices of 2^negOnes equals 2^C(n,2).
        let expected = [1usize, 2, 8, 64];
        for (idx, &count) in expected.iter().enumerate() {
            let n = idx + 1;
            assert_eq!(enumerate_decorated(n).count(), count, "order {n}");
        }
    }

    #[test]
    fn masks_enumerate_choices_in_binary_order() {
        let a = asm(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]]);
        let decorations: Vec<DecoratedAsm> = enumerate_decorated(3)
            .filter(|d| d.asm() == &a)
            .collect();
        assert_eq!(decorations.len(), 2);
        assert_eq!(decorations[0].choices(), &[Choice::Right]);
        assert_eq!(decorations[1].choices(), &[Choice::Left]);
    }
}
