use std::fmt;

use serde::{Deserialize, Serialize};

use super::edge::{colex, edge_count, EdgeId};
use crate::{Error, Result};

/// A total edge-coloring of `K_n` with colors `0..color_count`, stored per
/// edge in colex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Coloring {
    n: usize,
    colors: Vec<u32>,
    color_count: usize,
}

/// First violation found by [`validate_coloring`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColoringViolation {
    MissingEdge { edge: EdgeId },
    ExtraEdges { expected: usize, found: usize },
    ColorOutOfRange { edge: EdgeId, color: u32 },
    NonContiguousColors { unused: u32 },
}

impl fmt::Display for ColoringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringViolation::MissingEdge { edge } => write!(f, "edge {} has no color", edge.0),
            ColoringViolation::ExtraEdges { expected, found } => {
                write!(f, "expected {expected} edge colors, found {found}")
            }
            ColoringViolation::ColorOutOfRange { edge, color } => {
                write!(f, "edge {} has color {color} outside the palette", edge.0)
            }
            ColoringViolation::NonContiguousColors { unused } => {
                write!(f, "color {unused} is never used")
            }
        }
    }
}

impl Coloring {
    /// Wraps raw parts without checking them; see [`Coloring::validate`].
    pub fn from_parts(n: usize, colors: Vec<u32>, color_count: usize) -> Self {
        Self {
            n,
            colors,
            color_count,
        }
    }

    /// Builds a coloring from per-edge colors, taking the palette size from
    /// the largest color, and validates it.
    pub fn try_new(n: usize, colors: Vec<u32>) -> Result<Self> {
        let color_count = colors.iter().max().map_or(0, |&m| m as usize + 1);
        let c = Self::from_parts(n, colors, color_count);
        c.validate()
            .map_err(|v| Error::InvalidColoring(v.to_string()))?;
        Ok(c)
    }

    /// Builds a coloring from arbitrary class labels, renaming them to
    /// `0..m` in order of first appearance.
    pub fn from_labels(n: usize, labels: &[u32]) -> Result<Self> {
        let mut map = std::collections::HashMap::new();
        let colors = labels
            .iter()
            .map(|l| {
                let next = map.len() as u32;
                *map.entry(*l).or_insert(next)
            })
            .collect();
        Self::try_new(n, colors)
    }

    /// The one-color coloring.
    pub fn monochromatic(n: usize) -> Self {
        Self::from_parts(n, vec![0; edge_count(n)], usize::from(n >= 2))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, e: EdgeId) -> u32 {
        self.colors[e.0]
    }

    /// Color of `{u, v}`; `u != v`, both `< n`.
    #[inline]
    pub fn color_between(&self, u: usize, v: usize) -> u32 {
        self.colors[colex(u, v)]
    }

    pub fn validate(&self) -> std::result::Result<(), ColoringViolation> {
        let expected = edge_count(self.n);
        if self.colors.len() < expected {
            return Err(ColoringViolation::MissingEdge {
                edge: EdgeId(self.colors.len()),
            });
        }
        if self.colors.len() > expected {
            return Err(ColoringViolation::ExtraEdges {
                expected,
                found: self.colors.len(),
            });
        }
        let mut seen = vec![false; self.color_count];
        for (i, &c) in self.colors.iter().enumerate() {
            match seen.get_mut(c as usize) {
                Some(s) => *s = true,
                None => {
                    return Err(ColoringViolation::ColorOutOfRange {
                        edge: EdgeId(i),
                        color: c,
                    })
                }
            }
        }
        if let Some(unused) = seen.iter().position(|s| !s) {
            return Err(ColoringViolation::NonContiguousColors {
                unused: unused as u32,
            });
        }
        if self.n >= 2 && self.color_count == 0 {
            return Err(ColoringViolation::NonContiguousColors { unused: 0 });
        }
        Ok(())
    }
}

/// Checks totality and surjectivity of `c`, reporting the first violation.
pub fn validate_coloring(c: &Coloring) -> std::result::Result<(), ColoringViolation> {
    c.validate()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rainbow_k4_is_valid() {
        let c = Coloring::from_parts(4, (0..6).collect(), 6);
        assert_eq!(validate_coloring(&c), Ok(()));
    }

    #[test]
    fn two_colors_with_gap() {
        let c = Coloring::from_parts(4, vec![0, 2, 0, 2, 0, 2], 3);
        assert_eq!(
            validate_coloring(&c),
            Err(ColoringViolation::NonContiguousColors { unused: 1 })
        );
        assert!(Coloring::try_new(4, vec![0, 2, 0, 2, 0, 2]).is_err());
    }

    #[test]
    fn missing_edge() {
        let c = Coloring::from_parts(4, (0..5).collect(), 5);
        assert_eq!(
            validate_coloring(&c),
            Err(ColoringViolation::MissingEdge { edge: EdgeId(5) })
        );
    }

    #[test]
    fn out_of_range_and_extra() {
        let c = Coloring::from_parts(3, vec![0, 1, 3], 2);
        assert_eq!(
            c.validate(),
            Err(ColoringViolation::ColorOutOfRange {
                edge: EdgeId(2),
                color: 3
            })
        );
        let c = Coloring::from_parts(3, vec![0, 0, 0, 0], 1);
        assert!(matches!(
            c.validate(),
            Err(ColoringViolation::ExtraEdges { .. })
        ));
    }

    #[test]
    fn labels_are_renamed_by_first_appearance() {
        let c = Coloring::from_labels(3, &[7, 3, 7]).unwrap();
        assert_eq!(c.colors(), &[0, 1, 0]);
        assert_eq!(c.color_count(), 2);
        assert_eq!(c.color_between(2, 0), 1);
    }

    #[test]
    fn monochromatic() {
        assert_eq!(Coloring::monochromatic(5).validate(), Ok(()));
        assert_eq!(Coloring::monochromatic(1).validate(), Ok(()));
    }
}
