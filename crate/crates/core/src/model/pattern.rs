use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::edge::{choose2, edge_count, EdgeId};
use crate::{Error, Result};

/// Shape of a connected pattern component.
///
/// The declaration order is the normalized order: denser shapes first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ComponentKind {
    Clique,
    Cycle,
    Path,
}

impl ComponentKind {
    pub fn letter(self) -> char {
        match self {
            ComponentKind::Clique => 'K',
            ComponentKind::Cycle => 'C',
            ComponentKind::Path => 'P',
        }
    }

    fn min_size(self) -> usize {
        match self {
            ComponentKind::Clique | ComponentKind::Path => 2,
            ComponentKind::Cycle => 3,
        }
    }
}

/// A path, cycle or clique on `size` vertices (`P_l`, `C_l`, `K_l`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternComponent {
    kind: ComponentKind,
    size: usize,
}

impl PatternComponent {
    pub fn new(kind: ComponentKind, size: usize) -> Result<Self> {
        if size < kind.min_size() {
            return Err(Error::InvalidPattern(format!(
                "{}{} needs at least {} vertices",
                kind.letter(),
                size,
                kind.min_size()
            )));
        }
        Ok(Self { kind, size })
    }

    pub fn path(size: usize) -> Result<Self> {
        Self::new(ComponentKind::Path, size)
    }

    pub fn cycle(size: usize) -> Result<Self> {
        Self::new(ComponentKind::Cycle, size)
    }

    pub fn clique(size: usize) -> Result<Self> {
        Self::new(ComponentKind::Clique, size)
    }

    pub fn kind(&self) -> ComponentKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn edge_count(&self) -> usize {
        match self.kind {
            ComponentKind::Path => self.size - 1,
            ComponentKind::Cycle => self.size,
            ComponentKind::Clique => choose2(self.size),
        }
    }

    /// Vertex pairs of this component when its vertices are laid out as
    /// `tuple` (consecutive for a path, cyclic for a cycle, all pairs for a
    /// clique).
    pub fn edges_of(&self, tuple: &[usize]) -> Vec<(usize, usize)> {
        debug_assert_eq!(tuple.len(), self.size);
        match self.kind {
            ComponentKind::Path => tuple.windows(2).map(|w| (w[0], w[1])).collect(),
            ComponentKind::Cycle => {
                let mut out: Vec<_> = tuple.windows(2).map(|w| (w[0], w[1])).collect();
                out.push((tuple[self.size - 1], tuple[0]));
                out
            }
            ComponentKind::Clique => {
                let mut out = Vec::with_capacity(self.edge_count());
                for j in 1..tuple.len() {
                    for i in 0..j {
                        out.push((tuple[i], tuple[j]));
                    }
                }
                out
            }
        }
    }

    fn sort_key(&self) -> (ComponentKind, std::cmp::Reverse<usize>) {
        (self.kind, std::cmp::Reverse(self.size))
    }
}

impl PartialOrd for PatternComponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PatternComponent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl fmt::Display for PatternComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.size)
    }
}

/// A disjoint union of components, kept in normalized order (cliques, then
/// cycles, then paths; larger first within a kind).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PatternSpec {
    components: Vec<PatternComponent>,
}

impl PatternSpec {
    pub fn new(mut components: Vec<PatternComponent>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidPattern("empty pattern".into()));
        }
        components.sort();
        Ok(Self { components })
    }

    /// `k` copies of `P_4` plus `t` copies of `P_2`.
    pub fn kp4_tp2(k: usize, t: usize) -> Result<Self> {
        Self::from_groups(&[(ComponentKind::Path, 4, k), (ComponentKind::Path, 2, t)])
    }

    /// Builds a pattern from `(kind, size, multiplicity)` triples.
    pub fn from_groups(groups: &[(ComponentKind, usize, usize)]) -> Result<Self> {
        let mut components = Vec::new();
        for &(kind, size, count) in groups {
            let c = PatternComponent::new(kind, size)?;
            components.extend(std::iter::repeat_n(c, count));
        }
        Self::new(components)
    }

    pub fn components(&self) -> &[PatternComponent] {
        &self.components
    }

    pub fn vertex_count(&self) -> usize {
        self.components.iter().map(|c| c.size).sum()
    }

    pub fn edge_count(&self) -> usize {
        self.components.iter().map(|c| c.edge_count()).sum()
    }

    /// Distinct components with their multiplicities, in normalized order.
    pub fn groups(&self) -> Vec<(PatternComponent, usize)> {
        let mut out: Vec<(PatternComponent, usize)> = Vec::new();
        for &c in &self.components {
            match out.last_mut() {
                Some((last, count)) if *last == c => *count += 1,
                _ => out.push((c, 1)),
            }
        }
        out
    }

    /// Multiplicity of `kind`/`size` in the pattern.
    pub fn count_of(&self, kind: ComponentKind, size: usize) -> usize {
        self.components
            .iter()
            .filter(|c| c.kind == kind && c.size == size)
            .count()
    }

    pub fn is_linear_forest(&self) -> bool {
        self.components
            .iter()
            .all(|c| c.kind == ComponentKind::Path)
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, count)) in self.groups().into_iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if count > 1 {
                write!(f, "{count}")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `(vertex_count, edge_count)` of a pattern.
pub fn pattern_stats(p: &PatternSpec) -> (usize, usize) {
    (p.vertex_count(), p.edge_count())
}

/// A set of edges of `K_n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeSubset {
    edges: BTreeSet<EdgeId>,
}

impl EdgeSubset {
    pub fn new(n: usize, edges: impl IntoIterator<Item = EdgeId>) -> Result<Self> {
        let edges: BTreeSet<EdgeId> = edges.into_iter().collect();
        if let Some(e) = edges.iter().find(|e| e.0 >= edge_count(n)) {
            return Err(Error::InvalidEdge(format!("{e} is not an edge of K_{n}")));
        }
        Ok(Self { edges })
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().copied()
    }
}
